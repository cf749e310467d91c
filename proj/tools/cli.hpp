#pragma once

#include <hhl/twostage.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhl::cli {

enum class Command
{
    gen,
    learn,
    bench,
    bounds,
    cf_verify,
    cf_search,
    cf_bounds,
    twostage,
};

enum class Format
{
    json,
    csv,
};

struct RunConfig
{
    Command command = Command::bounds;
    std::optional<std::size_t> t;
    std::optional<std::size_t> s;
    std::optional<std::size_t> l;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 1;
    double epsilon = 0.05;
    Format format = Format::json;
    unsigned jobs = 1;
    std::optional<std::string> sweep;
    bool budget_enforce = true;
    std::optional<std::string> out;
    std::optional<std::string> in;
    std::optional<std::string> transcript;
    std::optional<std::string> code_out;
    std::size_t max_n = 64;
    double work_limit = 1e8;
    bool disjoint = false;
    StageOneMode mode = StageOneMode::scan;
    std::optional<std::uint64_t> layers;
};

/// Malformed command line; the message is ready for stderr.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// --help was given; `text` is the rendered help.
struct HelpRequested
{
    std::string text;
};

/**
 * Parses arguments (program name excluded). Values come from flags first,
 * then HHL_<FLAG> environment variables (HHL_T, HHL_SWEEP, HHL_BUDGET_ENFORCE,
 * ...), then defaults. Throws UsageError or HelpRequested.
 */
RunConfig parse_config(const std::vector<std::string>& args);

/// Runs a parsed command. Machine output goes to `out` (or the --out file),
/// diagnostics to `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_config + run with the exit codes of the hhl tool:
/// 0 success, 1 runtime failure, 2 usage error.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hhl::cli
