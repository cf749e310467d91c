#pragma once

#include <hhl/core.hpp>
#include <hhl/twostage.hpp>

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hhl {

/// Geometric sweep t_min, t_min*factor, ... up to t_max inclusive.
struct Sweep
{
    std::size_t t_min;
    std::size_t t_max;
    std::size_t factor;

    std::vector<std::size_t> values() const;
};

/// Parses "t_min:t_max:factor"; throws std::invalid_argument.
Sweep parse_sweep(const std::string& text);

/// Seed of trial `trial`. It does not depend on t, so every point of a
/// sweep sees the same sequence of instance draws.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) noexcept;

struct BenchConfig
{
    std::size_t s;
    std::size_t l;
    std::vector<std::size_t> ts;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    /// Run each learner under an oracle budget of learner_query_budget().
    bool enforce_budget = true;
};

struct BenchRow
{
    std::size_t t;
    std::size_t s;
    std::size_t l;
    std::uint64_t seed;
    std::uint64_t queries;
    std::uint64_t lower_bound;
    double rate;
    std::uint64_t budget;
    bool within_budget;
};

/// One row per (t, trial), ordered by t then trial. Each trial draws a
/// Sperner instance with random_family_instance and learns it.
std::vector<BenchRow> run_bench(const BenchConfig& config);

nlohmann::ordered_json bench_to_json(const std::vector<BenchRow>& rows);
/// Columns: t,s,l,seed,queries,lower_bound,rate,budget,within_budget
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

struct TwoStageBenchConfig
{
    FamilyParams params;
    double epsilon;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    TwoStageOptions options;
};

struct TwoStageTrial
{
    std::uint64_t seed;
    Hypergraph hidden;
    TwoStageReport report;
    /// Success and recovered == hidden.
    bool exact;
    /// Transcript tags are stage one then stage two, in that order only.
    bool rounds_ok;
};

struct TwoStageAggregate
{
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t exact = 0;
    double success_rate = 0.0;
    double mean_stage1 = 0.0;
    double mean_stage2 = 0.0;
};

struct TwoStageBenchResult
{
    std::vector<TwoStageTrial> trials;
    TwoStageAggregate aggregate;
};

/// Each trial draws a disjoint instance and runs two_stage_learn on it.
TwoStageBenchResult run_twostage_bench(const TwoStageBenchConfig& config);

/// {"trials": [report...], "aggregate": {"success_rate","mean_stage1","mean_stage2"}}
nlohmann::ordered_json twostage_to_json(const TwoStageBenchResult& result);
/// Columns: trial,seed,t,s,l,epsilon,layers,stage1_queries,stage2_queries,success,recovered_edges
void write_twostage_csv(std::ostream& out, const TwoStageBenchResult& result);

/// True iff entries are tagged stage one, then (optionally) stage two, with
/// no other tags and no return to stage one.
bool respects_two_rounds(const QueryTranscript& transcript);

} // namespace hhl
