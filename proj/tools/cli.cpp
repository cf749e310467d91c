#include "cli.hpp"

#include <hhl/bench.hpp>
#include <hhl/bounds.hpp>
#include <hhl/coverfree.hpp>
#include <hhl/json_io.hpp>
#include <hhl/learner.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>

namespace hhl::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* footer = R"(CSV columns:
  bench     t,s,l,seed,queries,lower_bound,rate,budget,within_budget
  twostage  trial,seed,t,s,l,epsilon,layers,stage1_queries,stage2_queries,success,recovered_edges
  bounds    t,s,l,family_size,lower_bound,log2_asymptotic,learner_budget
Every flag can also be set through HHL_<FLAG> (for example HHL_T, HHL_BUDGET_ENFORCE).
Exit status: 0 success, 1 runtime failure, 2 usage error.)";

std::string env_name(const std::string& flag)
{
    std::string name = "HHL_";
    for (char c : flag.substr(2))
        name += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return name;
}

template <typename T>
CLI::Option* add(CLI::App* app, const std::string& flag, T& target, const std::string& help)
{
    return app->add_option(flag, target, help)->envname(env_name(flag));
}

struct Binder
{
    RunConfig& cfg;
    std::string format = "json";
    std::string budget = "on";
    std::string mode = "scan";

    void params(CLI::App* app, bool t_required, bool s_required, bool l_required)
    {
        auto* t = add(app, "--t", cfg.t, "number of vertices");
        auto* s = add(app, "--s", cfg.s, "maximum number of edges");
        auto* l = add(app, "--l", cfg.l, "maximum edge size");
        if (t_required)
            t->required();
        if (s_required)
            s->required();
        if (l_required)
            l->required();
    }
    CLI::Option* seed(CLI::App* app, bool required)
    {
        auto* o = add(app, "--seed", cfg.seed, "random seed");
        return required ? o->required() : o;
    }
    void formats(CLI::App* app)
    {
        add(app, "--format", format, "output encoding")->check(CLI::IsMember({"json", "csv"}));
    }
    void out(CLI::App* app) { add(app, "--out", cfg.out, "write output to this file instead of stdout"); }
    void jobs(CLI::App* app) { add(app, "--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u)); }
    void trials(CLI::App* app)
    {
        add(app, "--trials", cfg.trials, "trials per point")->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    }
};

void require_csv_support(const RunConfig& cfg, const char* command)
{
    if (cfg.format == Format::csv)
        throw UsageError(std::string("--format csv is not available for ") + command);
}

FamilyParams params_of(const RunConfig& cfg)
{
    try {
        return FamilyParams(*cfg.t, *cfg.s, *cfg.l);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::ifstream open_in(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return in;
}

json bigint_json(const BigInt& v)
{
    if (v <= std::numeric_limits<std::uint64_t>::max())
        return v.convert_to<std::uint64_t>();
    return v.str();
}

json code_rows(const BinaryCode& code)
{
    auto rows = json::array();
    for (std::size_t r = 0; r < code.rows(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < code.cols(); ++c)
            line += code.get(r, c) ? '1' : '0';
        rows.push_back(line);
    }
    return rows;
}

json columns_as_vertices(const std::vector<std::size_t>& cols)
{
    auto out = json::array();
    for (auto c : cols)
        out.push_back(c + 1);
    return out;
}

void cmd_gen(const RunConfig& cfg, std::ostream& out)
{
    require_csv_support(cfg, "gen");
    auto p = params_of(cfg);
    if (cfg.disjoint && p.s * p.l > p.t)
        throw UsageError("--disjoint needs s*l <= t");
    auto h = cfg.disjoint ? random_disjoint_instance(p, *cfg.seed) : random_family_instance(p, true, *cfg.seed);
    write_hypergraph(out, h);
}

int cmd_learn(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    require_csv_support(cfg, "learn");
    auto load = [&] {
        if (cfg.in) {
            auto in = open_in(*cfg.in);
            auto h = read_hypergraph(in);
            if (cfg.t && *cfg.t != h.t())
                throw UsageError("--t disagrees with the t in " + *cfg.in);
            return h;
        }
        if (!cfg.t || !cfg.seed)
            throw UsageError("learn needs --in FILE, or --t and --seed to generate an instance");
        return random_family_instance(params_of(cfg), true, *cfg.seed);
    };
    const Hypergraph hidden = load();
    RunConfig with_t = cfg;
    with_t.t = hidden.t();
    auto p = params_of(with_t);

    std::optional<std::uint64_t> budget;
    if (cfg.budget_enforce)
        budget = learner_query_budget(p);
    Oracle oracle(hidden, budget);

    auto write_transcript = [&] {
        if (!cfg.transcript)
            return;
        std::ofstream t(*cfg.transcript);
        if (!t)
            throw std::runtime_error("cannot write " + *cfg.transcript);
        oracle.transcript().write_jsonl(t);
    };

    std::optional<LearnReport> report;
    try {
        report = learn(oracle, p);
    } catch (const QueryBudgetExceeded& e) {
        write_transcript();
        err << "hhl: " << e.what() << '\n';
        return 1;
    }
    write_transcript();
    out << to_json(*report).dump() << '\n';
    if (report->result != minimal_edges(hidden)) {
        err << "hhl: learned hypergraph differs from the hidden one\n";
        return 1;
    }
    return 0;
}

void cmd_bench(const RunConfig& cfg, std::ostream& out)
{
    BenchConfig bc;
    bc.s = *cfg.s;
    bc.l = *cfg.l;
    if (cfg.sweep) {
        try {
            bc.ts = parse_sweep(*cfg.sweep).values();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (cfg.t) {
        bc.ts = {*cfg.t};
    } else {
        throw UsageError("bench needs --sweep t_min:t_max:factor or --t");
    }
    for (auto t : bc.ts)
        if (bc.l > t)
            throw UsageError("every t of the sweep must be at least l");
    bc.trials = cfg.trials;
    bc.seed = *cfg.seed;
    bc.jobs = cfg.jobs;
    bc.enforce_budget = cfg.budget_enforce;

    auto rows = run_bench(bc);
    if (cfg.format == Format::csv)
        write_bench_csv(out, rows);
    else
        out << bench_to_json(rows).dump() << '\n';
}

void cmd_bounds(const RunConfig& cfg, std::ostream& out)
{
    auto p = params_of(cfg);
    auto size = family_size_exact(p);
    auto lb = info_lower_bound(p);
    auto log2_asym = log2_family_size_asymptotic(p);
    auto budget = learner_query_budget(p);
    if (cfg.format == Format::csv) {
        out << "t,s,l,family_size,lower_bound,log2_asymptotic,learner_budget\n";
        out << p.t << ',' << p.s << ',' << p.l << ',' << size.str() << ',' << lb << ',' << json(log2_asym).dump()
            << ',' << budget << '\n';
        return;
    }
    json j{{"t", p.t},
           {"s", p.s},
           {"l", p.l},
           {"family_size", bigint_json(size)},
           {"lower_bound", lb},
           {"log2_asymptotic", log2_asym},
           {"learner_budget", budget}};
    out << j.dump() << '\n';
}

void cmd_cf_verify(const RunConfig& cfg, std::ostream& out)
{
    require_csv_support(cfg, "cf-verify");
    auto in = open_in(*cfg.in);
    auto code = read_code(in);
    const auto s = *cfg.s;
    const auto l = *cfg.l;
    if (s + l > code.cols())
        throw UsageError("s + l exceeds the number of columns");
    auto work = verification_work(code, s, l);
    if (work > cfg.work_limit)
        throw std::runtime_error("verification needs about " + json(work).dump() + " pair-row checks, above --work-limit " +
                                 json(cfg.work_limit).dump());

    auto violation = find_violation(code, s, l, cfg.jobs);
    json j{{"rows", code.rows()}, {"t", code.cols()}, {"s", s}, {"l", l}, {"cover_free", !violation}};
    if (violation)
        j["violation"] = {{"zero", columns_as_vertices(violation->zero_columns)},
                          {"one", columns_as_vertices(violation->one_columns)}};
    else
        j["violation"] = nullptr;
    out << j.dump() << '\n';
}

void cmd_cf_search(const RunConfig& cfg, std::ostream& out)
{
    require_csv_support(cfg, "cf-search");
    const auto t = *cfg.t;
    const auto s = *cfg.s;
    const auto l = *cfg.l;
    if (s + l > t)
        throw UsageError("cf-search needs s + l <= t");
    auto work = verification_work(cfg.max_n, t, s, l);
    if (work > cfg.work_limit)
        throw std::runtime_error("verifying codes of up to " + std::to_string(cfg.max_n) +
                                 " rows exceeds --work-limit " + json(cfg.work_limit).dump());

    auto code = search_random_cf_code(t, s, l, cfg.max_n, *cfg.seed);
    json j{{"t", t}, {"s", s}, {"l", l}, {"max_n", cfg.max_n}, {"found", code.has_value()}};
    if (code) {
        j["rows"] = code->rows();
        j["code"] = code_rows(*code);
        if (cfg.code_out) {
            std::ofstream f(*cfg.code_out);
            if (!f)
                throw std::runtime_error("cannot write " + *cfg.code_out);
            write_code(f, *code);
        }
    }
    out << j.dump() << '\n';
}

void cmd_cf_bounds(const RunConfig& cfg, std::ostream& out)
{
    require_csv_support(cfg, "cf-bounds");
    RateBounds b;
    try {
        b = cf_rate_bounds(*cfg.s, *cfg.l);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    json j{{"s", *cfg.s}, {"l", *cfg.l}, {"lower", b.lower}, {"upper", b.upper}, {"advisory", true}};
    out << j.dump() << '\n';
}

void cmd_twostage(const RunConfig& cfg, std::ostream& out)
{
    auto p = params_of(cfg);
    if (p.s * p.l > p.t)
        throw UsageError("twostage needs s*l <= t");
    TwoStageBenchConfig bc{p, cfg.epsilon, cfg.trials, 0, 1, {}};
    bc.trials = cfg.trials;
    bc.seed = *cfg.seed;
    bc.jobs = cfg.jobs;
    bc.options.mode = cfg.mode;
    bc.options.layers = cfg.layers;
    auto result = run_twostage_bench(bc);
    if (cfg.format == Format::csv)
        write_twostage_csv(out, result);
    else
        out << twostage_to_json(result).dump() << '\n';
}

} // namespace

RunConfig parse_config(const std::vector<std::string>& args)
{
    RunConfig cfg;
    Binder b{cfg};

    CLI::App app{"Learning hidden hypergraphs with edge-detecting queries", "hhl"};
    app.footer(footer);
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every command");

    auto* gen = app.add_subcommand("gen", "draw a random hidden hypergraph as JSON");
    b.params(gen, true, true, true);
    b.seed(gen, true);
    gen->add_flag("--disjoint", cfg.disjoint, "exactly s disjoint edges of size exactly l")->envname("HHL_DISJOINT");
    b.formats(gen);
    b.out(gen);

    auto* learn_cmd = app.add_subcommand("learn", "learn a hidden hypergraph adaptively");
    b.params(learn_cmd, false, true, true);
    b.seed(learn_cmd, false);
    add(learn_cmd, "--in", cfg.in, "hidden hypergraph JSON file")->check(CLI::ExistingFile);
    add(learn_cmd, "--transcript", cfg.transcript, "write the query transcript as JSON lines");
    add(learn_cmd, "--budget-enforce", b.budget, "stop at the worst-case query budget")->check(CLI::IsMember({"on", "off"}));
    b.formats(learn_cmd);
    b.out(learn_cmd);

    auto* bench = app.add_subcommand("bench", "query counts of the adaptive learner over a sweep of t");
    b.params(bench, false, true, true);
    b.seed(bench, true);
    add(bench, "--sweep", cfg.sweep, "t_min:t_max:factor");
    b.trials(bench);
    b.jobs(bench);
    add(bench, "--budget-enforce", b.budget, "run each learner under its query budget")->check(CLI::IsMember({"on", "off"}));
    b.formats(bench);
    b.out(bench);

    auto* bounds = app.add_subcommand("bounds", "family size and information lower bound");
    b.params(bounds, true, true, true);
    b.formats(bounds);
    b.out(bounds);

    auto* verify = app.add_subcommand("cf-verify", "check whether a code is cover-free");
    add(verify, "--in", cfg.in, "code file: \"N t\" header, then N rows of 0/1")->required()->check(CLI::ExistingFile);
    add(verify, "--s", cfg.s, "size of the zero set")->required();
    add(verify, "--l", cfg.l, "size of the one set")->required();
    b.jobs(verify);
    add(verify, "--work-limit", cfg.work_limit, "refuse codes needing more pair-row checks");
    b.formats(verify);
    b.out(verify);

    auto* search = app.add_subcommand("cf-search", "random search for a cover-free code");
    b.params(search, true, true, true);
    b.seed(search, true);
    add(search, "--max-n", cfg.max_n, "largest number of rows tried");
    add(search, "--work-limit", cfg.work_limit, "refuse searches needing more pair-row checks per code");
    add(search, "--code-out", cfg.code_out, "also write the code in the text code format");
    b.formats(search);
    b.out(search);

    auto* cfb = app.add_subcommand("cf-bounds", "asymptotic rate bounds of cover-free codes (advisory)");
    add(cfb, "--s", cfg.s, "size of the zero set")->required();
    add(cfb, "--l", cfg.l, "size of the one set")->required();
    b.formats(cfb);
    b.out(cfb);

    auto* two = app.add_subcommand("twostage", "two-stage learning trials on disjoint instances");
    b.params(two, true, true, true);
    b.seed(two, true);
    add(two, "--epsilon", cfg.epsilon, "target failure probability")->check(CLI::Range(0.0, 1.0));
    add(two, "--layers", cfg.layers, "stage-one layers (default: the smallest count meeting epsilon)");
    add(two, "--mode", b.mode, "scan stops at the first good layer; batch issues every layer")
        ->check(CLI::IsMember({"scan", "batch"}));
    b.trials(two);
    b.jobs(two);
    b.formats(two);
    b.out(two);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        throw HelpRequested{sub->help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const std::map<const CLI::App*, Command> commands{
        {gen, Command::gen},       {learn_cmd, Command::learn},   {bench, Command::bench},
        {bounds, Command::bounds}, {verify, Command::cf_verify},  {search, Command::cf_search},
        {cfb, Command::cf_bounds}, {two, Command::twostage},
    };
    cfg.command = commands.at(app.get_subcommands().front());
    cfg.format = b.format == "csv" ? Format::csv : Format::json;
    cfg.budget_enforce = b.budget == "on";
    cfg.mode = b.mode == "batch" ? StageOneMode::batch : StageOneMode::scan;

    if (cfg.command == Command::twostage && (cfg.epsilon <= 0.0 || cfg.epsilon >= 1.0))
        throw UsageError("--epsilon must lie strictly between 0 and 1");
    if (cfg.layers && *cfg.layers == 0)
        throw UsageError("--layers must be positive");
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& stdout_stream, std::ostream& err)
{
    std::ofstream file;
    if (cfg.out) {
        file.open(*cfg.out);
        if (!file)
            throw std::runtime_error("cannot write " + *cfg.out);
    }
    std::ostream& out = cfg.out ? file : stdout_stream;

    int status = 0;
    switch (cfg.command) {
    case Command::gen:
        cmd_gen(cfg, out);
        break;
    case Command::learn:
        status = cmd_learn(cfg, out, err);
        break;
    case Command::bench:
        cmd_bench(cfg, out);
        break;
    case Command::bounds:
        cmd_bounds(cfg, out);
        break;
    case Command::cf_verify:
        cmd_cf_verify(cfg, out);
        break;
    case Command::cf_search:
        cmd_cf_search(cfg, out);
        break;
    case Command::cf_bounds:
        cmd_cf_bounds(cfg, out);
        break;
    case Command::twostage:
        cmd_twostage(cfg, out);
        break;
    }
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing output");
    return status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        return run(parse_config(args), out, err);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << "hhl: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    } catch (const std::exception& e) {
        err << "hhl: " << e.what() << '\n';
        return 1;
    }
}

} // namespace hhl::cli
