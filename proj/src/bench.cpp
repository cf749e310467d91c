#include <hhl/bench.hpp>
#include <hhl/bounds.hpp>
#include <hhl/combinatorics.hpp>
#include <hhl/json_io.hpp>
#include <hhl/learner.hpp>

#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <mutex>
#include <thread>

namespace hhl {

namespace {

template <typename F>
void parallel_for(std::size_t n, unsigned jobs, F&& body)
{
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(jobs, n); ++w) {
            pool.emplace_back([&] {
                for (auto i = next++; i < n; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

std::string edges_text(const Hypergraph& h)
{
    std::string out;
    for (const auto& e : h.edges()) {
        if (!out.empty())
            out += ' ';
        for (std::size_t i = 0; i < e.vertices().size(); ++i)
            out += (i ? "-" : "") + std::to_string(e.vertices()[i]);
    }
    return out;
}

} // namespace

std::vector<std::size_t> Sweep::values() const
{
    if (t_min < 2 || t_max < t_min || factor < 2)
        throw std::invalid_argument("sweep needs 2 <= t_min <= t_max and factor >= 2");
    std::vector<std::size_t> out;
    for (std::size_t t = t_min; t <= t_max; t *= factor) {
        out.push_back(t);
        if (t > t_max / factor)
            break;
    }
    return out;
}

Sweep parse_sweep(const std::string& text)
{
    std::istringstream in(text);
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    char colon1 = 0;
    char colon2 = 0;
    std::string rest;
    if (!(in >> a >> colon1 >> b >> colon2 >> c) || colon1 != ':' || colon2 != ':' || (in >> rest))
        throw std::invalid_argument("sweep must look like t_min:t_max:factor, got \"" + text + "\"");
    Sweep sweep{a, b, c};
    sweep.values();
    return sweep;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) noexcept
{
    return mix_seed(base_seed, trial);
}

std::vector<BenchRow> run_bench(const BenchConfig& config)
{
    if (config.trials < 1)
        throw std::invalid_argument("bench needs at least one trial");
    if (config.ts.empty())
        throw std::invalid_argument("bench needs at least one t");

    std::map<std::size_t, std::uint64_t> lower_bounds;
    for (auto t : config.ts)
        lower_bounds[t] = info_lower_bound(FamilyParams(t, config.s, config.l));

    std::vector<BenchRow> rows(config.ts.size() * config.trials);
    parallel_for(rows.size(), config.jobs, [&](std::size_t index) {
        const auto t = config.ts[index / config.trials];
        const auto trial = index % config.trials;
        const FamilyParams params(t, config.s, config.l);
        const auto seed = trial_seed(config.seed, trial);
        const auto budget = learner_query_budget(params);

        auto hidden = random_family_instance(params, true, seed);
        Oracle oracle(std::move(hidden), config.enforce_budget ? std::optional(budget) : std::nullopt);
        bool within = true;
        try {
            learn(oracle, params);
        } catch (const QueryBudgetExceeded&) {
            within = false;
        }
        const auto queries = oracle.query_count();
        within = within && queries <= budget;
        rows[index] = BenchRow{t,       config.s, config.l,   seed, queries, lower_bounds.at(t),
                               rate_point(t, queries).rate, budget, within};
    });
    return rows;
}

nlohmann::ordered_json bench_to_json(const std::vector<BenchRow>& rows)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : rows)
        out.push_back({{"t", r.t},
                       {"s", r.s},
                       {"l", r.l},
                       {"seed", r.seed},
                       {"queries", r.queries},
                       {"lower_bound", r.lower_bound},
                       {"rate", r.rate},
                       {"budget", r.budget},
                       {"within_budget", r.within_budget}});
    return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows)
{
    out << "t,s,l,seed,queries,lower_bound,rate,budget,within_budget\n";
    for (const auto& r : rows)
        out << r.t << ',' << r.s << ',' << r.l << ',' << r.seed << ',' << r.queries << ',' << r.lower_bound << ','
            << nlohmann::ordered_json(r.rate).dump() << ',' << r.budget << ',' << (r.within_budget ? "true" : "false")
            << '\n';
}

bool respects_two_rounds(const QueryTranscript& transcript)
{
    int current = stage_one_round;
    for (const auto& e : transcript.entries()) {
        if (e.round != stage_one_round && e.round != stage_two_round)
            return false;
        if (e.round < current)
            return false;
        current = e.round;
    }
    return true;
}

TwoStageBenchResult run_twostage_bench(const TwoStageBenchConfig& config)
{
    if (config.trials < 1)
        throw std::invalid_argument("two-stage bench needs at least one trial");
    if (config.params.s * config.params.l > config.params.t)
        throw std::invalid_argument("two-stage bench needs s*l <= t");

    std::vector<std::optional<TwoStageTrial>> slots(config.trials);
    parallel_for(config.trials, config.jobs, [&](std::size_t trial) {
        const auto seed = trial_seed(config.seed, trial);
        auto hidden = random_disjoint_instance(config.params, mix_seed(seed, 1));
        Oracle oracle(hidden);
        auto report = two_stage_learn(oracle, config.params, config.epsilon, seed, config.options);
        bool exact = report.success && report.recovered && *report.recovered == hidden;
        bool rounds_ok = respects_two_rounds(oracle.transcript());
        slots[trial] = TwoStageTrial{seed, std::move(hidden), std::move(report), exact, rounds_ok};
    });

    TwoStageBenchResult result;
    double stage1 = 0.0;
    double stage2 = 0.0;
    for (auto& slot : slots) {
        auto& trial = *slot;
        result.aggregate.successes += trial.report.success ? 1 : 0;
        result.aggregate.exact += trial.exact ? 1 : 0;
        stage1 += static_cast<double>(trial.report.stage1_queries);
        stage2 += static_cast<double>(trial.report.stage2_queries);
        result.trials.push_back(std::move(trial));
    }
    const auto n = static_cast<double>(config.trials);
    result.aggregate.trials = config.trials;
    result.aggregate.success_rate = static_cast<double>(result.aggregate.successes) / n;
    result.aggregate.mean_stage1 = stage1 / n;
    result.aggregate.mean_stage2 = stage2 / n;
    return result;
}

nlohmann::ordered_json twostage_to_json(const TwoStageBenchResult& result)
{
    auto trials = nlohmann::ordered_json::array();
    for (const auto& trial : result.trials)
        trials.push_back(to_json(trial.report));
    return {{"trials", trials},
            {"aggregate",
             {{"success_rate", result.aggregate.success_rate},
              {"mean_stage1", result.aggregate.mean_stage1},
              {"mean_stage2", result.aggregate.mean_stage2}}}};
}

void write_twostage_csv(std::ostream& out, const TwoStageBenchResult& result)
{
    out << "trial,seed,t,s,l,epsilon,layers,stage1_queries,stage2_queries,success,recovered_edges\n";
    for (std::size_t i = 0; i < result.trials.size(); ++i) {
        const auto& trial = result.trials[i];
        const auto& r = trial.report;
        out << i << ',' << trial.seed << ',' << r.t << ',' << r.s << ',' << r.l << ','
            << nlohmann::ordered_json(r.epsilon).dump() << ',' << r.layers << ',' << r.stage1_queries << ','
            << r.stage2_queries << ',' << (r.success ? "true" : "false") << ','
            << (r.recovered ? edges_text(*r.recovered) : "") << '\n';
    }
}

} // namespace hhl
