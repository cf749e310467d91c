#include <hhl/learner.hpp>
#include <hhl/combinatorics.hpp>

#include <algorithm>
#include <limits>

namespace hhl {

namespace {

bool contains_known_edge(const std::vector<Edge>& known, const std::vector<Vertex>& sorted_set)
{
    return std::any_of(known.begin(), known.end(), [&](const Edge& e) {
        return std::includes(sorted_set.begin(), sorted_set.end(), e.vertices().begin(), e.vertices().end());
    });
}

std::vector<Vertex> pick(const std::vector<Vertex>& pool, std::span<const std::size_t> idx)
{
    std::vector<Vertex> out;
    out.reserve(idx.size());
    for (auto i : idx)
        out.push_back(pool[i]);
    return out;
}

/// Bisection invariant: Q(S'') = 0 and Q(S' ∪ S'') = 1.
void audit_bisection(const Hypergraph* audit, const VertexSet& rest, const VertexSet& outside)
{
    if (audit == nullptr)
        return;
    if (!is_independent(*audit, outside))
        throw ContractViolation("vertex search: excluded part " + outside.to_string() + " contains an edge");
    if (is_independent(*audit, rest | outside))
        throw ContractViolation("vertex search: candidate part lost every new edge");
}

void audit_edges(const Hypergraph& audit, const std::vector<Edge>& known, const VertexSet& found, std::size_t l)
{
    auto minimal = minimal_edges(audit);
    for (const auto& e : known) {
        if (!e.is_subset_of(found) || e.size() > l)
            throw ContractViolation("edge search returned " + e.to_string() + " outside F or above size l");
        if (std::find(minimal.edges().begin(), minimal.edges().end(), e) == minimal.edges().end())
            throw ContractViolation("edge search returned " + e.to_string() + ", not a minimal hidden edge");
    }
    for (std::size_t i = 0; i < known.size(); ++i)
        for (std::size_t j = 0; j < known.size(); ++j)
            if (i != j && known[i].is_subset_of(known[j]))
                throw ContractViolation("edge search result is not an antichain");
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept
{
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

} // namespace

Vertex find_active_vertex(Oracle& oracle, const VertexSet& s, const VertexSet& found, const Hypergraph* audit)
{
    VertexSet rest = s - found;
    VertexSet outside = s & found;
    std::size_t n = rest.size();
    if (n == 0)
        throw ContractViolation("vertex search called with S contained in F");
    audit_bisection(audit, rest, outside);

    while (n > 1) {
        auto [low, high] = rest.split_half();
        if (oracle.query(low | outside)) {
            rest = std::move(low);
            n = (n + 1) / 2;
        } else {
            outside |= low;
            rest = std::move(high);
            n = n / 2;
        }
        audit_bisection(audit, rest, outside);
    }
    Vertex v = rest.first();
    if (audit != nullptr && !audit->active_vertices().contains(v))
        throw ContractViolation("vertex search returned inactive vertex " + std::to_string(v));
    return v;
}

std::vector<Edge> find_edges_on(Oracle& oracle, const VertexSet& found, std::size_t l, std::uint64_t* dead_deletions)
{
    const auto pool = found.members();
    const auto t = found.universe_size();
    std::vector<Edge> known;

    for_each_subset_by_size(pool.size(), 1, l, [&](std::span<const std::size_t> idx) {
        auto candidate = pick(pool, idx);
        if (contains_known_edge(known, candidate))
            return true;
        if (!oracle.query(VertexSet(t, candidate)))
            return true;
        Edge fresh(t, std::move(candidate));
        auto removed = std::erase_if(known, [&](const Edge& e) { return fresh.is_subset_of(e) && !(fresh == e); });
        if (dead_deletions != nullptr)
            *dead_deletions += removed;
        known.push_back(std::move(fresh));
        return true;
    });

    std::sort(known.begin(), known.end());
    return known;
}

std::optional<VertexSet> find_next_query(Oracle& oracle, const std::vector<Edge>& known, std::size_t t)
{
    VertexSet covered(t);
    for (const auto& e : known)
        for (auto v : e.vertices())
            covered.insert(v);
    const auto pool = covered.members();
    const VertexSet base = covered.complement();

    std::optional<VertexSet> hit;
    for_each_subset_by_size(pool.size(), 0, pool.size(), [&](std::span<const std::size_t> idx) {
        auto extra = pick(pool, idx);
        if (contains_known_edge(known, extra))
            return true;
        VertexSet candidate = base | VertexSet(t, extra);
        if (oracle.query(candidate)) {
            hit = std::move(candidate);
            return false;
        }
        return true;
    });
    return hit;
}

LearnReport learn(Oracle& oracle, const FamilyParams& params, const LearnerOptions& options)
{
    if (oracle.t() != params.t)
        throw std::invalid_argument("oracle has t=" + std::to_string(oracle.t()) + " but params have t=" +
                                    std::to_string(params.t));
    const auto t = params.t;
    LearnStats stats;
    std::vector<Edge> known;

    auto counted = [&](std::uint64_t& bucket, auto&& step) {
        auto before = oracle.query_count();
        auto result = step();
        bucket += oracle.query_count() - before;
        return result;
    };

    std::optional<VertexSet> next = VertexSet::full(t);
    bool any_edge = counted(stats.queries_query_search, [&] { return oracle.query(*next); });
    if (!any_edge)
        next.reset();

    VertexSet found(t);
    while (next) {
        ++stats.rounds;
        auto before = oracle.query_count();
        auto candidates = (*next - found).size();
        Vertex v = find_active_vertex(oracle, *next, found, options.audit);
        auto spent = oracle.query_count() - before;
        stats.queries_vertex_search += spent;
        stats.vertex_searches.push_back({spent, candidates});

        found.insert(v);
        if (found.size() > params.s * params.l)
            throw ContractViolation("found " + std::to_string(found.size()) +
                                    " active vertices, more than s*l; hidden hypergraph is outside the family");

        known = counted(stats.queries_edge_search,
                        [&] { return find_edges_on(oracle, found, params.l, &stats.dead_deletions); });
        if (options.audit != nullptr)
            audit_edges(*options.audit, known, found, params.l);

        next = counted(stats.queries_query_search, [&] { return find_next_query(oracle, known, t); });
    }

    return LearnReport{params, Hypergraph(t, std::move(known)), std::move(stats)};
}

std::uint64_t edge_search_budget(std::size_t s, std::size_t l) noexcept
{
    std::uint64_t total = 0;
    for (std::size_t j = 1; j <= l; ++j)
        total = sat_add(total, binomial_u64(s * l, j));
    return total;
}

std::uint64_t query_search_budget(std::size_t s, std::size_t l) noexcept
{
    auto exponent = s * l;
    return exponent >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << exponent;
}

std::uint64_t learner_query_budget(const FamilyParams& p) noexcept
{
    std::uint64_t per_round = ceil_log2(p.t);
    per_round = sat_add(per_round, edge_search_budget(p.s, p.l));
    per_round = sat_add(per_round, query_search_budget(p.s, p.l));
    per_round = sat_add(per_round, 1);
    return sat_mul(p.s * p.l, per_round);
}

} // namespace hhl
