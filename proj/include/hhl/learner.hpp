#pragma once

#include <hhl/core.hpp>
#include <hhl/oracle.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hhl {

/// A caller broke an algorithm precondition, or the hidden hypergraph is
/// outside the family the learner was told about.
class ContractViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Per-call record of the active-vertex search.
struct VertexSearchRecord
{
    std::uint64_t queries;
    /// |S \ F| at entry; the search is bounded by ceil(log2 candidates).
    std::size_t candidates;
};

struct LearnStats
{
    std::uint64_t queries_vertex_search = 0;
    std::uint64_t queries_edge_search = 0;
    /// Includes the initial Q(V) check.
    std::uint64_t queries_query_search = 0;
    std::size_t rounds = 0;
    std::vector<VertexSearchRecord> vertex_searches;
    /// Times the edge search removed a stored edge that contains a newly
    /// found one. Always zero under size-ordered enumeration.
    std::uint64_t dead_deletions = 0;
};

struct LearnReport
{
    FamilyParams params;
    Hypergraph result;
    LearnStats stats;

    std::uint64_t queries_total() const noexcept
    {
        return stats.queries_vertex_search + stats.queries_edge_search + stats.queries_query_search;
    }
};

struct LearnerOptions
{
    /// When set, every internal invariant is checked against this
    /// hypergraph directly (not through the oracle) and a breach throws
    /// ContractViolation. Intended for test harnesses that know the answer.
    const Hypergraph* audit = nullptr;
};

/**
 * Binary search for a new active vertex inside S \ F.
 *
 * Requires Q(S) = 1 and Q(S ∩ F) = 0, which find_next_query guarantees.
 * S' = S \ F is split into its ceil(|S'|/2) lowest vertices S1 and the rest
 * S2; the query S1 ∪ S'' decides which half keeps a new active vertex.
 * Uses at most ceil(log2 |S \ F|) queries.
 */
Vertex find_active_vertex(Oracle& oracle, const VertexSet& s, const VertexSet& found,
                          const Hypergraph* audit = nullptr);

/**
 * Exhaustive edge search over subsets of F of size 1..l, by increasing size
 * and lexicographically within a size. Subsets already containing a found
 * edge are skipped without querying. Returns the inclusion-minimal positive
 * subsets, sorted.
 */
std::vector<Edge> find_edges_on(Oracle& oracle, const VertexSet& found, std::size_t l,
                                std::uint64_t* dead_deletions = nullptr);

/**
 * Looks for a query that contains a hidden edge not yet known.
 *
 * With A the vertices of the known edges and B = V \ A, tries C = B ∪ D for
 * D ⊆ A by increasing size (lexicographic within a size), skipping any C
 * that contains a known edge. Returns the first C with Q(C) = 1, or nothing
 * when every candidate answers 0. At most 2^|A| queries.
 */
std::optional<VertexSet> find_next_query(Oracle& oracle, const std::vector<Edge>& known, std::size_t t);

/// Learns the hidden hypergraph (its minimal edges, when it is not Sperner).
LearnReport learn(Oracle& oracle, const FamilyParams& params, const LearnerOptions& options = {});

/// F1(s,l) = sum_{j=1..l} C(s*l, j): edge-search queries per round.
std::uint64_t edge_search_budget(std::size_t s, std::size_t l) noexcept;
/// F2(s,l) = 2^(s*l): query-search queries per round.
std::uint64_t query_search_budget(std::size_t s, std::size_t l) noexcept;
/// s*l * (ceil(log2 t) + F1 + F2 + 1), saturating.
std::uint64_t learner_query_budget(const FamilyParams& params) noexcept;

} // namespace hhl
