#pragma once

#include <hhl/core.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hhl {

/// Thrown when a query would exceed the oracle's budget.
class QueryBudgetExceeded : public std::runtime_error
{
public:
    explicit QueryBudgetExceeded(std::uint64_t budget)
        : std::runtime_error("query budget of " + std::to_string(budget) + " exhausted"), budget_(budget)
    {
    }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

/// True iff no edge of h is contained in s.
bool is_independent(const Hypergraph& h, const VertexSet& s);

struct TranscriptEntry
{
    VertexSet query;
    bool answer;
    /// Round tag set by the caller (multi-stage strategies); 0 by default.
    int round;
};

/// Append-only record of answered queries.
class QueryTranscript
{
public:
    const std::vector<TranscriptEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// One JSON object per line: {"i": <1-based index>, "q": [v,...], "a": 0|1}.
    void write_jsonl(std::ostream& os) const;

private:
    friend class Oracle;
    std::vector<TranscriptEntry> entries_;
};

/**
 * Simulated edge-detecting query oracle over a hidden hypergraph.
 *
 * Every call to query() is answered and counted, repeats included. With a
 * budget set, the query that would exceed it throws QueryBudgetExceeded and
 * is not recorded.
 */
class Oracle
{
public:
    explicit Oracle(Hypergraph hidden, std::optional<std::uint64_t> budget = std::nullopt);

    /// Q(S): true iff S contains at least one hidden edge.
    bool query(const VertexSet& s);

    std::uint64_t query_count() const noexcept { return transcript_.size(); }
    const QueryTranscript& transcript() const noexcept { return transcript_; }
    std::optional<std::uint64_t> budget() const noexcept { return budget_; }
    std::size_t t() const noexcept { return hidden_.t(); }

    /// Tags subsequent transcript entries.
    void set_round(int round) noexcept { round_ = round; }
    int round() const noexcept { return round_; }

    /// Clears the transcript and the round tag.
    void reset();

    /// The hidden hypergraph, for test harnesses that audit a run.
    const Hypergraph& hidden() const noexcept { return hidden_; }

private:
    Hypergraph hidden_;
    std::optional<std::uint64_t> budget_;
    QueryTranscript transcript_;
    int round_ = 0;
};

} // namespace hhl
