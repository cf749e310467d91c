#include <hhl/oracle.hpp>

#include <json.hpp>

namespace hhl {

bool is_independent(const Hypergraph& h, const VertexSet& s)
{
    if (s.universe_size() != h.t())
        throw std::invalid_argument("query universe " + std::to_string(s.universe_size()) +
                                    " does not match hypergraph t=" + std::to_string(h.t()));
    for (const auto& e : h.edges())
        if (e.is_subset_of(s))
            return false;
    return true;
}

void QueryTranscript::write_jsonl(std::ostream& os) const
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        nlohmann::ordered_json line = {
            {"i", i + 1},
            {"q", entries_[i].query.members()},
            {"a", entries_[i].answer ? 1 : 0},
        };
        os << line.dump() << '\n';
    }
}

Oracle::Oracle(Hypergraph hidden, std::optional<std::uint64_t> budget) : hidden_(std::move(hidden)), budget_(budget) {}

bool Oracle::query(const VertexSet& s)
{
    if (budget_ && transcript_.size() >= *budget_)
        throw QueryBudgetExceeded(*budget_);
    bool answer = !is_independent(hidden_, s);
    transcript_.entries_.push_back({s, answer, round_});
    return answer;
}

void Oracle::reset()
{
    transcript_.entries_.clear();
    round_ = 0;
}

} // namespace hhl
