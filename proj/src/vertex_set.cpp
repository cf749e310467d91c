#include <hhl/vertex_set.hpp>

#include <sstream>
#include <stdexcept>

namespace hhl {

namespace {

void check_range(Vertex v, std::size_t universe_size)
{
    if (v < 1 || v > universe_size)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " + std::to_string(universe_size) + "]");
}

} // namespace

VertexSet::VertexSet(std::size_t universe_size, std::span<const Vertex> members) : bits_(universe_size)
{
    for (auto v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe_size)
{
    return VertexSet(Bitset::full(universe_size));
}

void VertexSet::insert(Vertex v)
{
    check_range(v, universe_size());
    bits_.set(v - 1);
}

void VertexSet::erase(Vertex v)
{
    check_range(v, universe_size());
    bits_.reset(v - 1);
}

Vertex VertexSet::first() const
{
    auto i = bits_.find_first();
    if (i == Bitset::npos)
        throw std::logic_error("first() on empty vertex set");
    return static_cast<Vertex>(i + 1);
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::pair<VertexSet, VertexSet> VertexSet::split_half() const
{
    auto n = size();
    VertexSet low(bits_.lowest((n + 1) / 2));
    VertexSet high(bits_ - low.bits_);
    return {std::move(low), std::move(high)};
}

VertexSet VertexSet::complement() const
{
    return VertexSet(~bits_);
}

std::string VertexSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first_member = true;
    for_each([&](Vertex v) {
        if (!first_member)
            os << ',';
        os << v;
        first_member = false;
    });
    os << '}';
    return os.str();
}

} // namespace hhl
