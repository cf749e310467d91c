#pragma once

#include <hhl/bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hhl {

/// Vertices are 1-based: the universe of a hypergraph on t vertices is {1..t}.
using Vertex = std::uint32_t;

/**
 * A subset of the vertex universe {1..t}, stored as a fixed-width bitset.
 *
 * All binary set operations require both operands to share the same
 * universe and throw std::invalid_argument otherwise.
 */
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe_size) : bits_(universe_size) {}
    VertexSet(std::size_t universe_size, std::span<const Vertex> members);
    VertexSet(std::size_t universe_size, std::initializer_list<Vertex> members)
        : VertexSet(universe_size, std::span<const Vertex>(members.begin(), members.size()))
    {
    }

    /// The whole universe {1..t}.
    static VertexSet full(std::size_t universe_size);

    std::size_t universe_size() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }

    bool contains(Vertex v) const noexcept { return v >= 1 && v <= universe_size() && bits_.test(v - 1); }
    void insert(Vertex v);
    void erase(Vertex v);

    /// Smallest member; the set must be nonempty.
    Vertex first() const;

    std::vector<Vertex> members() const;

    template <typename F>
    void for_each(F&& f) const
    {
        for (auto i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i + 1))
            f(static_cast<Vertex>(i + 1));
    }

    bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

    /// Splits into the ceil(n/2) lowest-numbered members and the rest.
    std::pair<VertexSet, VertexSet> split_half() const;

    /// V minus this set.
    VertexSet complement() const;

    VertexSet& operator|=(const VertexSet& o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o)
    {
        bits_ -= o.bits_;
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    const Bitset& bits() const noexcept { return bits_; }

    /// "{1,2,5}" style rendering for diagnostics.
    std::string to_string() const;

private:
    explicit VertexSet(Bitset bits) : bits_(std::move(bits)) {}

    Bitset bits_;
};

} // namespace hhl
