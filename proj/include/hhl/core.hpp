#pragma once

#include <hhl/vertex_set.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhl {

/// A random generator could not produce an instance within its retry cap.
class GenerationExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * A nonempty hyperedge, stored canonically as a strictly increasing list of
 * vertices in {1..t}.
 */
class Edge
{
public:
    /// Sorts `vertices`; throws std::invalid_argument if empty, duplicated
    /// or outside {1..universe_size}.
    Edge(std::size_t universe_size, std::vector<Vertex> vertices);
    explicit Edge(const VertexSet& vertices);

    std::size_t universe_size() const noexcept { return universe_size_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

    bool contains(Vertex v) const noexcept;
    /// True iff every vertex of this edge lies in `s`.
    bool is_subset_of(const VertexSet& s) const noexcept;
    bool is_subset_of(const Edge& other) const noexcept;

    VertexSet to_vertex_set() const { return VertexSet(universe_size_, vertices_); }
    std::string to_string() const;

    friend bool operator==(const Edge& a, const Edge& b)
    {
        return a.universe_size_ == b.universe_size_ && a.vertices_ == b.vertices_;
    }
    /// Lexicographic over the sorted vertex lists.
    friend bool operator<(const Edge& a, const Edge& b) { return a.vertices_ < b.vertices_; }

private:
    std::size_t universe_size_;
    std::vector<Vertex> vertices_;
};

/// Vertex count t plus a set of distinct edges, kept sorted lexicographically.
class Hypergraph
{
public:
    explicit Hypergraph(std::size_t t) : t_(t) {}
    /// Throws std::invalid_argument on duplicate edges or universe mismatch.
    Hypergraph(std::size_t t, std::vector<Edge> edges);

    std::size_t t() const noexcept { return t_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Largest edge cardinality, 0 if there are no edges.
    std::size_t dim() const noexcept;

    /// Vertices lying in at least one edge.
    VertexSet active_vertices() const;

    std::string to_string() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t t_;
    std::vector<Edge> edges_;
};

/**
 * The family parameters (t, s, l): t vertices, at most s edges, every edge of
 * size at most l.
 *
 * Construction requires t, s, l >= 1 and l <= t. The standing assumption
 * s + l < t of the family is reported by is_standard() rather than enforced.
 */
struct FamilyParams
{
    std::size_t t;
    std::size_t s;
    std::size_t l;

    FamilyParams(std::size_t t, std::size_t s, std::size_t l);

    bool is_standard() const noexcept { return s + l < t; }

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws std::invalid_argument when H.t() != p.t.
bool member_of_family(const Hypergraph& h, const FamilyParams& p);

/// True iff no edge is a proper subset of another.
bool is_sperner(const Hypergraph& h);

/// The inclusion-minimal edges of h; equals h iff h is Sperner.
Hypergraph minimal_edges(const Hypergraph& h);

/**
 * Draws k uniformly from {0..s}, then k distinct edges, each uniform among
 * the nonempty subsets of size <= l. With `sperner_only`, non-Sperner draws
 * are rejected and redrawn. Not uniform over the family.
 */
Hypergraph random_family_instance(const FamilyParams& p, bool sperner_only, std::uint64_t seed);

/// Exactly s pairwise-disjoint edges of size exactly l. Requires s*l <= t.
Hypergraph random_disjoint_instance(const FamilyParams& p, std::uint64_t seed);

} // namespace hhl
