#include <hhl/core.hpp>
#include <hhl/combinatorics.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace hhl {

// ---------------------------------------------------------------------------
// Edge

Edge::Edge(std::size_t universe_size, std::vector<Vertex> vertices)
    : universe_size_(universe_size), vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw std::invalid_argument("edge must be nonempty");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("edge has a repeated vertex");
    if (vertices_.front() < 1 || vertices_.back() > universe_size_)
        throw std::invalid_argument("edge vertex outside [1, " + std::to_string(universe_size_) + "]");
}

Edge::Edge(const VertexSet& vertices) : Edge(vertices.universe_size(), vertices.members()) {}

bool Edge::contains(Vertex v) const noexcept
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Edge::is_subset_of(const VertexSet& s) const noexcept
{
    return std::all_of(vertices_.begin(), vertices_.end(), [&](Vertex v) { return s.contains(v); });
}

bool Edge::is_subset_of(const Edge& other) const noexcept
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::string Edge::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        os << (i ? "," : "") << vertices_[i];
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// Hypergraph

Hypergraph::Hypergraph(std::size_t t, std::vector<Edge> edges) : t_(t), edges_(std::move(edges))
{
    for (const auto& e : edges_)
        if (e.universe_size() != t_)
            throw std::invalid_argument("edge universe does not match hypergraph vertex count");
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
}

std::size_t Hypergraph::dim() const noexcept
{
    std::size_t d = 0;
    for (const auto& e : edges_)
        d = std::max(d, e.size());
    return d;
}

VertexSet Hypergraph::active_vertices() const
{
    VertexSet out(t_);
    for (const auto& e : edges_)
        for (auto v : e.vertices())
            out.insert(v);
    return out;
}

std::string Hypergraph::to_string() const
{
    std::ostringstream os;
    os << "t=" << t_ << " {";
    for (std::size_t i = 0; i < edges_.size(); ++i)
        os << (i ? "," : "") << edges_[i].to_string();
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// Family

FamilyParams::FamilyParams(std::size_t t_, std::size_t s_, std::size_t l_) : t(t_), s(s_), l(l_)
{
    if (t < 1 || s < 1 || l < 1)
        throw std::invalid_argument("family parameters t, s, l must be positive");
    if (l > t)
        throw std::invalid_argument("edge size bound l exceeds vertex count t");
}

bool member_of_family(const Hypergraph& h, const FamilyParams& p)
{
    if (h.t() != p.t)
        throw std::invalid_argument("hypergraph has t=" + std::to_string(h.t()) + " but family has t=" +
                                    std::to_string(p.t));
    return h.edge_count() <= p.s && h.dim() <= p.l;
}

bool is_sperner(const Hypergraph& h)
{
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (i != j && edges[i].is_subset_of(edges[j]))
                return false;
    return true;
}

Hypergraph minimal_edges(const Hypergraph& h)
{
    std::vector<Edge> kept;
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < edges.size() && minimal; ++j)
            if (i != j && edges[j].is_subset_of(edges[i]))
                minimal = false;
        if (minimal)
            kept.push_back(edges[i]);
    }
    return Hypergraph(h.t(), std::move(kept));
}

namespace {

constexpr int max_generation_attempts = 10000;

/// Uniform j-subset of {1..t} (Floyd's algorithm).
std::vector<Vertex> sample_subset(std::size_t t, std::size_t j, std::mt19937_64& rng)
{
    std::set<Vertex> chosen;
    for (std::size_t i = t - j + 1; i <= t; ++i) {
        std::uniform_int_distribution<std::size_t> pick(1, i);
        auto r = static_cast<Vertex>(pick(rng));
        if (!chosen.insert(r).second)
            chosen.insert(static_cast<Vertex>(i));
    }
    return {chosen.begin(), chosen.end()};
}

/// Edge sizes 1..l weighted by C(t, j), so the drawn edge is uniform.
std::discrete_distribution<std::size_t> edge_size_distribution(std::size_t t, std::size_t l)
{
    std::vector<double> log_weights;
    for (std::size_t j = 1; j <= l; ++j)
        log_weights.push_back(std::lgamma(t + 1.0) - std::lgamma(j + 1.0) - std::lgamma(t - j + 1.0));
    double top = *std::max_element(log_weights.begin(), log_weights.end());
    std::vector<double> weights;
    for (double lw : log_weights)
        weights.push_back(std::exp(lw - top));
    return {weights.begin(), weights.end()};
}

} // namespace

Hypergraph random_family_instance(const FamilyParams& p, bool sperner_only, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uint64_t candidates = 0;
    for (std::size_t j = 1; j <= p.l; ++j)
        candidates += binomial_u64(p.t, j);
    std::size_t max_k = static_cast<std::size_t>(std::min<std::uint64_t>(p.s, candidates));

    std::uniform_int_distribution<std::size_t> pick_k(0, max_k);
    auto size_dist = edge_size_distribution(p.t, p.l);
    const std::size_t k = pick_k(rng);

    for (int attempt = 0; attempt < max_generation_attempts; ++attempt) {
        std::set<std::vector<Vertex>> drawn;
        int misses = 0;
        while (drawn.size() < k && misses < max_generation_attempts) {
            auto j = size_dist(rng) + 1;
            if (!drawn.insert(sample_subset(p.t, j, rng)).second)
                ++misses;
        }
        if (drawn.size() < k)
            break;
        std::vector<Edge> edges;
        for (const auto& vs : drawn)
            edges.emplace_back(p.t, vs);
        Hypergraph h(p.t, std::move(edges));
        if (!sperner_only || is_sperner(h))
            return h;
    }
    throw GenerationExhausted("could not draw a family instance for t=" + std::to_string(p.t) +
                              " s=" + std::to_string(p.s) + " l=" + std::to_string(p.l));
}

Hypergraph random_disjoint_instance(const FamilyParams& p, std::uint64_t seed)
{
    if (p.s * p.l > p.t)
        throw std::invalid_argument("cannot place " + std::to_string(p.s) + " disjoint edges of size " +
                                    std::to_string(p.l) + " on " + std::to_string(p.t) + " vertices");
    std::mt19937_64 rng(seed);
    auto chosen = sample_subset(p.t, p.s * p.l, rng);
    std::shuffle(chosen.begin(), chosen.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < p.s; ++i) {
        std::vector<Vertex> members(chosen.begin() + static_cast<std::ptrdiff_t>(i * p.l),
                                    chosen.begin() + static_cast<std::ptrdiff_t>((i + 1) * p.l));
        edges.emplace_back(p.t, std::move(members));
    }
    return Hypergraph(p.t, std::move(edges));
}

} // namespace hhl
