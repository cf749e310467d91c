#pragma once

#include <hhl/core.hpp>
#include <hhl/coverfree.hpp>
#include <hhl/oracle.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhl {

/// The stage-two answers match zero or several candidate edges.
class DecodeError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// No separating block design was found within the row/attempt limits.
class DesignNotFound : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// N x t matrix over the alphabet {1..s}. Row i is layer i; column j is vertex j+1.
class SaryMatrix
{
public:
    SaryMatrix(std::size_t layers, std::size_t t, std::size_t s);

    std::size_t layers() const noexcept { return layers_; }
    std::size_t t() const noexcept { return t_; }
    std::size_t s() const noexcept { return s_; }

    std::uint32_t symbol(std::size_t layer, Vertex v) const { return symbols_.at(layer * t_ + (v - 1)); }
    void set_symbol(std::size_t layer, Vertex v, std::uint32_t symbol);

private:
    std::size_t layers_;
    std::size_t t_;
    std::size_t s_;
    std::vector<std::uint32_t> symbols_;
};

/// Entries i.i.d. uniform on {1..s}.
SaryMatrix sample_sary_matrix(std::size_t layers, std::size_t t, std::size_t s, std::uint64_t seed);

/// Disjoint blocks V_1..V_s covering {1..t}; blocks may be empty.
struct Partition
{
    std::vector<VertexSet> blocks;

    std::vector<std::size_t> sizes() const;
};

/// Block r of layer i holds the vertices whose symbol is r.
Partition layer_partition(const SaryMatrix& x, std::size_t layer);

/// The s*N x t binary expansion: row i*s + (r-1) is block r of layer i, so
/// each column has exactly one 1 per layer.
BinaryCode expand_layers(const SaryMatrix& x);

enum class StageOneMode
{
    /// Layers in order, moving on at the first 0 answer, stopping at the first good layer.
    scan,
    /// All s*N block queries first, in layer order; then pick the first good layer.
    batch,
};

struct GoodLayer
{
    std::size_t layer;
    Partition partition;
};

/// First layer whose s block queries all answer 1.
std::optional<GoodLayer> find_good_layer(const SaryMatrix& x, Oracle& oracle, StageOneMode mode = StageOneMode::scan);

/// s! / s^(s*l): chance that one random layer separates s disjoint l-edges.
double layer_success_probability(std::size_t s, std::size_t l);

/// Smallest N with (1 - p)^N <= epsilon, p = layer_success_probability(s, l).
std::uint64_t required_layers(double epsilon, std::size_t s, std::size_t l);

/// True iff every nonempty subset of size <= l of the columns has a distinct
/// answer pattern (a row answers 1 iff it contains the subset).
bool is_separating(const BinaryCode& design, std::size_t l);

struct BlockDesignLimits
{
    std::size_t max_rows = 4096;
    unsigned attempts_per_length = 4;
};

/**
 * Non-adaptive design that identifies one hidden edge of size <= l among
 * `block_size` vertices. Built as the complement of a random Bernoulli
 * code with density 1/(l+1) and accepted only after the exhaustive
 * separation check. Lengths grow geometrically from ceil(log2 #candidates).
 */
BinaryCode build_block_design(std::size_t block_size, std::size_t l, std::uint64_t seed,
                              const BlockDesignLimits& limits = {});

/// The unique candidate edge (over {1..cols}) whose answer pattern equals
/// `answers`. Throws DecodeError if none or several match.
Edge decode_block(const BinaryCode& design, const std::vector<bool>& answers, std::size_t l);

struct TwoStageOptions
{
    StageOneMode mode = StageOneMode::scan;
    /// Number of stage-one layers; required_layers(epsilon, s, l) when unset.
    std::optional<std::uint64_t> layers;
    BlockDesignLimits design_limits;
};

struct TwoStageReport
{
    std::size_t t;
    std::size_t s;
    std::size_t l;
    double epsilon;
    std::uint64_t layers;
    std::uint64_t stage1_queries = 0;
    std::uint64_t stage2_queries = 0;
    bool success = false;
    std::optional<Hypergraph> recovered;
    std::optional<std::size_t> good_layer;
    std::vector<std::size_t> block_sizes;
    /// Empty on success; otherwise "no good layer" or the design failure.
    std::string failure;
};

/// Oracle round tags used by two_stage_learn.
inline constexpr int stage_one_round = 1;
inline constexpr int stage_two_round = 2;

/**
 * Two-stage learning of s disjoint l-edges.
 *
 * Stage one queries the layers of a random s-ary matrix until a layer puts
 * each edge in its own block. Stage two runs a separating block design
 * inside every block (other vertices excluded) and decodes one edge per
 * block. Oracle entries are tagged stage_one_round / stage_two_round.
 */
TwoStageReport two_stage_learn(Oracle& oracle, const FamilyParams& params, double epsilon, std::uint64_t seed,
                               const TwoStageOptions& options = {});

} // namespace hhl
