#include <hhl/twostage.hpp>
#include <hhl/combinatorics.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace hhl {

// ---------------------------------------------------------------------------
// Stage one

SaryMatrix::SaryMatrix(std::size_t layers, std::size_t t, std::size_t s)
    : layers_(layers), t_(t), s_(s), symbols_(layers * t, 1)
{
    if (layers == 0 || t == 0 || s == 0)
        throw std::invalid_argument("s-ary matrix dimensions and alphabet must be positive");
}

void SaryMatrix::set_symbol(std::size_t layer, Vertex v, std::uint32_t symbol)
{
    if (symbol < 1 || symbol > s_)
        throw std::out_of_range("symbol outside {1..s}");
    if (v < 1 || v > t_)
        throw std::out_of_range("vertex outside {1..t}");
    symbols_.at(layer * t_ + (v - 1)) = symbol;
}

SaryMatrix sample_sary_matrix(std::size_t layers, std::size_t t, std::size_t s, std::uint64_t seed)
{
    SaryMatrix x(layers, t, s);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> symbol(1, static_cast<std::uint32_t>(s));
    for (std::size_t i = 0; i < layers; ++i)
        for (Vertex v = 1; v <= t; ++v)
            x.set_symbol(i, v, symbol(rng));
    return x;
}

std::vector<std::size_t> Partition::sizes() const
{
    std::vector<std::size_t> out;
    for (const auto& b : blocks)
        out.push_back(b.size());
    return out;
}

Partition layer_partition(const SaryMatrix& x, std::size_t layer)
{
    if (layer >= x.layers())
        throw std::out_of_range("layer index out of range");
    Partition p{std::vector<VertexSet>(x.s(), VertexSet(x.t()))};
    for (Vertex v = 1; v <= x.t(); ++v)
        p.blocks[x.symbol(layer, v) - 1].insert(v);
    return p;
}

BinaryCode expand_layers(const SaryMatrix& x)
{
    BinaryCode code(x.layers() * x.s(), x.t());
    for (std::size_t i = 0; i < x.layers(); ++i)
        for (Vertex v = 1; v <= x.t(); ++v)
            code.set(i * x.s() + (x.symbol(i, v) - 1), v - 1, true);
    return code;
}

std::optional<GoodLayer> find_good_layer(const SaryMatrix& x, Oracle& oracle, StageOneMode mode)
{
    if (x.t() != oracle.t())
        throw std::invalid_argument("layer matrix width does not match oracle");

    if (mode == StageOneMode::scan) {
        for (std::size_t i = 0; i < x.layers(); ++i) {
            auto partition = layer_partition(x, i);
            bool good = std::all_of(partition.blocks.begin(), partition.blocks.end(),
                                    [&](const VertexSet& block) { return oracle.query(block); });
            if (good)
                return GoodLayer{i, std::move(partition)};
        }
        return std::nullopt;
    }

    std::vector<Partition> partitions;
    std::vector<bool> good(x.layers(), true);
    for (std::size_t i = 0; i < x.layers(); ++i) {
        partitions.push_back(layer_partition(x, i));
        for (const auto& block : partitions.back().blocks)
            if (!oracle.query(block))
                good[i] = false;
    }
    for (std::size_t i = 0; i < x.layers(); ++i)
        if (good[i])
            return GoodLayer{i, std::move(partitions[i])};
    return std::nullopt;
}

double layer_success_probability(std::size_t s, std::size_t l)
{
    if (s < 1 || l < 1)
        throw std::invalid_argument("layer_success_probability requires s, l >= 1");
    const double sd = static_cast<double>(s);
    return std::exp(std::lgamma(sd + 1.0) - sd * static_cast<double>(l) * std::log(sd));
}

std::uint64_t required_layers(double epsilon, std::size_t s, std::size_t l)
{
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    const double p = layer_success_probability(s, l);
    if (p >= 1.0)
        return 1;
    const double log_miss = std::log1p(-p);
    auto n = static_cast<std::uint64_t>(std::max(1.0, std::ceil(std::log(epsilon) / log_miss)));
    // settle rounding at the boundary with the exact power
    auto miss = [&](std::uint64_t k) { return std::exp(static_cast<double>(k) * log_miss); };
    while (miss(n) > epsilon)
        ++n;
    while (n > 1 && miss(n - 1) <= epsilon)
        --n;
    return n;
}

// ---------------------------------------------------------------------------
// Stage two

namespace {

/// Answer pattern of every candidate edge, in size-then-lexicographic order.
struct CandidateTable
{
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<Bitset> patterns;
};

CandidateTable tabulate(const BinaryCode& design, std::size_t l)
{
    std::vector<Bitset> columns;
    for (std::size_t c = 0; c < design.cols(); ++c)
        columns.push_back(design.column(c));
    CandidateTable table;
    for_each_subset_by_size(design.cols(), 1, l, [&](std::span<const std::size_t> idx) {
        Bitset pattern = columns[idx[0]];
        for (std::size_t k = 1; k < idx.size(); ++k)
            pattern &= columns[idx[k]];
        table.candidates.emplace_back(idx.begin(), idx.end());
        table.patterns.push_back(std::move(pattern));
        return true;
    });
    return table;
}

} // namespace

bool is_separating(const BinaryCode& design, std::size_t l)
{
    std::vector<Bitset> columns;
    for (std::size_t c = 0; c < design.cols(); ++c)
        columns.push_back(design.column(c));

    // stop at the first repeated pattern; short designs collide early
    std::unordered_set<std::vector<Bitset::Word>, boost::hash<std::vector<Bitset::Word>>> seen;
    bool separating = true;
    for_each_subset_by_size(design.cols(), 1, l, [&](std::span<const std::size_t> idx) {
        Bitset pattern = columns[idx[0]];
        for (std::size_t k = 1; k < idx.size(); ++k)
            pattern &= columns[idx[k]];
        separating = seen.insert(pattern.words()).second;
        return separating;
    });
    return separating;
}

BinaryCode build_block_design(std::size_t block_size, std::size_t l, std::uint64_t seed, const BlockDesignLimits& limits)
{
    if (l < 1 || block_size < l)
        throw std::invalid_argument("block design needs 1 <= l <= block size");

    std::uint64_t candidates = 0;
    for (std::size_t j = 1; j <= l; ++j)
        candidates += binomial_u64(block_size, j);

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution one(1.0 / static_cast<double>(l + 1));
    for (std::size_t rows = std::max<std::size_t>(1, ceil_log2(candidates)); rows <= limits.max_rows;
         rows = std::max(rows + 1, rows * 5 / 4)) {
        for (unsigned attempt = 0; attempt < limits.attempts_per_length; ++attempt) {
            BinaryCode cover(rows, block_size);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < block_size; ++c)
                    if (one(rng))
                        cover.set(r, c, true);
            BinaryCode design = cover.complement();
            if (is_separating(design, l))
                return design;
        }
    }
    throw DesignNotFound("no separating design for " + std::to_string(block_size) + " vertices, l=" +
                         std::to_string(l) + " within " + std::to_string(limits.max_rows) + " rows");
}

Edge decode_block(const BinaryCode& design, const std::vector<bool>& answers, std::size_t l)
{
    if (answers.size() != design.rows())
        throw std::invalid_argument("answer count does not match design rows");
    Bitset observed(design.rows());
    for (std::size_t r = 0; r < answers.size(); ++r)
        if (answers[r])
            observed.set(r);

    auto table = tabulate(design, l);
    std::optional<std::size_t> match;
    for (std::size_t i = 0; i < table.patterns.size(); ++i) {
        if (!(table.patterns[i] == observed))
            continue;
        if (match)
            throw DecodeError("several candidate edges fit the block answers");
        match = i;
    }
    if (!match)
        throw DecodeError("no candidate edge of size <= " + std::to_string(l) + " fits the block answers");

    std::vector<Vertex> members;
    for (auto c : table.candidates[*match])
        members.push_back(static_cast<Vertex>(c + 1));
    return Edge(design.cols(), std::move(members));
}

TwoStageReport two_stage_learn(Oracle& oracle, const FamilyParams& params, double epsilon, std::uint64_t seed,
                               const TwoStageOptions& options)
{
    if (oracle.t() != params.t)
        throw std::invalid_argument("oracle and params disagree on t");

    TwoStageReport report;
    report.t = params.t;
    report.s = params.s;
    report.l = params.l;
    report.epsilon = epsilon;
    report.layers = options.layers ? *options.layers : required_layers(epsilon, params.s, params.l);

    const auto x = sample_sary_matrix(report.layers, params.t, params.s, mix_seed(seed, 0));
    auto before = oracle.query_count();
    oracle.set_round(stage_one_round);
    auto good = find_good_layer(x, oracle, options.mode);
    report.stage1_queries = oracle.query_count() - before;
    if (!good) {
        report.failure = "no good layer";
        return report;
    }
    report.good_layer = good->layer;
    report.block_sizes = good->partition.sizes();

    std::map<std::size_t, BinaryCode> designs;
    try {
        for (auto size : report.block_sizes)
            if (!designs.contains(size))
                designs.emplace(size, build_block_design(size, params.l, mix_seed(seed, 1000 + size),
                                                         options.design_limits));
    } catch (const DesignNotFound& e) {
        report.failure = e.what();
        return report;
    }

    // all stage-two queries go out before any block is decoded
    before = oracle.query_count();
    oracle.set_round(stage_two_round);
    std::vector<std::vector<bool>> answers;
    for (const auto& block : good->partition.blocks) {
        const auto& design = designs.at(block.size());
        const auto local = block.members();
        std::vector<bool> block_answers;
        for (std::size_t r = 0; r < design.rows(); ++r) {
            VertexSet q(params.t);
            for (std::size_t c = 0; c < local.size(); ++c)
                if (design.get(r, c))
                    q.insert(local[c]);
            block_answers.push_back(oracle.query(q));
        }
        answers.push_back(std::move(block_answers));
    }
    report.stage2_queries = oracle.query_count() - before;

    std::vector<Edge> edges;
    for (std::size_t b = 0; b < good->partition.blocks.size(); ++b) {
        const auto local = good->partition.blocks[b].members();
        auto decoded = decode_block(designs.at(local.size()), answers[b], params.l);
        std::vector<Vertex> global;
        for (auto v : decoded.vertices())
            global.push_back(local[v - 1]);
        edges.emplace_back(params.t, std::move(global));
    }
    report.recovered = Hypergraph(params.t, std::move(edges));
    report.success = true;
    return report;
}

} // namespace hhl
