#include <doctest.h>

#include <hhl/combinatorics.hpp>
#include <hhl/twostage.hpp>

#include <cmath>

using namespace hhl;

namespace {

Hypergraph graph(std::size_t t, std::vector<std::vector<Vertex>> edges)
{
    std::vector<Edge> out;
    for (auto& e : edges)
        out.emplace_back(t, e);
    return Hypergraph(t, std::move(out));
}

SaryMatrix one_layer(std::size_t s, std::vector<std::uint32_t> symbols)
{
    SaryMatrix x(1, symbols.size(), s);
    for (std::size_t j = 0; j < symbols.size(); ++j)
        x.set_symbol(0, static_cast<Vertex>(j + 1), symbols[j]);
    return x;
}

std::vector<bool> answers_for(const BinaryCode& design, const std::vector<std::size_t>& edge)
{
    std::vector<bool> out;
    for (std::size_t r = 0; r < design.rows(); ++r) {
        bool all = true;
        for (auto c : edge)
            all = all && design.get(r, c);
        out.push_back(all);
    }
    return out;
}

void check_round_trip(const BinaryCode& design, std::size_t l)
{
    for_each_subset_by_size(design.cols(), 1, l, [&](std::span<const std::size_t> idx) {
        std::vector<std::size_t> edge(idx.begin(), idx.end());
        auto decoded = decode_block(design, answers_for(design, edge), l);
        std::vector<Vertex> expect;
        for (auto c : edge)
            expect.push_back(static_cast<Vertex>(c + 1));
        REQUIRE(decoded.vertices() == expect);
        return true;
    });
}

} // namespace

TEST_CASE("s-ary matrix sampling")
{
    auto ones = sample_sary_matrix(20, 30, 1, 4);
    for (std::size_t i = 0; i < 20; ++i)
        for (Vertex v = 1; v <= 30; ++v)
            REQUIRE(ones.symbol(i, v) == 1);

    const std::size_t s = 3;
    auto x = sample_sary_matrix(400, 300, s, 17);
    std::vector<double> counts(s + 1, 0.0);
    for (std::size_t i = 0; i < x.layers(); ++i)
        for (Vertex v = 1; v <= x.t(); ++v) {
            auto sym = x.symbol(i, v);
            REQUIRE(sym >= 1);
            REQUIRE(sym <= s);
            counts[sym] += 1;
        }
    const double n = 400.0 * 300.0;
    const double p = 1.0 / s;
    for (std::size_t r = 1; r <= s; ++r)
        CHECK(std::abs(counts[r] - n * p) <= 3 * std::sqrt(n * p * (1 - p)));

    auto again = sample_sary_matrix(400, 300, s, 17);
    bool same = true;
    for (std::size_t i = 0; i < 400; ++i)
        for (Vertex v = 1; v <= 300; ++v)
            same = same && again.symbol(i, v) == x.symbol(i, v);
    CHECK(same);
    CHECK_THROWS_AS(x.set_symbol(0, 1, 4), std::out_of_range);
}

TEST_CASE("layer expansion partitions the columns")
{
    auto x = sample_sary_matrix(7, 25, 3, 2);
    auto code = expand_layers(x);
    CHECK(code.rows() == 21);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t c = 0; c < 25; ++c) {
            int ones = 0;
            for (std::size_t r = 0; r < 3; ++r)
                ones += code.get(i * 3 + r, c);
            REQUIRE(ones == 1);
            REQUIRE(code.get(i * 3 + x.symbol(i, static_cast<Vertex>(c + 1)) - 1, c));
        }
    auto part = layer_partition(x, 3);
    REQUIRE(part.blocks.size() == 3);
    VertexSet all(25);
    std::size_t total = 0;
    for (const auto& b : part.blocks) {
        CHECK_FALSE(all.intersects(b));
        all |= b;
        total += b.size();
    }
    CHECK(all == VertexSet::full(25));
    CHECK(total == 25);
}

TEST_CASE("good layer examples")
{
    auto h = graph(4, {{1, 2}, {3, 4}});
    SUBCASE("separating layer")
    {
        Oracle o(h);
        auto g = find_good_layer(one_layer(2, {1, 1, 2, 2}), o);
        REQUIRE(g.has_value());
        CHECK(g->layer == 0);
        CHECK(g->partition.blocks[0] == VertexSet(4, {1, 2}));
        CHECK(g->partition.blocks[1] == VertexSet(4, {3, 4}));
        CHECK(o.query_count() == 2);
    }
    SUBCASE("interleaved layer")
    {
        Oracle o(h);
        CHECK_FALSE(find_good_layer(one_layer(2, {1, 2, 1, 2}), o).has_value());
        CHECK(o.query_count() == 1);
        Oracle b(h);
        CHECK_FALSE(find_good_layer(one_layer(2, {1, 2, 1, 2}), b, StageOneMode::batch).has_value());
        CHECK(b.query_count() == 2);
    }
    SUBCASE("single block is always good")
    {
        Oracle o(graph(9, {{4, 8}}));
        auto g = find_good_layer(sample_sary_matrix(5, 9, 1, 3), o);
        REQUIRE(g.has_value());
        CHECK(g->layer == 0);
        CHECK(o.query_count() == 1);
    }
    SUBCASE("batch mode issues every block query")
    {
        SaryMatrix x(3, 4, 2);
        const std::uint32_t rows[3][4] = {{1, 2, 1, 2}, {2, 2, 1, 1}, {1, 1, 2, 2}};
        for (std::size_t i = 0; i < 3; ++i)
            for (Vertex v = 1; v <= 4; ++v)
                x.set_symbol(i, v, rows[i][v - 1]);
        Oracle scan(h);
        Oracle batch(h);
        auto a = find_good_layer(x, scan, StageOneMode::scan);
        auto b = find_good_layer(x, batch, StageOneMode::batch);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(a->layer == 1);
        CHECK(b->layer == 1);
        CHECK(scan.query_count() == 3);
        CHECK(batch.query_count() == 6);
    }
}

TEST_CASE("layer probability and required layers")
{
    CHECK(layer_success_probability(1, 1) == doctest::Approx(1.0));
    CHECK(layer_success_probability(1, 7) == doctest::Approx(1.0));
    CHECK(layer_success_probability(2, 2) == doctest::Approx(0.125));
    CHECK(layer_success_probability(3, 1) == doctest::Approx(6.0 / 27.0));

    CHECK(required_layers(0.01, 2, 2) == 35);
    CHECK(required_layers(0.05, 2, 2) == 23);
    CHECK(required_layers(0.5, 1, 3) == 1);
    CHECK(required_layers(0.999, 1, 1) == 1);
    for (double eps : {0.3, 0.1, 0.05, 0.01, 0.001})
        for (std::size_t s = 2; s <= 3; ++s)
            for (std::size_t l = 1; l <= 3; ++l) {
                auto n = required_layers(eps, s, l);
                double q = 1.0 - layer_success_probability(s, l);
                double at = 1.0;
                for (std::uint64_t i = 0; i + 1 < n; ++i)
                    at *= q;
                CHECK(at > eps);
                CHECK(at * q <= eps);
            }
    CHECK_THROWS_AS(required_layers(0.0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(required_layers(1.0, 2, 2), std::invalid_argument);
}

TEST_CASE("block designs")
{
    SUBCASE("complement of identity")
    {
        auto d = BinaryCode::identity(5).complement();
        CHECK(is_separating(d, 1));
        CHECK(decode_block(d, answers_for(d, {2}), 1).vertices() == std::vector<Vertex>{3});
        check_round_trip(d, 1);
        CHECK_THROWS_AS(decode_block(d, std::vector<bool>(5, true), 1), DecodeError);
        CHECK_THROWS_AS(decode_block(d, std::vector<bool>(4, true), 1), std::invalid_argument);
    }
    SUBCASE("ambiguous design")
    {
        auto d = BinaryCode::filled(3, 4, true);
        CHECK_FALSE(is_separating(d, 1));
        CHECK_THROWS_AS(decode_block(d, std::vector<bool>(3, true), 1), DecodeError);
    }
    SUBCASE("random design for six vertices and pairs")
    {
        auto d = build_block_design(6, 2, 42);
        CHECK(d.cols() == 6);
        CHECK(is_separating(d, 2));
        check_round_trip(d, 2);
    }
    SUBCASE("round trip for every small size")
    {
        for (std::size_t l = 1; l <= 2; ++l)
            for (std::size_t size = l; size <= 8; ++size) {
                auto d = build_block_design(size, l, mix_seed(size, l));
                REQUIRE(is_separating(d, l));
                check_round_trip(d, l);
            }
    }
    SUBCASE("limits")
    {
        BlockDesignLimits tiny;
        tiny.max_rows = 2;
        CHECK_THROWS_AS(build_block_design(40, 2, 1, tiny), DesignNotFound);
        CHECK_THROWS_AS(build_block_design(1, 2, 1), std::invalid_argument);
    }
}

TEST_CASE("two-stage learning")
{
    SUBCASE("s = 1 always succeeds")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            FamilyParams p(20, 1, 3);
            auto h = random_disjoint_instance(p, seed);
            Oracle o(h);
            auto r = two_stage_learn(o, p, 0.1, seed);
            REQUIRE(r.success);
            CHECK(*r.recovered == h);
            CHECK(r.stage1_queries == 1);
            CHECK(r.layers == 1);
        }
    }
    SUBCASE("small example recovers exactly on success")
    {
        auto h = graph(4, {{1, 2}, {3, 4}});
        int successes = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            Oracle o(h);
            auto r = two_stage_learn(o, FamilyParams(4, 2, 2), 0.05, seed);
            if (r.success) {
                ++successes;
                CHECK(*r.recovered == h);
                CHECK(r.stage1_queries <= 2 * r.layers);
                CHECK(r.block_sizes == std::vector<std::size_t>{2, 2});
            } else {
                CHECK(r.failure == "no good layer");
                CHECK_FALSE(r.recovered.has_value());
            }
            CHECK(o.query_count() == r.stage1_queries + r.stage2_queries);
        }
        CHECK(successes > 80);
    }
    SUBCASE("rounds are tagged in order")
    {
        FamilyParams p(64, 2, 2);
        auto h = random_disjoint_instance(p, 3);
        Oracle o(h);
        auto r = two_stage_learn(o, p, 0.01, 3);
        REQUIRE(r.success);
        CHECK(*r.recovered == h);
        bool seen_two = false;
        for (const auto& e : o.transcript().entries()) {
            CHECK((e.round == stage_one_round || e.round == stage_two_round));
            if (e.round == stage_two_round)
                seen_two = true;
            else
                CHECK_FALSE(seen_two);
        }
        CHECK(seen_two);
    }
    SUBCASE("batch mode spends s*N in stage one")
    {
        FamilyParams p(64, 2, 2);
        auto h = random_disjoint_instance(p, 8);
        Oracle o(h);
        TwoStageOptions opts;
        opts.mode = StageOneMode::batch;
        auto r = two_stage_learn(o, p, 0.05, 8, opts);
        CHECK(r.stage1_queries == 2 * 23);
    }
    SUBCASE("layer override")
    {
        FamilyParams p(64, 2, 2);
        Oracle o(random_disjoint_instance(p, 1));
        TwoStageOptions opts;
        opts.layers = 35;
        CHECK(two_stage_learn(o, p, 0.05, 1, opts).layers == 35);
    }
}
