#include <doctest.h>

#include <hhl/core.hpp>
#include <hhl/json_io.hpp>
#include <hhl/vertex_set.hpp>

#include <sstream>

using namespace hhl;

namespace {

Hypergraph graph(std::size_t t, std::vector<std::vector<Vertex>> edges)
{
    std::vector<Edge> out;
    for (auto& e : edges)
        out.emplace_back(t, e);
    return Hypergraph(t, std::move(out));
}

} // namespace

TEST_CASE("vertex set basics")
{
    VertexSet s(70, {1, 64, 65, 70});
    CHECK(s.size() == 4);
    CHECK(s.contains(65));
    CHECK_FALSE(s.contains(2));
    CHECK_FALSE(s.contains(0));
    CHECK_FALSE(s.contains(71));
    CHECK(s.first() == 1);
    CHECK(s.members() == std::vector<Vertex>{1, 64, 65, 70});
    CHECK_THROWS_AS(VertexSet(5, {6}), std::out_of_range);
    CHECK_THROWS_AS(VertexSet(5, {0}), std::out_of_range);

    auto full = VertexSet::full(70);
    CHECK(full.size() == 70);
    CHECK(full.complement().empty());
    CHECK((full - s).size() == 66);
    CHECK(s.is_subset_of(full));
    CHECK_FALSE(full.is_subset_of(s));
    CHECK_THROWS_AS((void)(s | VertexSet(71)), std::invalid_argument);
}

TEST_CASE("split_half keeps the ceil(n/2) lowest members")
{
    VertexSet s(200, {3, 7, 64, 65, 130, 199, 200});
    auto [low, high] = s.split_half();
    CHECK(low.members() == std::vector<Vertex>{3, 7, 64, 65});
    CHECK(high.members() == std::vector<Vertex>{130, 199, 200});

    for (std::size_t n = 1; n <= 130; ++n) {
        auto [a, b] = VertexSet::full(n).split_half();
        CHECK(a.size() == (n + 1) / 2);
        CHECK(b.size() == n / 2);
        CHECK_FALSE(a.intersects(b));
        CHECK((a | b) == VertexSet::full(n));
    }
}

TEST_CASE("edges and hypergraphs are canonical")
{
    Edge e(5, {3, 1});
    CHECK(e.vertices() == std::vector<Vertex>{1, 3});
    CHECK_THROWS_AS(Edge(5, {}), std::invalid_argument);
    CHECK_THROWS_AS(Edge(5, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Edge(5, {6}), std::invalid_argument);

    auto h = graph(5, {{2, 3}, {1, 2, 3}, {1}});
    CHECK(h.edges()[0].vertices() == std::vector<Vertex>{1});
    CHECK(h.edges()[1].vertices() == std::vector<Vertex>{1, 2, 3});
    CHECK(h.edges()[2].vertices() == std::vector<Vertex>{2, 3});
    CHECK(h.dim() == 3);
    CHECK(Hypergraph(5).dim() == 0);
    CHECK_THROWS_AS(graph(5, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("member_of_family")
{
    FamilyParams p(5, 1, 2);
    CHECK(member_of_family(graph(5, {{1, 2}}), p));
    CHECK_FALSE(member_of_family(graph(5, {{1, 2, 3}}), p));
    CHECK(member_of_family(Hypergraph(5), p));
    CHECK_FALSE(member_of_family(graph(5, {{1}, {2}}), p));
    CHECK_THROWS_AS(member_of_family(graph(6, {{1}}), p), std::invalid_argument);
}

TEST_CASE("family params validation")
{
    CHECK_THROWS_AS(FamilyParams(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams(5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams(5, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams(3, 1, 4), std::invalid_argument);
    CHECK(FamilyParams(5, 1, 2).is_standard());
    CHECK_FALSE(FamilyParams(4, 2, 2).is_standard());
}

TEST_CASE("is_sperner and minimal_edges")
{
    CHECK(is_sperner(graph(5, {{1, 2}, {2, 3}})));
    CHECK_FALSE(is_sperner(graph(5, {{1}, {1, 2}})));
    CHECK(is_sperner(Hypergraph(5)));
    CHECK(minimal_edges(graph(5, {{1}, {1, 2}, {2, 3}, {2, 3, 4}})) == graph(5, {{1}, {2, 3}}));
}

TEST_CASE("random_family_instance stays in the family")
{
    SUBCASE("forced shape")
    {
        FamilyParams p(10, 1, 1);
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            auto h = random_family_instance(p, false, seed);
            CHECK(h.edge_count() <= 1);
            if (h.edge_count() == 1)
                CHECK(h.edges()[0].size() == 1);
        }
    }
    SUBCASE("ten thousand seeded draws")
    {
        const FamilyParams params[] = {{10, 2, 2}, {6, 3, 2}, {12, 2, 3}, {40, 3, 2}};
        std::size_t empty = 0;
        for (const auto& p : params) {
            for (std::uint64_t seed = 0; seed < 2500; ++seed) {
                auto plain = random_family_instance(p, false, seed);
                auto sperner = random_family_instance(p, true, seed);
                REQUIRE(member_of_family(plain, p));
                REQUIRE(member_of_family(sperner, p));
                REQUIRE(is_sperner(sperner));
                empty += sperner.edge_count() == 0;
            }
        }
        CHECK(empty > 0);
        CHECK(empty < 10000);
    }
    SUBCASE("deterministic in the seed")
    {
        FamilyParams p(10, 2, 2);
        CHECK(random_family_instance(p, true, 7) == random_family_instance(p, true, 7));
        CHECK(is_sperner(random_family_instance(p, true, 7)));
    }
}

TEST_CASE("random_disjoint_instance")
{
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        FamilyParams p(6, 2, 2);
        auto h = random_disjoint_instance(p, seed);
        REQUIRE(h.edge_count() == 2);
        CHECK(h.edges()[0].size() == 2);
        CHECK(h.edges()[1].size() == 2);
        CHECK(h.active_vertices().size() == 4);

        auto tight = random_disjoint_instance(FamilyParams(4, 2, 2), seed);
        CHECK(tight.active_vertices() == VertexSet::full(4));
    }
    CHECK(random_disjoint_instance(FamilyParams(1000, 3, 4), 9) == random_disjoint_instance(FamilyParams(1000, 3, 4), 9));
    CHECK(random_disjoint_instance(FamilyParams(1000, 3, 4), 9).active_vertices().size() == 12);
    CHECK_THROWS_AS(random_disjoint_instance(FamilyParams(4, 3, 2), 1), std::invalid_argument);
}

TEST_CASE("hypergraph JSON format")
{
    auto h = graph(6, {{4, 2}, {1}});
    std::ostringstream out;
    write_hypergraph(out, h);
    CHECK(out.str() == "{\"t\":6,\"edges\":[[1],[2,4]]}\n");

    std::istringstream in(out.str());
    CHECK(read_hypergraph(in) == h);

    auto parse = [](const std::string& text) {
        std::istringstream is(text);
        return read_hypergraph(is);
    };
    CHECK(parse(R"({"t":3,"edges":[]})") == Hypergraph(3));
    CHECK(parse(R"({"t":5,"edges":[[3,1]]})") == graph(5, {{1, 3}}));
    CHECK_THROWS_AS(parse(R"({"t":5,"edges":[[1,2],[2,1]]})"), std::runtime_error);
    CHECK_THROWS_AS(parse(R"({"t":5,"edges":[[1,1]]})"), std::runtime_error);
    CHECK_THROWS_AS(parse(R"({"t":5,"edges":[[6]]})"), std::runtime_error);
    CHECK_THROWS_AS(parse(R"({"t":5,"edges":[[0]]})"), std::runtime_error);
    CHECK_THROWS_AS(parse(R"({"t":5,"edges":[[]]})"), std::runtime_error);
    CHECK_THROWS_AS(parse(R"({"t":0,"edges":[]})"), std::runtime_error);
    CHECK_THROWS_AS(parse(R"({"edges":[]})"), std::runtime_error);
    CHECK_THROWS_AS(parse(R"({"t":5,"edges":[[1]],"x":1})"), std::runtime_error);
    CHECK_THROWS_AS(parse("not json"), std::runtime_error);
}
