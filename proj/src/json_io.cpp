#include <hhl/json_io.hpp>

#include <stdexcept>

namespace hhl {

nlohmann::ordered_json edges_to_json(const Hypergraph& h)
{
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : h.edges())
        edges.push_back(e.vertices());
    return edges;
}

nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h)
{
    return {{"t", h.t()}, {"edges", edges_to_json(h)}};
}

Hypergraph hypergraph_from_json(const nlohmann::ordered_json& j)
{
    if (!j.is_object() || !j.contains("t") || !j.contains("edges"))
        throw std::runtime_error("hypergraph JSON needs \"t\" and \"edges\"");
    for (const auto& [key, value] : j.items())
        if (key != "t" && key != "edges")
            throw std::runtime_error("hypergraph JSON: unexpected key \"" + key + "\"");
    const auto& jt = j.at("t");
    if (!jt.is_number_integer() || jt.get<long long>() < 1)
        throw std::runtime_error("hypergraph JSON: \"t\" must be a positive integer");
    const auto t = jt.get<std::size_t>();
    const auto& je = j.at("edges");
    if (!je.is_array())
        throw std::runtime_error("hypergraph JSON: \"edges\" must be an array");

    std::vector<Edge> edges;
    for (const auto& edge : je) {
        if (!edge.is_array())
            throw std::runtime_error("hypergraph JSON: every edge must be an array");
        std::vector<Vertex> members;
        for (const auto& v : edge) {
            if (!v.is_number_integer())
                throw std::runtime_error("hypergraph JSON: vertices must be integers");
            auto raw = v.get<long long>();
            if (raw < 1 || static_cast<unsigned long long>(raw) > t)
                throw std::runtime_error("hypergraph JSON: vertex " + std::to_string(raw) + " outside [1, " +
                                         std::to_string(t) + "]");
            members.push_back(static_cast<Vertex>(raw));
        }
        try {
            edges.emplace_back(t, std::move(members));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string("hypergraph JSON: ") + e.what());
        }
    }
    try {
        return Hypergraph(t, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("hypergraph JSON: ") + e.what());
    }
}

Hypergraph read_hypergraph(std::istream& in)
{
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::ordered_json::parse_error& e) {
        throw std::runtime_error(std::string("hypergraph JSON: ") + e.what());
    }
    return hypergraph_from_json(j);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h)
{
    out << hypergraph_to_json(h).dump() << '\n';
}

nlohmann::ordered_json to_json(const LearnReport& r)
{
    return {
        {"t", r.params.t},
        {"s", r.params.s},
        {"l", r.params.l},
        {"queries_total", r.queries_total()},
        {"queries_vertex_search", r.stats.queries_vertex_search},
        {"queries_edge_search", r.stats.queries_edge_search},
        {"queries_query_search", r.stats.queries_query_search},
        {"result_edges", edges_to_json(r.result)},
    };
}

nlohmann::ordered_json to_json(const TwoStageReport& r)
{
    return {
        {"t", r.t},
        {"s", r.s},
        {"l", r.l},
        {"epsilon", r.epsilon},
        {"layers", r.layers},
        {"stage1_queries", r.stage1_queries},
        {"stage2_queries", r.stage2_queries},
        {"success", r.success},
        {"recovered_edges", r.recovered ? edges_to_json(*r.recovered) : nlohmann::ordered_json::array()},
    };
}

} // namespace hhl
