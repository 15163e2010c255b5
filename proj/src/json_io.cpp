#include "imsep/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace imsep {

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["version"] = 1;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph json: expected an object");
    if (j.value("version", 0) != 1) throw std::invalid_argument("graph json: unsupported version");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph json: missing integer field 'n'");
    int n = j["n"].get<int>();
    if (n < 0) throw std::invalid_argument("graph json: n must be >= 0");
    Graph g(n);
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("graph json: missing array field 'edges'");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write graph file: " + path);
    out << graph_to_json(g).dump(2) << '\n';
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace imsep
