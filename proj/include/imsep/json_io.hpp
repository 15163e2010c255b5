#pragma once

#include <iosfwd>
#include <string>

#include "imsep/graph.hpp"

#include "json.hpp"

namespace imsep {

// On-disk graph format, version 1:
//   {"version": 1, "n": <int>, "edges": [[u, v], ...]}
// Edges are emitted with u < v in ascending lexicographic order, so equal
// graphs serialize to byte-identical JSON.
nlohmann::json graph_to_json(const Graph& g);

// Accepts any edge order / orientation; rejects out-of-range endpoints,
// self-loops and unknown versions.
Graph graph_from_json(const nlohmann::json& j);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

// Graphviz rendering of the same graph, one edge per line.
std::string graph_to_dot(const Graph& g, const std::string& name = "g");

}  // namespace imsep
