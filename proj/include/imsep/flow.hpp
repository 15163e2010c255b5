#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imsep/graph.hpp"

namespace imsep {

// One weighted routed path; vertices runs from src to dst inclusive.
struct FlowPath {
    int src = 0, dst = 0;
    double weight = 0.0;
    std::vector<int> vertices;

    bool operator==(const FlowPath&) const = default;
};

// All-pairs concurrent vertex flow: every ordered pair (u, v) of vertices,
// (v, v) included, carries total weight 1; the pair (v, v) rides the
// one-vertex path. Congestion charges a path to every vertex it visits.
struct VertexFlow {
    std::vector<FlowPath> paths;

    bool operator==(const VertexFlow&) const = default;
};

std::optional<std::string> check_concurrent_flow(const Graph& g, const VertexFlow& f,
                                                 double tol = 1e-9);

double flow_congestion(const Graph& g, const VertexFlow& f);

}  // namespace imsep
