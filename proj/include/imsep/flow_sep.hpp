#pragma once

#include <variant>
#include <vector>

#include "imsep/flow.hpp"
#include "imsep/graph.hpp"
#include "imsep/separation.hpp"

namespace imsep {

struct FlowOptions {
    double eps = 0.25;         // acceptance slack and step size
    double rounds_coef = 0.05; // rounds = max(min_rounds, ceil(coef*log2(n)/eps^2))
    int min_rounds = 3;
};

// Multiplicative-weights routing on a connected graph. Either an all-pairs
// concurrent flow with congestion at most gamma*(1+eps), or a balanced
// separation whose sparsity the routing lengths point at. gamma must be >= 1.
using FlowOrCut = std::variant<VertexFlow, Separation>;
FlowOrCut flow_or_sparse_cut(const Graph& g, double gamma, const FlowOptions& opt = {});

// Flow living on an induced subgraph: `flow` uses local ids of
// g.induced(vertices); vertices lists the original ids ascending.
struct SubgraphFlow {
    std::vector<int> vertices;
    VertexFlow flow;
};

// Peels the graph with flow_or_sparse_cut until the working part either
// shrinks below 2n/3 (returning the accumulated balanced separation) or
// routes a cheap flow (returned together with the part it lives on).
using SeparatorOrFlow = std::variant<Separation, SubgraphFlow>;
SeparatorOrFlow balanced_separator_or_flow(const Graph& g, double gamma,
                                           const FlowOptions& opt = {});

}  // namespace imsep
