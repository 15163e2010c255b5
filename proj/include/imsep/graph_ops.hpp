#pragma once

#include <vector>

#include "imsep/graph.hpp"
#include "imsep/model.hpp"

namespace imsep {

// Replaces every edge by a path with `times` internal vertices. Original
// vertices keep their ids; edge j of g.edges() gets internals
// n + times*j ... n + times*j + times - 1, numbered from the smaller
// endpoint towards the larger. times = 0 copies the graph.
Graph subdivide(const Graph& g, int times);

// Model of g inside subdivide(g, times) obtained by merging every internal
// vertex into the smaller endpoint of its edge.
InducedMinorModel subdivision_contraction_model(const Graph& g, int times);

struct SubcubicExpansion {
    Graph graph;                 // max degree <= 3
    InducedMinorModel expansion; // model of the input inside `graph`
};

// Expands every vertex of degree d >= 4 into a path of d - 2 nodes, spreading
// its incident edges so no node exceeds degree 3; vertices of degree <= 3 stay
// single nodes. Edges of the input become edges between the nodes their
// endpoints' ranks select. Ids are assigned by ascending input vertex, path
// nodes consecutive.
SubcubicExpansion make_subcubic(const Graph& g);

struct DegeneracyResult {
    int degeneracy = 0;
    // Removal sequence: each vertex has <= degeneracy neighbors later in it.
    std::vector<int> order;
};

// Min-degree peeling, smallest id first among ties.
DegeneracyResult degeneracy_order(const Graph& g);

}  // namespace imsep
