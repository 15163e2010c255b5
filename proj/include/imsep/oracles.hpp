#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "imsep/graph.hpp"
#include "imsep/model.hpp"
#include "imsep/separation.hpp"

namespace imsep {

// Exhaustive reference implementations. All of them refuse hosts above their
// vertex cap instead of silently taking forever. They exist to pin down
// expected answers for the fast algorithms, so they favor obviousness over
// speed and are deterministic: ties break towards smaller ids / larger masks.

// First induced-minor model found by assigning branch sets to pattern
// vertices in ascending order. nullopt means no model exists.
std::optional<InducedMinorModel> brute_induced_minor(const Graph& host, const Graph& pattern,
                                                     int max_host_vertices = 12);

// Visits every model; visit returning false stops the walk. Returns the
// number of models visited.
long long for_each_induced_minor_model(const Graph& host, const Graph& pattern,
                                       const std::function<bool(const InducedMinorModel&)>& visit,
                                       int max_host_vertices = 12);

// Like brute_induced_minor but branch set i must contain all host vertices in
// required_in_branch_set[i].
std::optional<InducedMinorModel> brute_anchored_induced_minor(
    const Graph& host, const Graph& pattern,
    const std::vector<std::vector<int>>& required_in_branch_set, int max_host_vertices = 12);

std::vector<int> brute_max_independent_set(const Graph& g, int max_vertices = 22);

// Smallest s whose removal leaves parts groupable into two sides of at most
// 2n/3 vertices each (one side may be empty).
Separation brute_min_balanced_separator(const Graph& g, int max_vertices = 16);

int brute_pathwidth(const Graph& g, int max_vertices = 10);

struct MinimalHost {
    Graph graph;
    std::vector<int> kept;  // original host ids, ascending
};

// Deletes vertices (smallest deletable id first, rescanning after every
// deletion) while the pattern stays an induced minor. Throws if the pattern
// is not an induced minor of the host to begin with.
MinimalHost minimal_model_host(const Graph& host, const Graph& pattern,
                               int max_host_vertices = 12);

}  // namespace imsep
