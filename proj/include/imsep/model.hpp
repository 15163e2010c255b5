#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imsep/graph.hpp"

namespace imsep {

// Witness that `pattern` is an induced minor of `host`: one branch set per
// pattern vertex. Branch sets are kept sorted ascending.
struct InducedMinorModel {
    std::vector<std::vector<int>> branch_sets;
};

// Returns std::nullopt when the model is valid, otherwise a description of
// the first violated requirement. Valid means: one nonempty branch set per
// pattern vertex, pairwise disjoint, each inducing a connected subgraph of
// host, and host has an edge between two branch sets iff the corresponding
// pattern vertices are adjacent.
std::optional<std::string> check_induced_minor_model(const Graph& host, const Graph& pattern,
                                                     const InducedMinorModel& model);

bool is_valid_induced_minor_model(const Graph& host, const Graph& pattern,
                                  const InducedMinorModel& model);

// Plain-minor variant: same branch set requirements, but host edges between
// branch sets are only required for pattern edges, never forbidden.
std::optional<std::string> check_minor_model(const Graph& host, const Graph& pattern,
                                             const InducedMinorModel& model);

// Models compose: from a model of A in B and a model of B in C, build the
// model of A in C whose branch set for a is the union of the C-branch sets
// of all B-vertices in a's branch set.
InducedMinorModel compose_models(const InducedMinorModel& a_in_b, const InducedMinorModel& b_in_c);

}  // namespace imsep
