#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "imsep/graph.hpp"
#include "imsep/model.hpp"
#include "imsep/separator_or_model.hpp"
#include "imsep/tree_decomposition.hpp"

namespace imsep {

// One leaf of the degeneracy branching tree. `ground` holds the vertices a
// candidate solution may still use (committed plus undecided), `forced` the
// committed ones. Every vertex set inducing a subgraph of degeneracy at most
// delta is sandwiched as forced <= Y <= ground by at least one leaf.
struct BranchLeaf {
    std::vector<int> ground;
    std::vector<int> forced;
    std::string trace;
};

// Branches on vertices whose undecided degree exceeds max_degree: either the
// vertex is discarded, or it is committed and all but at most delta of its
// undecided neighbours lose one credit (falling out at zero credits).
// Requires max_degree >= delta >= 0.
std::vector<BranchLeaf> degeneracy_branching(const Graph& g, int delta, int max_degree);

struct TDOptions {
    int leaf_size = 8;  // components at most this large become single bags
    std::uint64_t seed = 0;
    FindOptions find;
};

// Recursive balanced separation builds the decomposition; finding the
// pattern instead aborts the recursion and surfaces the model.
using TDOrModel = std::variant<TreeDecomposition, InducedMinorModel>;
TDOrModel tree_decomposition_via_separators(const Graph& g, const Graph& pattern,
                                            const TDOptions& opt = {});

// Maximum independent set by dynamic programming over the decomposition.
// Caps: bags of at most 22 vertices, hosts of at most 256.
std::vector<int> mis_treewidth_dp(const Graph& g, const TreeDecomposition& td);

struct SubexpOptions {
    int max_degree = 0;  // 0 picks ceil(n^(1/3)) (plus the credit budget where one applies)
    int leaf_size = 8;
    std::uint64_t seed = 0;
    FindOptions find;
};

struct MisResult {
    std::vector<int> set;
    bool used_fallback = false;  // a leaf was solved by brute force after a model surfaced
    std::size_t leaves = 0;
};

// Maximum independent set via degeneracy branching over leaves solved with
// separator decompositions. `pattern` is the graph whose absence keeps the
// separators small; finding it switches the affected leaf to brute force.
MisResult solve_mis(const Graph& g, const Graph& pattern, const SubexpOptions& opt = {});

// Induced-minor test for patterns whose every edge leans on a vertex of
// degree at most two. Branches with a credit budget of 3|V(pattern)|, then
// checks each leaf by exhaustive search (host leaves capped at 12 vertices).
std::optional<InducedMinorModel> induced_minor_test(const Graph& g, const Graph& pattern,
                                                    const SubexpOptions& opt = {});

}  // namespace imsep
