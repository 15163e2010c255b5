#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imsep/graph.hpp"

namespace imsep {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;          // each sorted ascending
    std::vector<std::pair<int, int>> tree_edges; // tree on bag indices

    int width() const;  // max bag size - 1; -1 when every bag is empty
};

// Validates bag contents, that tree_edges form a tree, that every vertex and
// edge of g is covered, and that each vertex's bags induce a subtree.
// std::nullopt means valid.
std::optional<std::string> check_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Path decompositions are bag sequences; the tree is implied.
std::optional<std::string> check_path_decomposition(const Graph& g,
                                                    const std::vector<std::vector<int>>& bags);

int path_width(const std::vector<std::vector<int>>& bags);

}  // namespace imsep
