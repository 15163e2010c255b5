#pragma once

#include "imsep/graph.hpp"
#include "imsep/rng.hpp"

namespace imsep {

// Vertex of a rows x cols grid at (r, c) has id r*cols + c.
Graph gen_grid(int rows, int cols);

Graph gen_path(int n);

Graph gen_cycle(int n);

Graph gen_complete(int n);

// Star with center 0 and leaves 1..n-1 (n vertices total).
Graph gen_star(int n);

// Erdos-Renyi G(n, p); each pair drawn in ascending lexicographic order so
// the result is a pure function of (n, p, seed).
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Complete binary tree with `levels` levels (root only for levels = 1).
// Heap layout: children of i are 2i+1 and 2i+2.
Graph gen_complete_binary_tree(int levels);

// Outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph gen_petersen();

}  // namespace imsep
