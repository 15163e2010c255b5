#pragma once

#include <array>
#include <utility>
#include <vector>

#include "imsep/flow.hpp"
#include "imsep/graph.hpp"

namespace imsep {

// Shift graph on 2^b vertices: v_x and v_y are adjacent when one index is
// the other doubled, or doubled plus one, modulo 2^b.
Graph bs_generate(int b);

// Edge partition of bs_generate(b) into four parts, each of which stays
// narrow even together with the spine path v_0, v_1, ..., v_{2^b-1}:
// certificates[i] is a path decomposition of (spine + parts[i]) with
// width at most 16.
struct ShiftPartition {
    int b = 0;
    std::array<std::vector<std::pair<int, int>>, 4> parts;  // each lex-sorted
    std::array<std::vector<std::vector<int>>, 4> certificates;
};

ShiftPartition bs_partition(int b);  // requires b >= 2

// The graph a certificate talks about: spine path plus one part.
Graph bs_part_with_spine(int b, const std::vector<std::pair<int, int>>& part);

// One unit path per ordered pair (v_x, v_y), routed inside the subgraph
// induced by the length-b windows of bin(x)++bin(y). A vertex lies on a
// pair's path only when its bits occur as such a window, so congestion is
// at most (b+1)*2^b.
VertexFlow bs_canonical_flow(int b);  // requires 1 <= b <= 12

}  // namespace imsep
