#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imsep/graph.hpp"

namespace imsep {

// Partition of the vertices into (a, s, b) with no edge between a and b.
// a or b may be empty; all three lists are sorted ascending.
struct Separation {
    std::vector<int> a, s, b;

    bool operator==(const Separation&) const = default;
};

std::optional<std::string> check_separation(const Graph& g, const Separation& sep);

// Balance threshold used throughout: neither side exceeds two thirds of the
// whole graph, as the exact integer test 3*max(|a|,|b|) <= 2n.
bool is_balanced(const Graph& g, const Separation& sep);

// |s| / (|a union s| * |b union s|); smaller is sparser.
double separation_sparsity(const Graph& g, const Separation& sep);

}  // namespace imsep
