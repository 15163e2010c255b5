#pragma once

#include <cstdint>
#include <variant>

#include "imsep/embedding.hpp"
#include "imsep/flow_sep.hpp"
#include "imsep/graph.hpp"
#include "imsep/model.hpp"
#include "imsep/separation.hpp"

namespace imsep {

// Congestion target scaled so that a routable flow certifies enough room to
// place the pattern: n^2 / (120 * sqrt(|V(H)|+|E(H)|) * sqrt(|E(G)|)).
double separation_gamma(const Graph& g, const Graph& pattern);

struct FindOptions {
    FlowOptions flow;
    EmbedOptions embed;
    double gamma_override = 0;  // > 0 replaces the size-derived target
};

// Either a balanced separation of g or an induced-minor model of pattern in
// g. Throws std::runtime_error if the routing certifies room but the
// placement budget runs out anyway.
using SeparatorOrModel = std::variant<Separation, InducedMinorModel>;
SeparatorOrModel find_separator_or_model(const Graph& g, const Graph& pattern,
                                         std::uint64_t seed, const FindOptions& opt = {});

}  // namespace imsep
