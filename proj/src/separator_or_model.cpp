#include "imsep/separator_or_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace imsep {

double separation_gamma(const Graph& g, const Graph& pattern) {
    double n = g.vertex_count();
    double hsize = std::max<double>(1.0, pattern.vertex_count() + pattern.edges().size());
    double m = std::max<double>(1.0, static_cast<double>(g.edges().size()));
    return n * n / (120.0 * std::sqrt(hsize) * std::sqrt(m));
}

SeparatorOrModel find_separator_or_model(const Graph& g, const Graph& pattern,
                                         std::uint64_t seed, const FindOptions& opt) {
    double gamma = opt.gamma_override > 0 ? opt.gamma_override
                                          : std::max(1.0, separation_gamma(g, pattern));
    auto r = balanced_separator_or_flow(g, gamma, opt.flow);
    if (auto* sep = std::get_if<Separation>(&r)) return std::move(*sep);

    auto& sf = std::get<SubgraphFlow>(r);
    Graph part = g.induced(sf.vertices);
    auto local = embed_induced_minor(part, pattern, sf.flow, seed, opt.embed);
    if (!local)
        throw std::runtime_error(
            "find_separator_or_model: flow routed but the placement budget ran out");
    for (auto& bs : local->branch_sets)
        for (int& v : bs) v = sf.vertices[v];
    return std::move(*local);
}

}  // namespace imsep
