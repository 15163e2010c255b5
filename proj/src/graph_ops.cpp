#include "imsep/graph_ops.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace imsep {

Graph subdivide(const Graph& g, int times) {
    if (times < 0) throw std::invalid_argument("subdivide: times must be >= 0");
    auto es = g.edges();
    int n = g.vertex_count();
    Graph out(n + times * static_cast<int>(es.size()));
    for (std::size_t j = 0; j < es.size(); ++j) {
        auto [u, v] = es[j];
        if (times == 0) {
            out.add_edge(u, v);
            continue;
        }
        int first = n + times * static_cast<int>(j);
        out.add_edge(u, first);
        for (int t = 0; t + 1 < times; ++t) out.add_edge(first + t, first + t + 1);
        out.add_edge(first + times - 1, v);
    }
    return out;
}

InducedMinorModel subdivision_contraction_model(const Graph& g, int times) {
    if (times < 0) throw std::invalid_argument("subdivision_contraction_model: times must be >= 0");
    InducedMinorModel m;
    int n = g.vertex_count();
    m.branch_sets.resize(n);
    for (int v = 0; v < n; ++v) m.branch_sets[v] = {v};
    auto es = g.edges();
    for (std::size_t j = 0; j < es.size(); ++j) {
        int u = es[j].first;  // smaller endpoint absorbs the internals
        int first = n + times * static_cast<int>(j);
        for (int t = 0; t < times; ++t) m.branch_sets[u].push_back(first + t);
    }
    for (auto& bs : m.branch_sets) std::sort(bs.begin(), bs.end());
    return m;
}

SubcubicExpansion make_subcubic(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> width(n), base(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        width[v] = std::max(1, g.degree(v) - 2);
        base[v + 1] = base[v] + width[v];
    }

    Graph out(base[n]);
    for (int v = 0; v < n; ++v)
        for (int t = 0; t + 1 < width[v]; ++t) out.add_edge(base[v] + t, base[v] + t + 1);

    // The node of v's path that carries the edge to u. Ranks 0 and 1 share
    // the first node, the last two ranks share the last; path ends have one
    // spare degree, interior nodes one attachment each.
    auto port = [&](int v, int u) {
        const auto& nb = g.neighbors(v);
        int r = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), u) - nb.begin());
        return base[v] + std::clamp(r - 1, 0, width[v] - 1);
    };
    for (auto [u, v] : g.edges()) out.add_edge(port(u, v), port(v, u));
    assert(out.max_degree() <= 3);

    SubcubicExpansion res{std::move(out), {}};
    res.expansion.branch_sets.resize(n);
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < width[v]; ++t) res.expansion.branch_sets[v].push_back(base[v] + t);
    return res;
}

DegeneracyResult degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    DegeneracyResult res;
    res.order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        res.degeneracy = std::max(res.degeneracy, deg[pick]);
        removed[pick] = true;
        res.order.push_back(pick);
        for (int u : g.neighbors(pick))
            if (!removed[u]) --deg[u];
    }
    return res;
}

}  // namespace imsep
