#include "imsep/flow_sep.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace imsep {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Weights are exponentials shifted by the max length; the floor keeps the
// least loaded vertices from flushing to zero entirely.
constexpr double kWeightFloor = 1e-280;

std::vector<double> weights_from_lengths(const std::vector<double>& loglen) {
    double lmax = 0.0;
    for (double l : loglen) lmax = std::max(lmax, l);
    std::vector<double> w(loglen.size());
    for (std::size_t v = 0; v < loglen.size(); ++v)
        w[v] = std::max(std::exp(loglen[v] - lmax), kWeightFloor);
    return w;
}

// Distances are sums of vertex weights including both endpoints. Parents are
// recorded at relaxation time: with tiny weights the sum dist[u] + w[v] can
// round to dist[u] exactly, so re-deriving parents from distances afterwards
// would see tight edges in both directions and walk in circles. The queue
// items (dist, id) are pairwise distinct, so pops follow a strict total
// order and the parent tree is reproducible.
struct ShortestPaths {
    std::vector<double> dist;
    std::vector<int> parent;  // -1 at the source and off the tree
};

ShortestPaths dijkstra(const Graph& g, int s, const std::vector<double>& w) {
    ShortestPaths sp{std::vector<double>(g.vertex_count(), kInf),
                     std::vector<int>(g.vertex_count(), -1)};
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    sp.dist[s] = w[s];
    pq.push({sp.dist[s], s});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > sp.dist[v]) continue;
        for (int u : g.neighbors(v)) {
            double nd = d + w[u];
            if (nd < sp.dist[u]) {
                sp.dist[u] = nd;
                sp.parent[u] = v;
                pq.push({nd, u});
            }
        }
    }
    return sp;
}

std::vector<int> walk_back(int s, int t, const std::vector<int>& parent) {
    std::vector<int> rev{t};
    for (int v = t; v != s;) {
        v = parent[v];
        assert(v != -1);
        rev.push_back(v);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::vector<std::vector<int>> components_avoiding(const Graph& g, const std::vector<char>& skip) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int v0 = 0; v0 < n; ++v0) {
        if (skip[v0] || seen[v0]) continue;
        std::vector<int> comp, stack{v0};
        seen[v0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!skip[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Splits components into two sides both holding at most 2n/3 vertices, which
// is possible whenever every component fits the bound: biggest components go
// to side a until side b's leftover fits.
std::pair<std::vector<int>, std::vector<int>> group_balanced(std::vector<std::vector<int>> comps,
                                                             int n, int rest) {
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& x, const auto& y) { return x.size() > y.size(); });
    int threshold = std::max(0, rest - (2 * n) / 3);
    std::vector<int> a, b;
    for (auto& c : comps) {
        auto& side = static_cast<int>(a.size()) < threshold ? a : b;
        side.insert(side.end(), c.begin(), c.end());
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return {std::move(a), std::move(b)};
}

Separation sweep_cut(const Graph& g, const std::vector<double>& loglen) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (loglen[x] != loglen[y]) return loglen[x] > loglen[y];
        return x < y;
    });

    std::vector<char> in_s(n, 0);
    std::vector<int> s_list;
    Separation best;
    double best_sparsity = kInf;
    for (int k = 1; k <= n; ++k) {
        in_s[order[k - 1]] = 1;
        s_list.push_back(order[k - 1]);

        auto comps = components_avoiding(g, in_s);
        bool fits = true;
        for (const auto& c : comps)
            if (3 * c.size() > 2 * static_cast<std::size_t>(n)) fits = false;
        if (!fits) continue;

        auto [a, b] = group_balanced(std::move(comps), n, n - k);
        double sparsity = static_cast<double>(k) /
                          (static_cast<double>(a.size() + k) * static_cast<double>(b.size() + k));
        if (sparsity < best_sparsity) {
            best_sparsity = sparsity;
            best.a = a;
            best.s = s_list;
            best.b = b;
            std::sort(best.s.begin(), best.s.end());
        }
    }
    assert(best_sparsity < kInf);  // k = n always qualifies
    assert(is_balanced(g, best));
    return best;
}

}  // namespace

FlowOrCut flow_or_sparse_cut(const Graph& g, double gamma, const FlowOptions& opt) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("flow_or_sparse_cut: graph is empty");
    if (gamma < 1.0) throw std::invalid_argument("flow_or_sparse_cut: gamma must be >= 1");
    if (!g.is_connected()) throw std::invalid_argument("flow_or_sparse_cut: graph must be connected");

    double eps = opt.eps;
    int rounds = std::max(
        opt.min_rounds,
        static_cast<int>(std::ceil(opt.rounds_coef * std::log2(static_cast<double>(std::max(2, n))) /
                                   (eps * eps))));

    std::vector<double> loglen(n, 0.0), total_load(n, 0.0);
    // One routed path per round for every ordered pair.
    std::vector<std::vector<std::vector<int>>> round_paths(static_cast<std::size_t>(n) * n);

    for (int r = 0; r < rounds; ++r) {
        auto w = weights_from_lengths(loglen);
        std::vector<double> load(n, 1.0);  // the (v,v) path
        for (int s = 0; s < n; ++s) {
            auto sp = dijkstra(g, s, w);
            for (int t = 0; t < n; ++t) {
                if (t == s) continue;
                auto path = walk_back(s, t, sp.parent);
                for (int v : path) load[v] += 1.0;
                round_paths[static_cast<std::size_t>(s) * n + t].push_back(std::move(path));
            }
        }
        for (int v = 0; v < n; ++v) {
            total_load[v] += load[v];
            loglen[v] += eps * load[v] / gamma;
        }
    }

    double congestion = 0.0;
    for (int v = 0; v < n; ++v) congestion = std::max(congestion, total_load[v] / rounds);
    if (congestion > gamma * (1.0 + eps) + 1e-12) return sweep_cut(g, loglen);

    VertexFlow flow;
    for (int v = 0; v < n; ++v) flow.paths.push_back({v, v, 1.0, {v}});
    double per_round = 1.0 / rounds;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (t == s) continue;
            auto& paths = round_paths[static_cast<std::size_t>(s) * n + t];
            std::sort(paths.begin(), paths.end());
            for (std::size_t i = 0; i < paths.size();) {
                std::size_t j = i;
                while (j < paths.size() && paths[j] == paths[i]) ++j;
                flow.paths.push_back(
                    {s, t, per_round * static_cast<double>(j - i), std::move(paths[i])});
                i = j;
            }
        }
    return flow;
}

SeparatorOrFlow balanced_separator_or_flow(const Graph& g, double gamma, const FlowOptions& opt) {
    if (gamma < 1.0)
        throw std::invalid_argument("balanced_separator_or_flow: gamma must be >= 1");
    int n = g.vertex_count();
    std::vector<int> part(n), sep, other;
    for (int v = 0; v < n; ++v) part[v] = v;

    while (3 * part.size() > 2 * static_cast<std::size_t>(n)) {
        Graph sub = g.induced(part);  // local i <-> part[i]
        auto to_orig = [&](const std::vector<int>& locals) {
            std::vector<int> out;
            out.reserve(locals.size());
            for (int l : locals) out.push_back(part[l]);
            return out;
        };

        std::vector<int> keep_loc, drop_loc, cut_loc;
        if (!sub.is_connected()) {
            auto [a, b] = group_balanced(sub.components(), static_cast<int>(part.size()),
                                         static_cast<int>(part.size()));
            keep_loc = a.size() >= b.size() ? a : b;
            drop_loc = a.size() >= b.size() ? b : a;
        } else {
            auto res = flow_or_sparse_cut(sub, gamma, opt);
            if (std::holds_alternative<VertexFlow>(res))
                return SubgraphFlow{part, std::get<VertexFlow>(std::move(res))};
            Separation cut = std::get<Separation>(std::move(res));
            keep_loc = cut.a.size() >= cut.b.size() ? cut.a : cut.b;
            drop_loc = cut.a.size() >= cut.b.size() ? cut.b : cut.a;
            cut_loc = cut.s;
        }

        auto dropped = to_orig(drop_loc);
        other.insert(other.end(), dropped.begin(), dropped.end());
        auto cut = to_orig(cut_loc);
        sep.insert(sep.end(), cut.begin(), cut.end());
        part = to_orig(keep_loc);  // ascending: locals ascending, part ascending
    }

    std::sort(sep.begin(), sep.end());
    std::sort(other.begin(), other.end());
    Separation out{std::move(part), std::move(sep), std::move(other)};
    assert(check_separation(g, out) == std::nullopt);
    assert(is_balanced(g, out));
    return out;
}

}  // namespace imsep
