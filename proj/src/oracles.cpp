#include "imsep/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace imsep {
namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask(1) << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> nbr(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= bit(v);
        nbr[v] |= bit(u);
    }
    return nbr;
}

// Open neighborhood of the set s.
Mask neighborhood(Mask s, const std::vector<Mask>& nbr) {
    Mask out = 0;
    for (Mask t = s; t; t &= t - 1) out |= nbr[std::countr_zero(t)];
    return out & ~s;
}

bool mask_connected(Mask s, const std::vector<Mask>& nbr) {
    if (!s) return false;
    Mask grow = s & (~s + 1);
    for (;;) {
        Mask next = grow;
        for (Mask t = grow; t; t &= t - 1) next |= nbr[std::countr_zero(t)] & s;
        if (next == grow) break;
        grow = next;
    }
    return grow == s;
}

std::vector<int> mask_to_vec(Mask s) {
    std::vector<int> out;
    for (Mask t = s; t; t &= t - 1) out.push_back(std::countr_zero(t));
    return out;
}

void check_cap(const Graph& g, int max_vertices, int hard_cap, const char* who) {
    if (max_vertices > hard_cap)
        throw std::invalid_argument(std::string(who) + ": cap exceeds supported maximum");
    if (g.vertex_count() > max_vertices)
        throw std::invalid_argument(std::string(who) + ": graph is larger than the cap");
}

struct ModelSearch {
    int k = 0;
    Mask full = 0;
    std::vector<Mask> nbr;       // host adjacency
    std::vector<Mask> pat_adj;   // pattern adjacency
    std::vector<Mask> required;  // anchors forced into each branch set
    std::vector<Mask> chosen;
    std::vector<Mask> chosen_nbr;
    const std::function<bool(const InducedMinorModel&)>* visit = nullptr;
    long long visited = 0;

    // Depth-first over pattern vertices; within a level candidates run from
    // the largest allowed submask downwards. Returns true to abort the walk.
    bool rec(int i) {
        if (i == k) {
            ++visited;
            InducedMinorModel m;
            m.branch_sets.reserve(k);
            for (Mask s : chosen) m.branch_sets.push_back(mask_to_vec(s));
            return !(*visit)(m);
        }
        Mask used = 0, blocked = 0;
        for (int j = 0; j < i; ++j) {
            used |= chosen[j];
            if (!(pat_adj[i] & bit(j))) blocked |= chosen_nbr[j];
        }
        Mask allowed = full & ~used & ~blocked;
        if ((required[i] & ~allowed) != 0) return false;
        // Only disjointness restricts later branch sets; vertices blocked for
        // this one may still serve them.
        if (std::popcount(full & ~used) < k - i) return false;

        for (Mask s = allowed; s; s = (s - 1) & allowed) {
            if ((s & required[i]) != required[i]) continue;
            if (!mask_connected(s, nbr)) continue;
            bool touches_all = true;
            for (int j = 0; j < i && touches_all; ++j)
                if ((pat_adj[i] & bit(j)) && !(s & chosen_nbr[j])) touches_all = false;
            if (!touches_all) continue;
            chosen[i] = s;
            chosen_nbr[i] = neighborhood(s, nbr);
            if (rec(i + 1)) return true;
        }
        return false;
    }
};

long long run_model_search(const Graph& host, const Graph& pattern,
                           const std::vector<std::vector<int>>* anchors,
                           const std::function<bool(const InducedMinorModel&)>& visit,
                           int max_host_vertices) {
    check_cap(host, max_host_vertices, 20, "induced minor search");
    ModelSearch ms;
    ms.k = pattern.vertex_count();
    ms.full = host.vertex_count() == 0 ? 0 : (bit(host.vertex_count()) - 1);
    ms.nbr = adjacency_masks(host);
    ms.pat_adj = adjacency_masks(pattern);
    ms.required.assign(ms.k, 0);
    if (anchors) {
        if (static_cast<int>(anchors->size()) != ms.k)
            throw std::invalid_argument("anchored search: need one anchor list per pattern vertex");
        for (int i = 0; i < ms.k; ++i)
            for (int v : (*anchors)[i]) {
                host.check_vertex(v);
                ms.required[i] |= bit(v);
            }
    }
    ms.chosen.assign(ms.k, 0);
    ms.chosen_nbr.assign(ms.k, 0);
    ms.visit = &visit;
    ms.rec(0);
    return ms.visited;
}

}  // namespace

std::optional<InducedMinorModel> brute_induced_minor(const Graph& host, const Graph& pattern,
                                                     int max_host_vertices) {
    std::optional<InducedMinorModel> found;
    run_model_search(host, pattern, nullptr,
                     [&](const InducedMinorModel& m) {
                         found = m;
                         return false;
                     },
                     max_host_vertices);
    return found;
}

long long for_each_induced_minor_model(const Graph& host, const Graph& pattern,
                                       const std::function<bool(const InducedMinorModel&)>& visit,
                                       int max_host_vertices) {
    return run_model_search(host, pattern, nullptr, visit, max_host_vertices);
}

std::optional<InducedMinorModel> brute_anchored_induced_minor(
    const Graph& host, const Graph& pattern,
    const std::vector<std::vector<int>>& required_in_branch_set, int max_host_vertices) {
    std::optional<InducedMinorModel> found;
    run_model_search(host, pattern, &required_in_branch_set,
                     [&](const InducedMinorModel& m) {
                         found = m;
                         return false;
                     },
                     max_host_vertices);
    return found;
}

std::vector<int> brute_max_independent_set(const Graph& g, int max_vertices) {
    check_cap(g, max_vertices, 26, "independent set search");
    auto nbr = adjacency_masks(g);
    Mask best = 0;

    // Branch on the highest-degree available vertex; taking it first makes
    // the first optimum found the canonical witness.
    auto rec = [&](auto&& self, Mask avail, Mask cur) -> void {
        if (std::popcount(cur) + std::popcount(avail) <= std::popcount(best)) return;
        if (!avail) {
            best = cur;
            return;
        }
        int pick = -1, pick_deg = -1;
        for (Mask t = avail; t; t &= t - 1) {
            int v = std::countr_zero(t);
            int d = std::popcount(nbr[v] & avail);
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        self(self, avail & ~(nbr[pick] | bit(pick)), cur | bit(pick));
        self(self, avail & ~bit(pick), cur);
    };
    rec(rec, g.vertex_count() == 0 ? 0 : bit(g.vertex_count()) - 1, 0);
    return mask_to_vec(best);
}

Separation brute_min_balanced_separator(const Graph& g, int max_vertices) {
    check_cap(g, max_vertices, 16, "balanced separator search");
    int n = g.vertex_count();
    auto nbr = adjacency_masks(g);
    Mask full = n == 0 ? 0 : bit(n) - 1;

    auto components_of = [&](Mask rest) {
        std::vector<Mask> comps;
        Mask left = rest;
        while (left) {
            Mask grow = left & (~left + 1);
            for (;;) {
                Mask next = grow;
                for (Mask t = grow; t; t &= t - 1) next |= nbr[std::countr_zero(t)] & left;
                if (next == grow) break;
                grow = next;
            }
            comps.push_back(grow);
            left &= ~grow;
        }
        return comps;
    };

    for (int size = 0; size <= n; ++size) {
        for (Mask s = 0; s <= full; ++s) {
            if (std::popcount(s) != size) continue;
            auto comps = components_of(full & ~s);
            bool ok = true;
            for (Mask c : comps)
                if (3 * std::popcount(c) > 2 * n) ok = false;
            if (!ok) continue;
            // Group components into side a / side b; smallest feasible
            // component subset becomes a.
            int nc = static_cast<int>(comps.size());
            for (Mask pickc = 0; pickc < (Mask(1) << nc); ++pickc) {
                Mask a = 0, b = 0;
                for (int c = 0; c < nc; ++c)
                    ((pickc >> c) & 1 ? a : b) |= comps[c];
                int big = std::max(std::popcount(a), std::popcount(b));
                if (3 * big <= 2 * n)
                    return Separation{mask_to_vec(a), mask_to_vec(s), mask_to_vec(b)};
            }
        }
    }
    // size == n always succeeds, so this is unreachable.
    throw std::logic_error("balanced separator search fell through");
}

int brute_pathwidth(const Graph& g, int max_vertices) {
    check_cap(g, max_vertices, 20, "pathwidth search");
    int n = g.vertex_count();
    if (n == 0) return -1;
    auto nbr = adjacency_masks(g);
    Mask full = bit(n) - 1;

    // dp[S] = over orders placing S first, the least possible maximum of
    // |{v in prefix with a neighbor outside it}|; equals pathwidth at V.
    std::vector<std::int8_t> dp(std::size_t(1) << n, 0);
    for (Mask s = 1; s <= full; ++s) {
        int boundary = 0;
        for (Mask t = s; t; t &= t - 1)
            if (nbr[std::countr_zero(t)] & ~s) ++boundary;
        int bestv = 127;
        for (Mask t = s; t; t &= t - 1) {
            int v = std::countr_zero(t);
            bestv = std::min(bestv, static_cast<int>(dp[s & ~bit(v)]));
        }
        dp[s] = static_cast<std::int8_t>(std::max(boundary, bestv));
    }
    return dp[full];
}

MinimalHost minimal_model_host(const Graph& host, const Graph& pattern, int max_host_vertices) {
    if (!brute_induced_minor(host, pattern, max_host_vertices))
        throw std::invalid_argument("minimal_model_host: pattern is not an induced minor of host");
    std::vector<int> kept(host.vertex_count());
    for (int v = 0; v < host.vertex_count(); ++v) kept[v] = v;

    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<int> cand = kept;
            cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(i));
            if (brute_induced_minor(host.induced(cand), pattern, max_host_vertices)) {
                kept = std::move(cand);
                shrunk = true;
                break;
            }
        }
    }
    return MinimalHost{host.induced(kept), kept};
}

}  // namespace imsep
