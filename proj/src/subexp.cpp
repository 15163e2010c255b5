#include "imsep/subexp.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "imsep/oracles.hpp"

namespace imsep {
namespace {

int cube_root_ceil(int n) {
    return static_cast<int>(std::ceil(std::cbrt(static_cast<double>(n)) - 1e-9));
}

enum class Fate : char { undecided, committed, discarded };

struct Brancher {
    const Graph& g;
    int delta, max_degree;
    std::vector<Fate> fate;
    std::vector<int> credit;
    std::vector<std::string> tokens;
    std::vector<BranchLeaf> leaves;

    Brancher(const Graph& g_, int delta_, int max_degree_)
        : g(g_), delta(delta_), max_degree(max_degree_),
          fate(g_.vertex_count(), Fate::undecided), credit(g_.vertex_count(), delta_) {}

    int undecided_degree(int v) const {
        int d = 0;
        for (int u : g.neighbors(v))
            if (fate[u] == Fate::undecided) ++d;
        return d;
    }

    // Highest undecided degree wins, smallest id among equals.
    int pick() const {
        int best = -1, best_deg = max_degree;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (fate[v] != Fate::undecided) continue;
            int d = undecided_degree(v);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        return best;
    }

    void emit_leaf() {
        BranchLeaf leaf;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (fate[v] == Fate::discarded) continue;
            leaf.ground.push_back(v);
            if (fate[v] == Fate::committed) leaf.forced.push_back(v);
        }
        std::ostringstream os;
        for (std::size_t i = 0; i < tokens.size(); ++i) os << (i ? ";" : "") << tokens[i];
        leaf.trace = os.str();
        leaves.push_back(std::move(leaf));
    }

    // Subsets of size at most delta, ordered by ascending bitmask value.
    static std::vector<std::vector<int>> spare_sets(const std::vector<int>& nbrs, int delta) {
        std::vector<std::pair<unsigned long long, std::vector<int>>> subsets;
        std::vector<int> picked;
        auto rec = [&](auto&& self, std::size_t from, unsigned long long mask) -> void {
            subsets.push_back({mask, picked});
            if (static_cast<int>(picked.size()) == delta) return;
            for (std::size_t i = from; i < nbrs.size(); ++i) {
                picked.push_back(nbrs[i]);
                self(self, i + 1, mask | (1ull << i));
                picked.pop_back();
            }
        };
        rec(rec, 0, 0);
        std::sort(subsets.begin(), subsets.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::vector<int>> out;
        out.reserve(subsets.size());
        for (auto& s : subsets) out.push_back(std::move(s.second));
        return out;
    }

    void run() {
        int v = pick();
        if (v == -1) {
            emit_leaf();
            return;
        }

        tokens.push_back("o" + std::to_string(v));
        fate[v] = Fate::discarded;
        run();
        fate[v] = Fate::undecided;
        tokens.pop_back();

        std::vector<int> nbrs;
        for (int u : g.neighbors(v))
            if (fate[u] == Fate::undecided) nbrs.push_back(u);
        if (static_cast<int>(nbrs.size()) > 64)
            throw std::invalid_argument("degeneracy_branching: branch vertex degree above 64");

        for (const auto& spare : spare_sets(nbrs, delta)) {
            std::ostringstream os;
            os << "i" << v << "[";
            for (std::size_t i = 0; i < spare.size(); ++i) os << (i ? "," : "") << spare[i];
            os << "]";
            tokens.push_back(os.str());

            fate[v] = Fate::committed;
            std::vector<int> dropped, evicted;
            for (int u : nbrs) {
                if (std::binary_search(spare.begin(), spare.end(), u)) continue;
                dropped.push_back(u);
                if (--credit[u] < 0) {
                    fate[u] = Fate::discarded;
                    evicted.push_back(u);
                }
            }
            // Committing v spends its credits and one from each dropped
            // neighbour, at least max_degree - delta + 2 in total.
            assert(credit[v] + 1 + static_cast<int>(dropped.size()) >= max_degree - delta + 2);
            run();

            for (int u : evicted) fate[u] = Fate::undecided;
            for (int u : dropped) ++credit[u];
            fate[v] = Fate::undecided;
            tokens.pop_back();
        }
    }
};

}  // namespace

std::vector<BranchLeaf> degeneracy_branching(const Graph& g, int delta, int max_degree) {
    if (delta < 0 || max_degree < delta)
        throw std::invalid_argument("degeneracy_branching: need max_degree >= delta >= 0");
    Brancher b(g, delta, max_degree);
    b.run();
    return std::move(b.leaves);
}

namespace {

struct TDBuilder {
    const Graph& g;
    const Graph& pattern;
    const TDOptions& opt;
    TreeDecomposition td;
    std::optional<InducedMinorModel> model;

    // Builds the subtree for verts (sorted original ids); returns its root
    // bag index, or -1 when the pattern surfaced and the recursion unwinds.
    int build(const std::vector<int>& verts) {
        int leaf_cap = std::max(1, opt.leaf_size);
        if (static_cast<int>(verts.size()) <= leaf_cap) {
            td.bags.push_back(verts);
            return static_cast<int>(td.bags.size()) - 1;
        }

        Graph sub = g.induced(verts);
        auto r = find_separator_or_model(sub, pattern, opt.seed, opt.find);
        if (auto* m = std::get_if<InducedMinorModel>(&r)) {
            for (auto& bs : m->branch_sets)
                for (int& v : bs) v = verts[v];
            model = std::move(*m);
            return -1;
        }

        const Separation& sep = std::get<Separation>(r);
        std::vector<int> s_orig;
        for (int v : sep.s) s_orig.push_back(verts[v]);

        std::vector<char> in_s(sub.vertex_count(), 0);
        for (int v : sep.s) in_s[v] = 1;
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(sub.vertex_count(), 0);
        for (int v0 = 0; v0 < sub.vertex_count(); ++v0) {
            if (in_s[v0] || seen[v0]) continue;
            std::vector<int> comp, stack{v0};
            seen[v0] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(verts[v]);
                for (int u : sub.neighbors(v))
                    if (!in_s[u] && !seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        // A balanced separation of anything above the leaf cap either names
        // separator vertices or splits the graph.
        assert(!s_orig.empty() || comps.size() >= 2);

        td.bags.push_back(s_orig);
        int root = static_cast<int>(td.bags.size()) - 1;
        for (const auto& comp : comps) {
            std::size_t first = td.bags.size();
            int child = build(comp);
            if (child == -1) return -1;
            for (std::size_t i = first; i < td.bags.size(); ++i) {
                std::vector<int> merged;
                std::set_union(td.bags[i].begin(), td.bags[i].end(), s_orig.begin(),
                               s_orig.end(), std::back_inserter(merged));
                td.bags[i] = std::move(merged);
            }
            td.tree_edges.push_back({root, child});
        }
        return root;
    }
};

}  // namespace

TDOrModel tree_decomposition_via_separators(const Graph& g, const Graph& pattern,
                                            const TDOptions& opt) {
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    TDBuilder builder{g, pattern, opt, {}, {}};
    int root = builder.build(all);
    if (root == -1) return std::move(*builder.model);
    assert(check_tree_decomposition(g, builder.td) == std::nullopt);
    return std::move(builder.td);
}

std::vector<int> mis_treewidth_dp(const Graph& g, const TreeDecomposition& td) {
    if (auto err = check_tree_decomposition(g, td))
        throw std::invalid_argument("mis_treewidth_dp: " + *err);
    if (g.vertex_count() > 256) throw std::invalid_argument("mis_treewidth_dp: host above 256");
    for (const auto& bag : td.bags)
        if (bag.size() > 22) throw std::invalid_argument("mis_treewidth_dp: bag above 22");
    if (g.vertex_count() == 0) return {};

    int nb = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> children(nb);
    std::vector<int> parent(nb, -1), order;
    {
        std::vector<std::vector<int>> adj(nb);
        for (auto [a, b] : td.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<char> seen(nb, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            order.push_back(i);
            for (int j : adj[i])
                if (!seen[j]) {
                    seen[j] = 1;
                    parent[j] = i;
                    children[i].push_back(j);
                    stack.push_back(j);
                }
        }
    }

    // dp[i][m] = best count in the subtree of i whose bag selection is m;
    // -1 marks dependent selections.
    std::vector<std::vector<int>> dp(nb);
    auto bag_adj = [&](const std::vector<int>& bag) {
        std::vector<unsigned> adjm(bag.size(), 0);
        for (std::size_t a = 0; a < bag.size(); ++a)
            for (std::size_t b = a + 1; b < bag.size(); ++b)
                if (g.has_edge(bag[a], bag[b])) {
                    adjm[a] |= 1u << b;
                    adjm[b] |= 1u << a;
                }
        return adjm;
    };

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int i = *it;
        const auto& bag = td.bags[i];
        int b = static_cast<int>(bag.size());
        auto adjm = bag_adj(bag);
        auto& tab = dp[i];
        tab.assign(std::size_t(1) << b, -1);
        tab[0] = 0;
        for (unsigned m = 1; m < (1u << b); ++m) {
            unsigned low = m & (~m + 1);
            int v = std::countr_zero(m);
            if (tab[m ^ low] >= 0 && (adjm[v] & (m ^ low)) == 0)
                tab[m] = std::popcount(m);
        }

        for (int c : children[i]) {
            const auto& cbag = td.bags[c];
            // Positions of the shared vertices on each side.
            std::vector<int> at_i, at_c;
            for (std::size_t a = 0; a < bag.size(); ++a) {
                auto itc = std::lower_bound(cbag.begin(), cbag.end(), bag[a]);
                if (itc != cbag.end() && *itc == bag[a]) {
                    at_i.push_back(static_cast<int>(a));
                    at_c.push_back(static_cast<int>(itc - cbag.begin()));
                }
            }
            std::vector<int> best(std::size_t(1) << at_i.size(), -1);
            const auto& ctab = dp[c];
            for (unsigned mc = 0; mc < ctab.size(); ++mc) {
                if (ctab[mc] < 0) continue;
                unsigned key = 0;
                int shared = 0;
                for (std::size_t a = 0; a < at_c.size(); ++a)
                    if (mc >> at_c[a] & 1) {
                        key |= 1u << a;
                        ++shared;
                    }
                best[key] = std::max(best[key], ctab[mc] - shared);
            }
            for (unsigned m = 0; m < tab.size(); ++m) {
                if (tab[m] < 0) continue;
                unsigned key = 0;
                for (std::size_t a = 0; a < at_i.size(); ++a)
                    if (m >> at_i[a] & 1) key |= 1u << a;
                assert(best[key] >= 0);
                tab[m] += best[key];
            }
        }
    }

    std::vector<char> chosen(g.vertex_count(), 0);
    // Walk back down re-deriving each argmax (smallest mask wins ties).
    auto descend = [&](auto&& self, int i, unsigned m) -> void {
        const auto& bag = td.bags[i];
        for (std::size_t a = 0; a < bag.size(); ++a)
            if (m >> a & 1) chosen[bag[a]] = 1;
        for (int c : children[i]) {
            const auto& cbag = td.bags[c];
            std::vector<int> at_c;
            std::vector<char> shared_sel;
            for (std::size_t a = 0; a < bag.size(); ++a) {
                auto itc = std::lower_bound(cbag.begin(), cbag.end(), bag[a]);
                if (itc != cbag.end() && *itc == bag[a]) {
                    at_c.push_back(static_cast<int>(itc - cbag.begin()));
                    shared_sel.push_back(static_cast<char>(m >> a & 1));
                }
            }
            const auto& ctab = dp[c];
            int want = -1;
            unsigned pick = 0;
            for (unsigned mc = 0; mc < ctab.size(); ++mc) {
                if (ctab[mc] < 0) continue;
                bool match = true;
                int shared = 0;
                for (std::size_t a = 0; a < at_c.size(); ++a) {
                    char sel = static_cast<char>(mc >> at_c[a] & 1);
                    if (sel != shared_sel[a]) match = false;
                    shared += sel;
                }
                if (match && ctab[mc] - shared > want) {
                    want = ctab[mc] - shared;
                    pick = mc;
                }
            }
            assert(want >= 0);
            self(self, c, pick);
        }
    };

    const auto& rtab = dp[0];
    unsigned best_mask = 0;
    for (unsigned m = 1; m < rtab.size(); ++m)
        if (rtab[m] > rtab[best_mask]) best_mask = m;
    descend(descend, 0, best_mask);

    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (chosen[v]) out.push_back(v);
    return out;
}

MisResult solve_mis(const Graph& g, const Graph& pattern, const SubexpOptions& opt) {
    int n = g.vertex_count();
    MisResult best;
    if (n == 0) {
        best.leaves = 1;
        return best;
    }
    int max_degree = opt.max_degree > 0 ? opt.max_degree : cube_root_ceil(n);
    auto leaves = degeneracy_branching(g, 0, max_degree);
    best.leaves = leaves.size();

    std::map<std::vector<int>, std::vector<int>> memo;
    for (const auto& leaf : leaves) {
        std::vector<int> undecided;
        std::set_difference(leaf.ground.begin(), leaf.ground.end(), leaf.forced.begin(),
                            leaf.forced.end(), std::back_inserter(undecided));
        auto it = memo.find(undecided);
        if (it == memo.end()) {
            Graph sub = g.induced(undecided);
            TDOptions tdo;
            tdo.leaf_size = opt.leaf_size;
            tdo.seed = opt.seed;
            tdo.find = opt.find;
            auto r = tree_decomposition_via_separators(sub, pattern, tdo);
            std::vector<int> local;
            if (auto* td = std::get_if<TreeDecomposition>(&r)) {
                local = mis_treewidth_dp(sub, *td);
            } else {
                local = brute_max_independent_set(sub, 26);
                best.used_fallback = true;
            }
            for (int& v : local) v = undecided[v];
            it = memo.emplace(std::move(undecided), std::move(local)).first;
        }
        if (leaf.forced.size() + it->second.size() > best.set.size()) {
            best.set.clear();
            std::set_union(leaf.forced.begin(), leaf.forced.end(), it->second.begin(),
                           it->second.end(), std::back_inserter(best.set));
        }
    }
    return best;
}

std::optional<InducedMinorModel> induced_minor_test(const Graph& g, const Graph& pattern,
                                                    const SubexpOptions& opt) {
    for (auto [u, v] : pattern.edges())
        if (pattern.degree(u) > 2 && pattern.degree(v) > 2)
            throw std::invalid_argument(
                "induced_minor_test: pattern edge between two vertices of degree above 2");

    int n = g.vertex_count();
    int delta = 3 * pattern.vertex_count();
    int max_degree = opt.max_degree > 0 ? opt.max_degree : cube_root_ceil(n) + delta;
    auto leaves = degeneracy_branching(g, delta, max_degree);

    std::set<std::vector<int>> tried;
    for (const auto& leaf : leaves) {
        if (!tried.insert(leaf.ground).second) continue;
        auto local = brute_induced_minor(g.induced(leaf.ground), pattern, 12);
        if (!local) continue;
        for (auto& bs : local->branch_sets)
            for (int& v : bs) v = leaf.ground[v];
        assert(check_induced_minor_model(g, pattern, *local) == std::nullopt);
        return local;
    }
    return std::nullopt;
}

}  // namespace imsep
