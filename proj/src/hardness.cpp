#include "imsep/hardness.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "imsep/generators.hpp"
#include "imsep/rng.hpp"

namespace imsep {

std::optional<std::string> check_csp(const BinaryCSPInstance& csp) {
    auto edges = csp.constraint_graph.edges();
    if (csp.relations.size() != edges.size()) {
        std::ostringstream os;
        os << "csp has " << csp.relations.size() << " relations for " << edges.size() << " edges";
        return os.str();
    }
    for (auto [u, v] : edges) {
        auto it = csp.relations.find({u, v});
        if (it == csp.relations.end())
            return "edge " + std::to_string(u) + "," + std::to_string(v) + " has no relation";
        if (it->second < 0 || it->second > kRelFull)
            return "relation on edge " + std::to_string(u) + "," + std::to_string(v) +
                   " is not a 9-bit mask";
    }
    return std::nullopt;
}

bool csp_satisfied_by(const BinaryCSPInstance& csp, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != csp.constraint_graph.vertex_count()) return false;
    for (int val : assignment)
        if (val < 1 || val > 3) return false;
    for (const auto& [e, mask] : csp.relations)
        if (!(mask & rel_bit(assignment[e.first], assignment[e.second]))) return false;
    return true;
}

std::optional<std::vector<int>> solve_csp_brute(const BinaryCSPInstance& csp) {
    if (auto err = check_csp(csp)) throw std::invalid_argument("solve_csp_brute: " + *err);
    int n = csp.constraint_graph.vertex_count();
    if (n > 16) throw std::invalid_argument("solve_csp_brute: more than 16 variables");

    struct Rel {
        int u, v, mask;
    };
    std::vector<Rel> rels;
    rels.reserve(csp.relations.size());
    for (const auto& [e, mask] : csp.relations) rels.push_back({e.first, e.second, mask});

    std::vector<int> vals(n, 1);
    for (;;) {
        bool ok = true;
        for (const Rel& r : rels)
            if (!(r.mask & rel_bit(vals[r.u], vals[r.v]))) {
                ok = false;
                break;
            }
        if (ok) return vals;
        int i = n - 1;
        while (i >= 0 && vals[i] == 3) vals[i--] = 1;
        if (i < 0) return std::nullopt;
        ++vals[i];
    }
}

BinaryCSPInstance csp_from_coloring(const Graph& pattern, const Graph& host,
                                    const InducedMinorModel& model) {
    if (auto err = check_minor_model(host, pattern, model))
        throw std::invalid_argument("csp_from_coloring: " + *err);

    std::vector<int> owner(host.vertex_count(), -1);
    for (std::size_t i = 0; i < model.branch_sets.size(); ++i)
        for (int w : model.branch_sets[i]) owner[w] = static_cast<int>(i);

    BinaryCSPInstance csp;
    csp.constraint_graph = host;
    for (auto [u, v] : host.edges()) {
        int a = owner[u], b = owner[v];
        int mask = kRelFull;
        if (a != -1 && a == b)
            mask = kRelEqual;
        else if (a != -1 && b != -1 && pattern.has_edge(a, b))
            mask = kRelUnequal;
        csp.relations[{u, v}] = mask;
    }
    return csp;
}

namespace {

bool sets_touch(const Graph& host, const std::vector<int>& a, const std::vector<bool>& in_b) {
    for (int v : a)
        for (int nb : host.neighbors(v))
            if (in_b[nb]) return true;
    return false;
}

}  // namespace

std::optional<InducedMinorModel> greedy_minor_embed(const Graph& host, const Graph& pattern,
                                                    std::uint64_t seed) {
    int n = host.vertex_count();
    int k = pattern.vertex_count();
    if (k == 0) return InducedMinorModel{};
    if (k > n) return std::nullopt;

    auto pat_edges = pattern.edges();
    const int attempts = 100;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Rng rng = make_rng(seed + static_cast<std::uint64_t>(attempt));
        std::vector<int> ids(n);
        for (int v = 0; v < n; ++v) ids[v] = v;
        std::vector<int> owner(n, -1);
        std::vector<std::vector<int>> sets(k);
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(rng_below(rng, n - i));
            std::swap(ids[i], ids[j]);
            owner[ids[i]] = i;
            sets[i] = {ids[i]};
        }

        bool ok = true;
        std::vector<bool> in_q(n), adj_q(n);
        std::vector<int> parent(n);
        for (auto [p, q] : pat_edges) {
            std::fill(in_q.begin(), in_q.end(), false);
            std::fill(adj_q.begin(), adj_q.end(), false);
            for (int v : sets[q]) in_q[v] = true;
            for (int v : sets[q])
                for (int nb : host.neighbors(v)) adj_q[nb] = true;
            if (sets_touch(host, sets[p], in_q)) continue;

            // Shortest path of unused vertices from N(sets[p]) to N(sets[q]);
            // the whole path joins p's branch set.
            std::fill(parent.begin(), parent.end(), -2);
            std::queue<int> bfs;
            for (int v : sets[p])
                for (int nb : host.neighbors(v))
                    if (owner[nb] == -1 && parent[nb] == -2) {
                        parent[nb] = -1;
                        bfs.push(nb);
                    }
            int found = -1;
            while (!bfs.empty() && found == -1) {
                int v = bfs.front();
                bfs.pop();
                if (adj_q[v]) {
                    found = v;
                    break;
                }
                for (int nb : host.neighbors(v))
                    if (owner[nb] == -1 && parent[nb] == -2) {
                        parent[nb] = v;
                        bfs.push(nb);
                    }
            }
            if (found == -1) {
                ok = false;
                break;
            }
            for (int v = found; v != -1; v = parent[v]) {
                owner[v] = p;
                sets[p].push_back(v);
            }
        }
        if (!ok) continue;

        InducedMinorModel model;
        for (auto& bs : sets) {
            std::sort(bs.begin(), bs.end());
            model.branch_sets.push_back(bs);
        }
        assert(check_minor_model(host, pattern, model) == std::nullopt);
        return model;
    }
    return std::nullopt;
}

std::optional<std::string> check_midp_instance(const MIDPInstance& inst) {
    int n = inst.g.vertex_count();
    int k = static_cast<int>(inst.parts.size());
    if (k == 0) return "no parts";
    if (static_cast<int>(inst.terminals.size()) != k) {
        std::ostringstream os;
        os << inst.terminals.size() << " terminal pairs for " << k << " parts";
        return os.str();
    }
    std::vector<int> part_of(n, -1);
    for (int i = 0; i < k; ++i) {
        const auto& part = inst.parts[i];
        if (part.empty()) return "part " + std::to_string(i) + " is empty";
        if (!std::is_sorted(part.begin(), part.end()))
            return "part " + std::to_string(i) + " is not sorted";
        for (int v : part) {
            if (v < 0 || v >= n)
                return "part " + std::to_string(i) + " contains out-of-range vertex " +
                       std::to_string(v);
            if (part_of[v] != -1)
                return "vertex " + std::to_string(v) + " lies in two parts";
            part_of[v] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1) return "vertex " + std::to_string(v) + " lies in no part";
    for (int i = 0; i < k; ++i) {
        auto [s, t] = inst.terminals[i];
        if (s < 0 || s >= n || part_of[s] != i)
            return "terminal s of part " + std::to_string(i) + " is outside its part";
        if (t < 0 || t >= n || part_of[t] != i)
            return "terminal t of part " + std::to_string(i) + " is outside its part";
        if (s == t) return "part " + std::to_string(i) + " has coinciding terminals";
    }
    for (auto [u, v] : inst.g.edges())
        if (std::abs(part_of[u] - part_of[v]) > 1) {
            std::ostringstream os;
            os << "edge " << u << "," << v << " joins parts " << part_of[u] << " and "
               << part_of[v];
            return os.str();
        }
    return std::nullopt;
}

bool verify_midp_solution(const MIDPInstance& inst, const std::vector<std::vector<int>>& paths) {
    int n = inst.g.vertex_count();
    int k = static_cast<int>(inst.parts.size());
    if (static_cast<int>(paths.size()) != k) return false;

    std::vector<int> on_path(n, -1);
    for (int i = 0; i < k; ++i) {
        const auto& path = paths[i];
        if (path.empty()) return false;
        if (path.front() != inst.terminals[i].first) return false;
        if (path.back() != inst.terminals[i].second) return false;
        for (std::size_t j = 0; j < path.size(); ++j) {
            int v = path[j];
            if (v < 0 || v >= n) return false;
            if (!std::binary_search(inst.parts[i].begin(), inst.parts[i].end(), v)) return false;
            if (on_path[v] != -1) return false;  // repeats or clashes
            on_path[v] = i;
            if (j > 0 && !inst.g.has_edge(path[j - 1], v)) return false;
        }
    }
    for (int u = 0; u < n; ++u) {
        if (on_path[u] == -1) continue;
        for (int v : inst.g.neighbors(u))
            if (on_path[v] != -1 && on_path[v] != on_path[u]) return false;
    }
    return true;
}

MIDPReduction csp_to_midp(const BinaryCSPInstance& csp, const ShiftPartition& partition) {
    if (auto err = check_csp(csp)) throw std::invalid_argument("csp_to_midp: " + *err);
    if (!(csp.constraint_graph == bs_generate(partition.b)))
        throw std::invalid_argument(
            "csp_to_midp: constraint graph is not the shift graph of the partition");

    int n = 1 << partition.b;
    MIDPLayout lay{n};
    int stride = lay.stride();
    const int layers = 5;
    Graph g(layers * stride);

    for (int i = 0; i < layers; ++i)
        for (int j = 0; j < n; ++j)
            for (int val = 1; val <= 3; ++val) {
                int lv = lay.letter(i, j, val);
                g.add_edge(j == 0 ? lay.s(i) : lay.connector(i, j - 1), lv);
                g.add_edge(lv, j == n - 1 ? lay.t(i) : lay.connector(i, j));
            }

    for (int i = 0; i + 1 < layers; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 1; p <= 3; ++p)
                for (int q = 1; q <= 3; ++q)
                    if (p != q) g.add_edge(lay.letter(i, j, p), lay.letter(i + 1, j, q));

    std::map<std::pair<int, int>, int> part_of_edge;
    for (int p = 0; p < 4; ++p)
        for (auto e : partition.parts[p]) part_of_edge[e] = p;
    for (const auto& [e, mask] : csp.relations) {
        auto it = part_of_edge.find(e);
        if (it == part_of_edge.end())
            throw std::invalid_argument("csp_to_midp: constraint edge missing from the partition");
        int i = it->second;
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; q <= 3; ++q)
                if (!(mask & rel_bit(p, q)))
                    g.add_edge(lay.letter(i, e.first, p), lay.letter(i + 1, e.second, q));
    }

    MIDPReduction red;
    red.layout = lay;
    red.instance.g = std::move(g);
    for (int i = 0; i < layers; ++i) {
        std::vector<int> part(stride);
        for (int v = 0; v < stride; ++v) part[v] = i * stride + v;
        red.instance.parts.push_back(std::move(part));
        red.instance.terminals.push_back({lay.s(i), lay.t(i)});
    }

    // Certificates by bag substitution: every column rides its spine vertex,
    // connectors ride both columns they join, terminals ride the ends.
    for (int i = 0; i + 1 < layers; ++i) {
        std::vector<std::vector<int>> cert;
        for (const auto& spine_bag : partition.certificates[i]) {
            auto has = [&](int j) {
                return std::binary_search(spine_bag.begin(), spine_bag.end(), j);
            };
            std::vector<int> bag;
            for (int j : spine_bag)
                for (int layer = i; layer <= i + 1; ++layer)
                    for (int val = 1; val <= 3; ++val) bag.push_back(lay.letter(layer, j, val));
            for (int j : spine_bag)
                for (int side : {j - 1, j})
                    if (side >= 0 && side <= n - 2)
                        for (int layer = i; layer <= i + 1; ++layer)
                            bag.push_back(lay.connector(layer, side));
            if (has(0))
                for (int layer = i; layer <= i + 1; ++layer) bag.push_back(lay.s(layer));
            if (has(n - 1))
                for (int layer = i; layer <= i + 1; ++layer) bag.push_back(lay.t(layer));
            for (int& v : bag) v -= i * stride;  // positional ids of the pair subgraph
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            cert.push_back(std::move(bag));
        }
        red.pair_certificates.push_back(std::move(cert));
    }
    return red;
}

std::optional<std::vector<std::vector<int>>> solve_midp_exhaustive(const MIDPInstance& inst,
                                                                   std::size_t path_cap) {
    if (auto err = check_midp_instance(inst))
        throw std::invalid_argument("solve_midp_exhaustive: " + *err);
    int n = inst.g.vertex_count();
    int k = static_cast<int>(inst.parts.size());

    std::vector<std::vector<std::vector<int>>> all_paths(k);
    std::vector<bool> in_part(n), visited(n);
    for (int i = 0; i < k; ++i) {
        std::fill(in_part.begin(), in_part.end(), false);
        for (int v : inst.parts[i]) in_part[v] = true;
        std::fill(visited.begin(), visited.end(), false);
        std::vector<int> path;
        auto dfs = [&](auto&& self, int v) -> void {
            visited[v] = true;
            path.push_back(v);
            if (v == inst.terminals[i].second) {
                if (all_paths[i].size() >= path_cap)
                    throw std::invalid_argument("solve_midp_exhaustive: part " +
                                                std::to_string(i) + " exceeds the path cap");
                all_paths[i].push_back(path);
            } else {
                for (int nb : inst.g.neighbors(v))
                    if (in_part[nb] && !visited[nb]) self(self, nb);
            }
            path.pop_back();
            visited[v] = false;
        };
        dfs(dfs, inst.terminals[i].first);
        if (all_paths[i].empty()) return std::nullopt;
    }

    // No edges jump more than one part, so compatibility chains down the
    // line: pick per part, checking only against the previous part's pick.
    std::vector<bool> marks(n);
    auto compatible = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::fill(marks.begin(), marks.end(), false);
        for (int v : a) marks[v] = true;
        for (int v : b) {
            if (marks[v]) return false;
            for (int nb : inst.g.neighbors(v))
                if (marks[nb]) return false;
        }
        return true;
    };
    std::vector<std::vector<int>> pred(k);
    std::vector<std::vector<char>> alive(k);
    alive[0].assign(all_paths[0].size(), 1);
    for (int i = 1; i < k; ++i) {
        alive[i].assign(all_paths[i].size(), 0);
        pred[i].assign(all_paths[i].size(), -1);
        for (std::size_t b = 0; b < all_paths[i].size(); ++b)
            for (std::size_t a = 0; a < all_paths[i - 1].size(); ++a)
                if (alive[i - 1][a] && compatible(all_paths[i - 1][a], all_paths[i][b])) {
                    alive[i][b] = 1;
                    pred[i][b] = static_cast<int>(a);
                    break;
                }
    }
    int pick = -1;
    for (std::size_t b = 0; b < all_paths[k - 1].size(); ++b)
        if (alive[k - 1][b]) {
            pick = static_cast<int>(b);
            break;
        }
    if (pick == -1) return std::nullopt;

    std::vector<std::vector<int>> sol(k);
    for (int i = k - 1; i >= 0; --i) {
        sol[i] = all_paths[i][pick];
        if (i > 0) pick = pred[i][pick];
    }
    assert(verify_midp_solution(inst, sol));
    return sol;
}

std::optional<std::string> check_anchored_model(const AnchoredInstance& inst,
                                                const InducedMinorModel& model) {
    if (auto err = check_induced_minor_model(inst.g, inst.t, model)) return err;
    for (auto [hv, tv] : inst.anchors) {
        if (tv < 0 || tv >= static_cast<int>(model.branch_sets.size()))
            return "anchor names tree vertex " + std::to_string(tv) + " outside the model";
        const auto& bs = model.branch_sets[tv];
        if (!std::binary_search(bs.begin(), bs.end(), hv)) {
            std::ostringstream os;
            os << "branch set of tree vertex " << tv << " misses its anchor " << hv;
            return os.str();
        }
    }
    return std::nullopt;
}

AnchoredInstance midp_to_anchored(const MIDPInstance& inst) {
    if (auto err = check_midp_instance(inst))
        throw std::invalid_argument("midp_to_anchored: " + *err);
    int k0 = static_cast<int>(inst.parts.size());
    int n0 = inst.g.vertex_count();
    int pads = 0;
    while (k0 + pads < 4 || (k0 + pads) % 2 != 0) ++pads;
    int k = k0 + pads;

    std::vector<std::vector<int>> parts = inst.parts;
    std::vector<std::pair<int, int>> terms = inst.terminals;
    for (int j = 0; j < pads; ++j) {
        parts.push_back({n0 + j});
        terms.push_back({n0 + j, n0 + j});
    }

    AnchoredInstance out;
    out.t = Graph(2 * k);
    for (int i = 0; i < k; ++i) out.t.add_edge(i, k + i);
    for (int i = 0; i + 2 < k; ++i) out.t.add_edge(i, i + 2);
    out.t.add_edge(0, k - 1);

    int w_base = n0 + pads;
    out.g = Graph(w_base + k);
    for (auto [u, v] : inst.g.edges()) out.g.add_edge(u, v);
    for (int i = 0; i < k; ++i)
        for (int v : parts[i]) out.g.add_edge(w_base + i, v);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (!out.t.has_edge(i, j)) continue;
            for (int u : parts[i])
                for (int v : parts[j]) out.g.add_edge(u, v);
        }

    for (int i = 0; i < k; ++i) {
        out.anchors.push_back({w_base + i, k + i});
        out.anchors.push_back({terms[i].first, i});
        out.anchors.push_back({terms[i].second, i});
    }
    return out;
}

IMTInstance anchored_to_imt(const AnchoredInstance& inst, int h, long long vertex_budget) {
    if (h < 1) throw std::invalid_argument("anchored_to_imt: h must be at least 1");
    if (inst.g.vertex_count() > vertex_budget)
        throw std::invalid_argument("anchored_to_imt: the base host already exceeds the budget");

    IMTInstance out;
    out.h = h;
    auto g_edges = inst.g.edges();
    auto t_edges = inst.t.edges();
    long long gn = inst.g.vertex_count();
    long long tn = inst.t.vertex_count();

    auto attach = [](std::vector<std::pair<int, int>>& edges, long long base, int root,
                     long long size) {
        // Heap-shaped: node m's parent is (m-1)/2; node 0 is the shared root.
        for (long long m = 1; m < size; ++m) {
            long long p = (m - 1) / 2;
            int pv = p == 0 ? root : static_cast<int>(base + p - 1);
            edges.push_back({pv, static_cast<int>(base + m - 1)});
        }
    };

    for (int i = 1; i <= static_cast<int>(inst.anchors.size()); ++i) {
        int e = h + 2 * i;
        long long size = e < 62 ? (1LL << e) - 1 : -1;
        if (size < 0 || std::max(gn, tn) + size - 1 > vertex_budget) {
            out.skipped_heights.push_back(e);
            continue;
        }
        auto [hv, tv] = inst.anchors[i - 1];
        attach(g_edges, gn, hv, size);
        attach(t_edges, tn, tv, size);
        gn += size - 1;
        tn += size - 1;
        ++out.realized;
    }
    out.g = Graph::from_edges(static_cast<int>(gn), g_edges);
    out.t = Graph::from_edges(static_cast<int>(tn), t_edges);
    return out;
}

ForwardWitness forward_witness(const BinaryCSPInstance& csp, const std::vector<int>& assignment,
                               const MIDPReduction& midp, const AnchoredInstance& anchored,
                               const IMTInstance& imt) {
    if (!csp_satisfied_by(csp, assignment))
        throw std::invalid_argument("forward_witness: assignment does not satisfy the instance");
    const MIDPLayout& lay = midp.layout;
    int n = lay.n;
    if (csp.constraint_graph.vertex_count() != n)
        throw std::invalid_argument("forward_witness: csp and reduction disagree on size");

    ForwardWitness w;
    int k0 = static_cast<int>(midp.instance.parts.size());
    for (int i = 0; i < k0; ++i) {
        std::vector<int> path = {lay.s(i)};
        for (int j = 0; j < n; ++j) {
            path.push_back(lay.letter(i, j, assignment[j]));
            if (j <= n - 2) path.push_back(lay.connector(i, j));
        }
        path.push_back(lay.t(i));
        w.midp_paths.push_back(std::move(path));
    }
    assert(verify_midp_solution(midp.instance, w.midp_paths));

    int k = anchored.t.vertex_count() / 2;
    int pads = k - k0;
    int n_m = midp.instance.g.vertex_count();
    w.anchored_model.branch_sets.resize(2 * k);
    for (int i = 0; i < k0; ++i) {
        auto bs = w.midp_paths[i];
        std::sort(bs.begin(), bs.end());
        w.anchored_model.branch_sets[i] = std::move(bs);
    }
    for (int j = 0; j < pads; ++j) w.anchored_model.branch_sets[k0 + j] = {n_m + j};
    for (int i = 0; i < k; ++i) w.anchored_model.branch_sets[k + i] = {n_m + pads + i};
    assert(check_anchored_model(anchored, w.anchored_model) == std::nullopt);

    // Realized attachments map identically: tree node to host node in the
    // same heap position of the same anchor's attachment.
    w.imt_model = w.anchored_model;
    w.imt_model.branch_sets.resize(imt.t.vertex_count());
    long long g_base = anchored.g.vertex_count();
    long long t_base = anchored.t.vertex_count();
    for (int i = 1; i <= imt.realized; ++i) {
        long long size = (1LL << (imt.h + 2 * i)) - 1;
        for (long long m = 1; m < size; ++m)
            w.imt_model.branch_sets[t_base + m - 1] = {static_cast<int>(g_base + m - 1)};
        g_base += size - 1;
        t_base += size - 1;
    }
    assert(check_induced_minor_model(imt.g, imt.t, w.imt_model) == std::nullopt);
    return w;
}

}  // namespace imsep
