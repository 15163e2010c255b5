#include "imsep/embedding.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "imsep/graph_ops.hpp"
#include "imsep/rng.hpp"

namespace imsep {
namespace {

using Words = std::vector<std::uint64_t>;

int word_count(int n) { return (n + 63) / 64; }

void set_bit(Words& w, int v) { w[v >> 6] |= std::uint64_t(1) << (v & 63); }

bool intersects(const Words& a, const Words& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

// Flow paths per ordered pair, lex-sorted so the inverse CDF below is a pure
// function of (a, b, x).
struct PathTable {
    int n = 0;
    std::vector<std::vector<std::pair<std::vector<int>, double>>> by_pair;

    PathTable(const Graph& host, const VertexFlow& flow) : n(host.vertex_count()) {
        by_pair.assign(static_cast<std::size_t>(n) * n, {});
        for (const FlowPath& p : flow.paths)
            by_pair[static_cast<std::size_t>(p.src) * n + p.dst].push_back({p.vertices, p.weight});
        for (auto& list : by_pair) {
            std::sort(list.begin(), list.end());
            std::size_t out = 0;
            for (std::size_t i = 0; i < list.size();) {
                std::size_t j = i;
                double w = 0;
                while (j < list.size() && list[j].first == list[i].first) w += list[j++].second;
                list[out++] = {std::move(list[i].first), w};
                i = j;
            }
            list.resize(out);
        }
    }

    const std::vector<int>& sample(int a, int b, double x) const {
        const auto& list = by_pair[static_cast<std::size_t>(a) * n + b];
        assert(!list.empty());
        double cum = 0;
        for (const auto& [path, w] : list) {
            cum += w;
            if (x < cum) return path;
        }
        return list.back().first;
    }
};

struct Sampler {
    const Graph& host;
    PathTable table;
    std::vector<std::pair<int, int>> pedges;
    std::vector<Words> host_closed;  // N[v] per host vertex
    int nw;

    std::vector<int> phi;
    std::vector<double> xs;
    std::vector<std::vector<int>> paths;
    std::vector<Words> pmask, pnbhd;
    Rng rng;

    Sampler(const Graph& host_, const Graph& pattern, const VertexFlow& flow, std::uint64_t seed)
        : host(host_),
          table(host_, flow),
          pedges(pattern.edges()),
          nw(word_count(host_.vertex_count())),
          rng(make_rng(seed)) {
        host_closed.assign(host.vertex_count(), Words(nw, 0));
        for (int v = 0; v < host.vertex_count(); ++v) {
            set_bit(host_closed[v], v);
            for (int u : host.neighbors(v)) set_bit(host_closed[v], u);
        }
        phi.assign(pattern.vertex_count(), 0);
        xs.assign(pedges.size(), 0.0);
        paths.assign(pedges.size(), {});
        pmask.assign(pedges.size(), Words(nw, 0));
        pnbhd.assign(pedges.size(), Words(nw, 0));
        for (int v = 0; v < pattern.vertex_count(); ++v) resample_vertex(v);
        for (std::size_t e = 0; e < pedges.size(); ++e) resample_edge_draw(static_cast<int>(e));
        for (std::size_t e = 0; e < pedges.size(); ++e) refresh(static_cast<int>(e));
    }

    void resample_vertex(int v) { phi[v] = static_cast<int>(rng_below(rng, host.vertex_count())); }
    void resample_edge_draw(int e) { xs[e] = rng_unit(rng); }

    void refresh(int e) {
        auto [u, v] = pedges[e];
        paths[e] = table.sample(phi[u], phi[v], xs[e]);
        pmask[e].assign(nw, 0);
        pnbhd[e].assign(nw, 0);
        for (int w : paths[e]) {
            set_bit(pmask[e], w);
            for (int i = 0; i < nw; ++i) pnbhd[e][i] |= host_closed[w][i];
        }
    }

    // Collide = the paths touch or an edge joins them.
    bool collides(int e, int f) const { return intersects(pmask[e], pnbhd[f]); }
};

std::vector<std::pair<int, int>> collision_events(const std::vector<std::pair<int, int>>& pedges) {
    std::vector<std::pair<int, int>> events;
    for (std::size_t e = 0; e < pedges.size(); ++e)
        for (std::size_t f = e + 1; f < pedges.size(); ++f) {
            auto [a, b] = pedges[e];
            auto [c, d] = pedges[f];
            if (a != c && a != d && b != c && b != d)
                events.push_back({static_cast<int>(e), static_cast<int>(f)});
        }
    return events;
}

}  // namespace

std::optional<std::string> check_almost_embedding(const Graph& host, const Graph& pattern,
                                                  const AlmostEmbedding& ae) {
    if (ae.phi.size() != static_cast<std::size_t>(pattern.vertex_count()))
        return "phi does not cover the pattern vertices";
    for (int img : ae.phi)
        if (img < 0 || img >= host.vertex_count()) return "phi image out of range";

    auto pe = pattern.edges();
    if (ae.edge_paths.size() != pe.size()) return "one path per pattern edge required";
    for (std::size_t j = 0; j < pe.size(); ++j) {
        const auto& p = ae.edge_paths[j];
        auto [u, v] = pe[j];
        std::ostringstream os;
        os << "path of pattern edge (" << u << "," << v << ") ";
        if (p.empty()) return os.str() + "is empty";
        if (p.front() != ae.phi[u] || p.back() != ae.phi[v])
            return os.str() + "does not join the endpoint images";
        for (int w : p)
            if (w < 0 || w >= host.vertex_count()) return os.str() + "leaves the host";
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!host.has_edge(p[i], p[i + 1])) return os.str() + "takes a non-adjacent step";
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return os.str() + "repeats a vertex";
    }

    for (std::size_t e = 0; e < pe.size(); ++e)
        for (std::size_t f = e + 1; f < pe.size(); ++f) {
            auto [a, b] = pe[e];
            auto [c, d] = pe[f];
            if (a == c || a == d || b == c || b == d) continue;
            for (int w : ae.edge_paths[e])
                for (int z : ae.edge_paths[f])
                    if (w == z || host.has_edge(w, z)) {
                        std::ostringstream os;
                        os << "paths of non-incident pattern edges (" << a << "," << b << ") and ("
                           << c << "," << d << ") collide at host vertices " << w << "," << z;
                        return os.str();
                    }
        }
    return std::nullopt;
}

int almost_embed_dependency_degree(const Graph& pattern) {
    auto pedges = pattern.edges();
    auto events = collision_events(pedges);
    int worst = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        auto verts = [&](std::size_t k) {
            auto [e, f] = events[k];
            return std::array<int, 4>{pedges[e].first, pedges[e].second, pedges[f].first,
                                      pedges[f].second};
        };
        auto vi = verts(i);
        int deg = 0;
        for (std::size_t j = 0; j < events.size(); ++j) {
            if (j == i) continue;
            auto vj = verts(j);
            bool shares = false;
            for (int a : vi)
                for (int b : vj)
                    if (a == b) shares = true;
            if (shares) ++deg;
        }
        worst = std::max(worst, deg);
    }
    return worst;
}

std::optional<AlmostEmbedding> almost_embed(const Graph& host, const Graph& pattern,
                                            const VertexFlow& flow, std::uint64_t seed,
                                            double resample_multiplier) {
    if (host.vertex_count() == 0) throw std::invalid_argument("almost_embed: host is empty");
    if (pattern.max_degree() > 3) throw std::invalid_argument("almost_embed: pattern not subcubic");
    if (auto err = check_concurrent_flow(host, flow))
        throw std::invalid_argument("almost_embed: bad flow: " + *err);

    Sampler st(host, pattern, flow, seed);
    auto events = collision_events(st.pedges);
    double cap = 100.0 + resample_multiplier * static_cast<double>(events.size()) *
                             static_cast<double>(events.size());

    for (double resamples = 0;;) {
        int bad = -1;
        for (std::size_t i = 0; i < events.size(); ++i)
            if (st.collides(events[i].first, events[i].second)) {
                bad = static_cast<int>(i);
                break;
            }
        if (bad == -1) return AlmostEmbedding{st.phi, st.paths};
        if (++resamples > cap) return std::nullopt;

        auto [e, f] = events[bad];
        std::array<int, 4> vs{st.pedges[e].first, st.pedges[e].second, st.pedges[f].first,
                              st.pedges[f].second};
        std::sort(vs.begin(), vs.end());
        for (int v : vs) st.resample_vertex(v);
        st.resample_edge_draw(e);
        st.resample_edge_draw(f);
        for (std::size_t g = 0; g < st.pedges.size(); ++g) {
            auto [a, b] = st.pedges[g];
            bool touched = false;
            for (int v : vs) touched = touched || a == v || b == v;
            if (touched) st.refresh(static_cast<int>(g));
        }
    }
}

InducedMinorModel extract_model(const Graph& host, const Graph& h_subcubic,
                                const AlmostEmbedding& iae) {
    const Graph& hpp = h_subcubic;
    int npp = hpp.vertex_count();
    for (int v = 0; v < npp; ++v)
        if (hpp.degree(v) == 0)
            throw std::invalid_argument("extract_model: pattern has an isolated vertex");

    Graph hdd = subdivide(hpp, 2);
    auto hdde = hdd.edges();
    if (iae.phi.size() != static_cast<std::size_t>(hdd.vertex_count()) ||
        iae.edge_paths.size() != hdde.size())
        throw std::invalid_argument("extract_model: embedding does not fit the pattern");

    auto path_of = [&](int a, int b) -> const std::vector<int>& {
        std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        auto it = std::lower_bound(hdde.begin(), hdde.end(), key);
        assert(it != hdde.end() && *it == key);
        return iae.edge_paths[it - hdde.begin()];
    };

    auto hppe = hpp.edges();
    InducedMinorModel m;
    m.branch_sets.assign(npp + hppe.size(), {});

    for (std::size_t j = 0; j < hppe.size(); ++j) {
        auto [u, v] = hppe[j];
        int x = npp + 2 * static_cast<int>(j), y = x + 1;
        const auto& pu = path_of(u, x);
        const auto& pv = path_of(y, v);
        m.branch_sets[u].insert(m.branch_sets[u].end(), pu.begin(), pu.end());
        m.branch_sets[v].insert(m.branch_sets[v].end(), pv.begin(), pv.end());
    }
    for (int v = 0; v < npp; ++v) {
        auto& bs = m.branch_sets[v];
        std::sort(bs.begin(), bs.end());
        bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    }

    for (std::size_t j = 0; j < hppe.size(); ++j) {
        auto [u, v] = hppe[j];
        int x = npp + 2 * static_cast<int>(j), y = x + 1;
        std::vector<int> su = path_of(u, x), sm = path_of(x, y), sv = path_of(y, v);
        std::sort(su.begin(), su.end());
        std::sort(sm.begin(), sm.end());
        std::sort(sv.begin(), sv.end());

        std::vector<int> ground = su;
        ground.insert(ground.end(), sm.begin(), sm.end());
        ground.insert(ground.end(), sv.begin(), sv.end());
        std::sort(ground.begin(), ground.end());
        ground.erase(std::unique(ground.begin(), ground.end()), ground.end());

        auto local = [&](int w) {
            return static_cast<int>(std::lower_bound(ground.begin(), ground.end(), w) -
                                    ground.begin());
        };
        Graph sub = host.induced(ground);
        auto ploc = bfs_path(sub, local(iae.phi[u]), local(iae.phi[v]));
        assert(!ploc.empty());
        std::vector<int> p;
        p.reserve(ploc.size());
        for (int l : ploc) p.push_back(ground[l]);

        // The stretch strictly after the last vertex borrowed from the u-side
        // path and strictly before the next v-side vertex lies entirely on
        // the middle path and leans on both sides.
        int last_u = -1;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (std::binary_search(su.begin(), su.end(), p[i])) last_u = static_cast<int>(i);
        int first_v = -1;
        for (std::size_t i = last_u + 1; i < p.size(); ++i)
            if (std::binary_search(sv.begin(), sv.end(), p[i])) {
                first_v = static_cast<int>(i);
                break;
            }
        assert(last_u >= 0 && first_v > last_u + 1);

        std::vector<int> seg(p.begin() + last_u + 1, p.begin() + first_v);
#ifndef NDEBUG
        for (int w : seg) assert(std::binary_search(sm.begin(), sm.end(), w));
#endif
        std::sort(seg.begin(), seg.end());
        m.branch_sets[npp + j] = std::move(seg);
    }
    return m;
}

std::optional<InducedMinorModel> embed_induced_minor(const Graph& host, const Graph& pattern,
                                                     const VertexFlow& flow, std::uint64_t seed,
                                                     const EmbedOptions& opt) {
    int n = pattern.vertex_count();
    std::vector<int> isolated;
    for (int v = 0; v < n; ++v)
        if (pattern.degree(v) == 0) isolated.push_back(v);

    // Isolated vertices get a pendant so every vertex survives subdivision.
    Graph padded(n + static_cast<int>(isolated.size()));
    for (auto [u, v] : pattern.edges()) padded.add_edge(u, v);
    for (std::size_t i = 0; i < isolated.size(); ++i)
        padded.add_edge(isolated[i], n + static_cast<int>(i));

    auto sc = make_subcubic(padded);
    Graph hdd = subdivide(sc.graph, 2);

    InducedMinorModel subcubic_in_once = subdivision_contraction_model(sc.graph, 1);
    InducedMinorModel pattern_in_padded;
    pattern_in_padded.branch_sets.resize(n);
    for (int v = 0; v < n; ++v) pattern_in_padded.branch_sets[v] = {v};

    for (int attempt = 0; attempt < opt.attempts; ++attempt) {
        auto iae = almost_embed(host, hdd, flow, seed + static_cast<std::uint64_t>(attempt),
                                opt.resample_multiplier);
        if (!iae) continue;
        InducedMinorModel once_in_g = extract_model(host, sc.graph, *iae);
        InducedMinorModel subcubic_in_g = compose_models(subcubic_in_once, once_in_g);
        InducedMinorModel padded_in_g = compose_models(sc.expansion, subcubic_in_g);
        InducedMinorModel model = compose_models(pattern_in_padded, padded_in_g);
        if (check_induced_minor_model(host, pattern, model) == std::nullopt) return model;
    }
    return std::nullopt;
}

}  // namespace imsep
