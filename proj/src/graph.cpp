#include "imsep/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace imsep {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph: vertex count must be nonnegative");
    adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("graph: vertex id out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("graph: self-loops not allowed");
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (vertex_count() <= 1) return true;
    auto dist = bfs_distances(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<int>> Graph::components() const {
    int n = vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : adj_[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Graph Graph::induced(const std::vector<int>& vs) const {
    std::vector<int> sorted(vs);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) check_vertex(v);
    std::vector<int> local(vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) local[sorted[i]] = i;
    Graph g(static_cast<int>(sorted.size()));
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        for (int w : adj_[sorted[i]])
            if (local[w] > i) g.add_edge(i, local[w]);
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    g.check_vertex(src);
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<int> bfs_path(const Graph& g, int src, int dst) {
    g.check_vertex(src);
    g.check_vertex(dst);
    std::vector<int> parent(g.vertex_count(), -2);
    std::vector<int> queue{src};
    parent[src] = -1;
    for (size_t head = 0; head < queue.size() && parent[dst] == -2; ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    if (parent[dst] == -2) return {};
    std::vector<int> path;
    for (int v = dst; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace imsep
