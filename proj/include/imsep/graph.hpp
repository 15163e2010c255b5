#pragma once

#include <string>
#include <utility>
#include <vector>

namespace imsep {

// Simple undirected graph on vertices 0..n-1.
// Neighbor lists are kept sorted ascending; all iteration is ascending-id.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    // Throws std::invalid_argument on out-of-range ids, self-loops.
    // Adding an existing edge is a no-op (graphs stay simple).
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    // Edge list sorted lexicographically, u < v in each pair.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    // Components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<int>> components() const;

    // Induced subgraph on `vs` (deduplicated, sorted); local id i corresponds
    // to the i-th smallest member of vs.
    Graph induced(const std::vector<int>& vs) const;

    void check_vertex(int v) const;  // throws std::invalid_argument

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Breadth-first distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

// Shortest src-dst path as a vertex sequence, breaking ties toward smaller
// predecessor ids. Empty if unreachable.
std::vector<int> bfs_path(const Graph& g, int src, int dst);

}  // namespace imsep
