#include "imsep/generators.hpp"

#include <stdexcept>

namespace imsep {

Graph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid: rows and cols must be >= 1");
    Graph g(rows * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, v + cols);
        }
    }
    return g;
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    Graph g = gen_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_star(int n) {
    if (n < 1) throw std::invalid_argument("star: n must be >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gnp: n must be >= 0");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p must be in [0, 1]");
    Graph g(n);
    Rng rng = make_rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng_unit(rng) < p) g.add_edge(u, v);
    return g;
}

Graph gen_complete_binary_tree(int levels) {
    if (levels < 1) throw std::invalid_argument("complete_binary_tree: levels must be >= 1");
    int n = (1 << levels) - 1;
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge((v - 1) / 2, v);
    return g;
}

Graph gen_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

}  // namespace imsep
