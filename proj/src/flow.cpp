#include "imsep/flow.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace imsep {

std::optional<std::string> check_concurrent_flow(const Graph& g, const VertexFlow& f,
                                                 double tol) {
    int n = g.vertex_count();
    std::vector<double> pair_weight(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<char> seen(n, 0);

    for (std::size_t i = 0; i < f.paths.size(); ++i) {
        const FlowPath& p = f.paths[i];
        auto fail = [&](const std::string& why) {
            std::ostringstream os;
            os << "path " << i << " (" << p.src << "->" << p.dst << "): " << why;
            return os.str();
        };
        if (p.weight <= 0.0) return fail("non-positive weight");
        if (p.vertices.empty()) return fail("no vertices");
        if (p.vertices.front() != p.src || p.vertices.back() != p.dst)
            return fail("endpoints do not match src/dst");
        for (int v : p.vertices)
            if (v < 0 || v >= n) return fail("out-of-range vertex");
        for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j)
            if (!g.has_edge(p.vertices[j], p.vertices[j + 1])) return fail("non-adjacent step");
        for (int v : p.vertices) {
            if (seen[v]) {
                for (int u : p.vertices) seen[u] = 0;
                return fail("repeated vertex");
            }
            seen[v] = 1;
        }
        for (int v : p.vertices) seen[v] = 0;
        pair_weight[static_cast<std::size_t>(p.src) * n + p.dst] += p.weight;
    }

    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            double got = pair_weight[static_cast<std::size_t>(s) * n + t];
            if (std::abs(got - 1.0) > tol) {
                std::ostringstream os;
                os << "pair (" << s << "," << t << ") carries weight " << got << ", want 1";
                return os.str();
            }
        }
    return std::nullopt;
}

double flow_congestion(const Graph& g, const VertexFlow& f) {
    std::vector<double> load(g.vertex_count(), 0.0);
    for (const FlowPath& p : f.paths)
        for (int v : p.vertices) load[v] += p.weight;
    double c = 0.0;
    for (double l : load) c = std::max(c, l);
    return c;
}

}  // namespace imsep
