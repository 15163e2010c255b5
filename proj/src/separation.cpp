#include "imsep/separation.hpp"

#include <algorithm>
#include <sstream>

namespace imsep {

std::optional<std::string> check_separation(const Graph& g, const Separation& sep) {
    int n = g.vertex_count();
    // 0 = a, 1 = s, 2 = b, -1 = unseen
    std::vector<int> side(n, -1);
    const std::vector<int>* parts[3] = {&sep.a, &sep.s, &sep.b};
    const char* names[3] = {"a", "s", "b"};
    for (int p = 0; p < 3; ++p) {
        if (!std::is_sorted(parts[p]->begin(), parts[p]->end()))
            return std::string("part ") + names[p] + " is not sorted";
        for (int v : *parts[p]) {
            if (v < 0 || v >= n)
                return std::string("part ") + names[p] + " contains out-of-range vertex " +
                       std::to_string(v);
            if (side[v] != -1) {
                std::ostringstream os;
                os << "vertex " << v << " appears in parts " << names[side[v]] << " and "
                   << names[p];
                return os.str();
            }
            side[v] = p;
        }
    }
    for (int v = 0; v < n; ++v)
        if (side[v] == -1) return "vertex " + std::to_string(v) + " is in no part";
    for (auto [u, v] : g.edges()) {
        if ((side[u] == 0 && side[v] == 2) || (side[u] == 2 && side[v] == 0)) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") joins a and b";
            return os.str();
        }
    }
    return std::nullopt;
}

bool is_balanced(const Graph& g, const Separation& sep) {
    std::size_t big = std::max(sep.a.size(), sep.b.size());
    return 3 * big <= 2 * static_cast<std::size_t>(g.vertex_count());
}

double separation_sparsity(const Graph& g, const Separation& sep) {
    (void)g;
    double as = static_cast<double>(sep.a.size() + sep.s.size());
    double bs = static_cast<double>(sep.b.size() + sep.s.size());
    return static_cast<double>(sep.s.size()) / (as * bs);
}

}  // namespace imsep
