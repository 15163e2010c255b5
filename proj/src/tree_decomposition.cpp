#include "imsep/tree_decomposition.hpp"

#include <algorithm>
#include <sstream>

namespace imsep {

int TreeDecomposition::width() const {
    std::size_t biggest = 0;
    for (const auto& b : bags) biggest = std::max(biggest, b.size());
    return static_cast<int>(biggest) - 1;
}

std::optional<std::string> check_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return "decomposition has no bags";

    for (int i = 0; i < nb; ++i) {
        const auto& b = td.bags[i];
        if (!std::is_sorted(b.begin(), b.end())) return "bag " + std::to_string(i) + " is not sorted";
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            return "bag " + std::to_string(i) + " has a repeated vertex";
        for (int v : b)
            if (v < 0 || v >= g.vertex_count())
                return "bag " + std::to_string(i) + " contains out-of-range vertex " +
                       std::to_string(v);
    }

    if (static_cast<int>(td.tree_edges.size()) != nb - 1) {
        std::ostringstream os;
        os << "tree on " << nb << " bags needs " << nb - 1 << " edges, got " << td.tree_edges.size();
        return os.str();
    }
    std::vector<std::vector<int>> tree_adj(nb);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || a >= nb || b < 0 || b >= nb || a == b)
            return "invalid tree edge (" + std::to_string(a) + "," + std::to_string(b) + ")";
        tree_adj[a].push_back(b);
        tree_adj[b].push_back(a);
    }
    // nb-1 edges + connected => tree.
    {
        std::vector<bool> seen(nb, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree_adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != nb) return "bag tree is disconnected";
    }

    std::vector<std::vector<int>> occ(g.vertex_count());
    for (int i = 0; i < nb; ++i)
        for (int v : td.bags[i]) occ[v].push_back(i);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (occ[v].empty()) return "vertex " + std::to_string(v) + " appears in no bag";

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i : occ[u])
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                covered = true;
                break;
            }
        if (!covered) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") lies in no bag";
            return os.str();
        }
    }

    // The bags holding v must induce a connected subtree.
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<bool> seen(nb, false);
        std::vector<int> stack{occ[v][0]};
        seen[occ[v][0]] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree_adj[x]) {
                if (seen[y] || !std::binary_search(td.bags[y].begin(), td.bags[y].end(), v))
                    continue;
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
        if (reached != occ[v].size())
            return "bags containing vertex " + std::to_string(v) + " are not connected in the tree";
    }
    return std::nullopt;
}

std::optional<std::string> check_path_decomposition(const Graph& g,
                                                    const std::vector<std::vector<int>>& bags) {
    TreeDecomposition td;
    td.bags = bags;
    for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) td.tree_edges.push_back({i, i + 1});
    return check_tree_decomposition(g, td);
}

int path_width(const std::vector<std::vector<int>>& bags) {
    std::size_t biggest = 0;
    for (const auto& b : bags) biggest = std::max(biggest, b.size());
    return static_cast<int>(biggest) - 1;
}

}  // namespace imsep
