#include "imsep/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace imsep {

namespace {

// Shared by both checkers: branch sets nonempty, sorted, disjoint, in range,
// connected. Fills owner[w] with the branch set index of host vertex w.
std::optional<std::string> scan_branch_sets(const Graph& host, int k,
                                            const InducedMinorModel& model,
                                            std::vector<int>& owner) {
    if (static_cast<int>(model.branch_sets.size()) != k) {
        std::ostringstream os;
        os << "model has " << model.branch_sets.size() << " branch sets, pattern has " << k
           << " vertices";
        return os.str();
    }
    owner.assign(host.vertex_count(), -1);
    for (int i = 0; i < k; ++i) {
        const auto& bs = model.branch_sets[i];
        if (bs.empty()) return "branch set " + std::to_string(i) + " is empty";
        if (!std::is_sorted(bs.begin(), bs.end()))
            return "branch set " + std::to_string(i) + " is not sorted";
        for (int w : bs) {
            if (w < 0 || w >= host.vertex_count())
                return "branch set " + std::to_string(i) + " contains out-of-range vertex " +
                       std::to_string(w);
            if (owner[w] != -1) {
                std::ostringstream os;
                os << "host vertex " << w << " lies in branch sets " << owner[w] << " and " << i;
                return os.str();
            }
            owner[w] = i;
        }
        if (!host.induced(bs).is_connected())
            return "branch set " + std::to_string(i) + " is not connected in the host";
    }
    return std::nullopt;
}

std::set<std::pair<int, int>> touching_pairs(const Graph& host, const std::vector<int>& owner) {
    std::set<std::pair<int, int>> touching;
    for (auto [u, v] : host.edges()) {
        int a = owner[u], b = owner[v];
        if (a == -1 || b == -1 || a == b) continue;
        touching.insert({std::min(a, b), std::max(a, b)});
    }
    return touching;
}

}  // namespace

std::optional<std::string> check_induced_minor_model(const Graph& host, const Graph& pattern,
                                                     const InducedMinorModel& model) {
    int k = pattern.vertex_count();
    std::vector<int> owner;
    if (auto err = scan_branch_sets(host, k, model, owner)) return err;

    auto touching = touching_pairs(host, owner);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool want = pattern.has_edge(i, j);
            bool got = touching.count({i, j}) > 0;
            if (want == got) continue;
            std::ostringstream os;
            os << "pattern vertices " << i << "," << j << (want ? " are adjacent" : " are not adjacent")
               << " but their branch sets " << (got ? "touch" : "do not touch") << " in the host";
            return os.str();
        }
    }
    return std::nullopt;
}

bool is_valid_induced_minor_model(const Graph& host, const Graph& pattern,
                                  const InducedMinorModel& model) {
    return !check_induced_minor_model(host, pattern, model).has_value();
}

std::optional<std::string> check_minor_model(const Graph& host, const Graph& pattern,
                                             const InducedMinorModel& model) {
    int k = pattern.vertex_count();
    std::vector<int> owner;
    if (auto err = scan_branch_sets(host, k, model, owner)) return err;

    auto touching = touching_pairs(host, owner);
    for (auto [i, j] : pattern.edges()) {
        if (touching.count({i, j})) continue;
        std::ostringstream os;
        os << "pattern vertices " << i << "," << j
           << " are adjacent but their branch sets do not touch in the host";
        return os.str();
    }
    return std::nullopt;
}

InducedMinorModel compose_models(const InducedMinorModel& a_in_b, const InducedMinorModel& b_in_c) {
    InducedMinorModel out;
    out.branch_sets.reserve(a_in_b.branch_sets.size());
    for (const auto& bs : a_in_b.branch_sets) {
        std::vector<int> merged;
        for (int b : bs) {
            const auto& inner = b_in_c.branch_sets.at(b);
            merged.insert(merged.end(), inner.begin(), inner.end());
        }
        std::sort(merged.begin(), merged.end());
        out.branch_sets.push_back(std::move(merged));
    }
    return out;
}

}  // namespace imsep
