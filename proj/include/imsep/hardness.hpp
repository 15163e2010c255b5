#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imsep/binary_shift.hpp"
#include "imsep/graph.hpp"
#include "imsep/model.hpp"

namespace imsep {

// Binary CSP over domain {1,2,3}. Each edge of the constraint graph carries
// its allowed value pairs as a 9-bit mask: rel_bit(p, q) allows value p at
// the smaller endpoint together with value q at the larger one.
struct BinaryCSPInstance {
    Graph constraint_graph;
    std::map<std::pair<int, int>, int> relations;  // one entry per edge, key u < v
};

constexpr int rel_bit(int p, int q) { return 1 << (3 * (p - 1) + (q - 1)); }
constexpr int kRelFull = 0x1ff;
constexpr int kRelEqual = rel_bit(1, 1) | rel_bit(2, 2) | rel_bit(3, 3);
constexpr int kRelUnequal = kRelFull ^ kRelEqual;

std::optional<std::string> check_csp(const BinaryCSPInstance& csp);

// assignment[v] in {1,2,3} per vertex; false on any shape mismatch.
bool csp_satisfied_by(const BinaryCSPInstance& csp, const std::vector<int>& assignment);

// Exhaustive 3^n scan, last variable varying fastest, first hit returned.
// Throws on more than 16 variables.
std::optional<std::vector<int>> solve_csp_brute(const BinaryCSPInstance& csp);

// CSP on `host` that is satisfiable iff `pattern` is 3-colorable: equality
// on host edges inside a branch set, disequality on host edges between
// branch sets of adjacent pattern vertices, anything goes elsewhere.
// Throws when `model` is not a minor model of pattern in host.
BinaryCSPInstance csp_from_coloring(const Graph& pattern, const Graph& host,
                                    const InducedMinorModel& model);

// Randomized greedy: place pattern vertices on distinct host vertices, then
// join branch sets with shortest paths through unused vertices. absent means
// the retry budget ran out, not that no minor model exists.
std::optional<InducedMinorModel> greedy_minor_embed(const Graph& host, const Graph& pattern,
                                                    std::uint64_t seed);

// Multicolored induced disjoint paths: one s_i-t_i path inside each part,
// paths pairwise non-adjacent.
struct MIDPInstance {
    Graph g;
    std::vector<std::vector<int>> parts;         // sorted vertex lists
    std::vector<std::pair<int, int>> terminals;  // (s_i, t_i), both in part i
};

// Valid means: parts partition the vertices, terminals sit in their parts
// with s_i != t_i, and edges never jump between parts more than one apart.
std::optional<std::string> check_midp_instance(const MIDPInstance& inst);

bool verify_midp_solution(const MIDPInstance& inst, const std::vector<std::vector<int>>& paths);

// Vertex id scheme used by csp_to_midp: per layer, s first, then per column
// the three letter vertices followed by the connector (absent after the last
// column), then t.
struct MIDPLayout {
    int n = 0;  // columns per layer

    int stride() const { return 4 * n + 1; }
    int s(int layer) const { return layer * stride(); }
    int t(int layer) const { return layer * stride() + 4 * n; }
    int letter(int layer, int column, int value) const {  // value in {1,2,3}
        return layer * stride() + 1 + 4 * column + (value - 1);
    }
    int connector(int layer, int column) const {  // column in [0, n-2]
        return layer * stride() + 4 + 4 * column;
    }
};

struct MIDPReduction {
    MIDPInstance instance;
    MIDPLayout layout;
    // One path decomposition per consecutive layer pair (i, i+1), over the
    // induced subgraph on parts i and i+1 in its positional vertex ids.
    std::vector<std::vector<std::vector<int>>> pair_certificates;
};

// Five selector-ladder layers over the shift graph's columns. The letter a
// path picks per column encodes an assignment, copy gadgets force all five
// layers to agree, and each constraint blocks its forbidden value pairs
// between the two layers that own its edge in the partition. Certificates
// come from the partition's certificates by bag substitution and stay within
// width 169.
MIDPReduction csp_to_midp(const BinaryCSPInstance& csp, const ShiftPartition& partition);

// Enumerates all simple terminal paths per part, then chains compatible
// picks across consecutive parts. Desk sizes only; throws when a part
// exceeds path_cap paths.
std::optional<std::vector<std::vector<int>>> solve_midp_exhaustive(
    const MIDPInstance& inst, std::size_t path_cap = 200000);

// Anchored induced minor testing: does g contain t as an induced minor whose
// branch set for tree vertex tv contains host vertex hv per anchor (hv, tv)?
struct AnchoredInstance {
    Graph g;
    Graph t;
    std::vector<std::pair<int, int>> anchors;  // (host vertex, tree vertex)
};

std::optional<std::string> check_anchored_model(const AnchoredInstance& inst,
                                                const InducedMinorModel& model);

// Pads the part count to an even k >= 4 with isolated singleton parts, adds
// one w_i per part adjacent to exactly part i, joins parts completely when
// their tree vertices are adjacent, and anchors w_i to u_i plus both
// terminals to v_i (3k anchors, grouped per part). The tree has 2k vertices:
// v_i at index i-1, u_i at k+i-1; v-vertices are chained two apart with a
// closing v_1 v_k edge, each u_i hangs off its v_i.
AnchoredInstance midp_to_anchored(const MIDPInstance& inst);

// Iterated attachment: for anchor index i = 1..a, a complete binary tree
// with 2^{h+2i}-1 vertices is rooted at the host anchor and an identical one
// at the tree anchor. Attachments that would push the host or tree past
// vertex_budget stay symbolic: their exponent lands in skipped_heights.
struct IMTInstance {
    Graph g;
    Graph t;
    int h = 0;
    int realized = 0;                 // attachments materialized
    std::vector<int> skipped_heights; // e per symbolic attachment, 2^e - 1 vertices each
};

IMTInstance anchored_to_imt(const AnchoredInstance& inst, int h,
                            long long vertex_budget = 200000);

struct ForwardWitness {
    std::vector<std::vector<int>> midp_paths;
    InducedMinorModel anchored_model;
    InducedMinorModel imt_model;
};

// A satisfying assignment stitched through every stage of the chain. The
// three artifacts must come from the same csp (midp from csp_to_midp,
// anchored from midp_to_anchored, imt from anchored_to_imt). Throws when
// the assignment does not satisfy the csp.
ForwardWitness forward_witness(const BinaryCSPInstance& csp, const std::vector<int>& assignment,
                               const MIDPReduction& midp, const AnchoredInstance& anchored,
                               const IMTInstance& imt);

}  // namespace imsep
