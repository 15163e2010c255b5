#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imsep/flow.hpp"
#include "imsep/graph.hpp"
#include "imsep/model.hpp"

namespace imsep {

// phi maps pattern vertices into the host; edge_paths[j] is a walk-free host
// path joining the images of the endpoints of pattern edge j (in
// pattern.edges() order). Paths of non-incident pattern edges must be
// mutually induced: vertex-disjoint with no host edge between them. Paths of
// incident edges may overlap, hence "almost".
struct AlmostEmbedding {
    std::vector<int> phi;
    std::vector<std::vector<int>> edge_paths;
};

std::optional<std::string> check_almost_embedding(const Graph& host, const Graph& pattern,
                                                  const AlmostEmbedding& ae);

// Number of other collision events sharing a variable with the worst event;
// depends only on the pattern. At most 12*|E(pattern)| when subcubic.
int almost_embed_dependency_degree(const Graph& pattern);

// Samples vertex images uniformly and edge paths from the flow, then
// resamples colliding non-incident pairs until none collide. Deterministic
// in (host, pattern, flow, seed). nullopt when the resample budget
// (100 + multiplier * events^2) runs out. pattern must be subcubic, host
// connected, flow a valid all-pairs concurrent flow on host.
std::optional<AlmostEmbedding> almost_embed(const Graph& host, const Graph& pattern,
                                            const VertexFlow& flow, std::uint64_t seed,
                                            double resample_multiplier = 100.0);

// Turns an almost-embedding of subdivide(h_subcubic, 2) into a full model of
// subdivide(h_subcubic, 1): original vertices keep the union of their
// incident end-segment paths; each middle segment contributes the stretch of
// a shortest path strictly between the two end segments.
InducedMinorModel extract_model(const Graph& host, const Graph& h_subcubic,
                                const AlmostEmbedding& iae);

struct EmbedOptions {
    int attempts = 3;
    double resample_multiplier = 100.0;
};

// Full pipeline: pad isolated pattern vertices with pendants, make the
// pattern subcubic, subdivide twice, almost-embed against the flow, extract
// and contract back down to a model of `pattern` in `host`. Retries with
// seeds seed, seed+1, ... nullopt when every attempt fails.
std::optional<InducedMinorModel> embed_induced_minor(const Graph& host, const Graph& pattern,
                                                     const VertexFlow& flow, std::uint64_t seed,
                                                     const EmbedOptions& opt = {});

}  // namespace imsep
