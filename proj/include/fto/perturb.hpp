#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fto/graph.hpp"
#include "fto/wide.hpp"

namespace fto {

// Raised when two relaxations tie exactly during a shortest-path run; the
// caller retries the perturbation with the next seed.
struct UniquenessViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph with widened weights pweight(e) = w(e)*M + rho(e).  The offsets are
// distinct and each is < M/n, so any simple path keeps
// floor(perturbed weight / M) equal to its base weight.  Uniqueness of
// shortest paths is certified lazily: every Dijkstra checks for exact ties.
class PerturbedGraph {
public:
    PerturbedGraph(Graph g, uint64_t seed);

    const Graph& base() const { return g_; }
    Wide M() const { return M_; }
    uint64_t seed() const { return seed_; }
    const std::vector<uint64_t>& rho() const { return rho_; }

    Wide pweight(EdgeId e) const {
        return static_cast<Wide>(g_.edge(e).w) * M_ + static_cast<Wide>(rho_[e]);
    }

    int64_t base_weight(Wide perturbed) const {
        return static_cast<int64_t>(perturbed / M_);
    }

    // restore a serialized perturbation without re-drawing offsets
    PerturbedGraph(Graph g, Wide M, uint64_t seed, std::vector<uint64_t> rho);

private:
    Graph g_;
    Wide M_ = 1;
    uint64_t seed_ = 0;
    std::vector<uint64_t> rho_;
};

inline PerturbedGraph perturb_weights(Graph g, uint64_t seed) {
    return PerturbedGraph(std::move(g), seed);
}

}  // namespace fto
