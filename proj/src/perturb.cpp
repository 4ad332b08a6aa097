#include "fto/perturb.hpp"

#include <random>
#include <unordered_set>

namespace fto {

PerturbedGraph::PerturbedGraph(Graph g, uint64_t seed)
    : g_(std::move(g)), seed_(seed) {
    int n = g_.n();
    int m = g_.m();
    // headroom factor keeps the offset range wide enough that equal-weight
    // paths almost never tie on their offset sums (ties are still detected
    // and handled by reseeding)
    Wide need = (static_cast<Wide>(n) * (m + 1)) << 24;
    M_ = 1;
    while (M_ < need) M_ <<= 1;
    // overflow guard for n*W*M in 128 bits (wildly generous at desk scale)
    Wide cap = kInf / (static_cast<Wide>(n == 0 ? 1 : n) * (g_.W() + 1));
    if (M_ >= cap) throw std::overflow_error("perturbation scale overflows wide weights");

    // distinct offsets in [1, M/n); the range has at least m values
    uint64_t range = static_cast<uint64_t>(M_ / (n == 0 ? 1 : n));
    std::mt19937_64 rng(seed);
    std::unordered_set<uint64_t> taken;
    rho_.reserve(m);
    for (int i = 0; i < m; ++i) {
        uint64_t r;
        do {
            r = rng() % (range - 1) + 1;
        } while (!taken.insert(r).second);
        rho_.push_back(r);
    }
}

PerturbedGraph::PerturbedGraph(Graph g, Wide M, uint64_t seed, std::vector<uint64_t> rho)
    : g_(std::move(g)), M_(M), seed_(seed), rho_(std::move(rho)) {
    if (static_cast<int>(rho_.size()) != g_.m())
        throw std::invalid_argument("rho size mismatch");
}

}  // namespace fto
