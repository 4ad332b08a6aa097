#include "fto/index.hpp"

#include <fstream>

#include "fto/bio.hpp"

namespace fto {

namespace {

constexpr uint64_t kMagic = 0x0146544f49445831ull;  // versioned file tag

// tie-free for every source and every fault set of size <= f, or throws
void certify_uniqueness(const PerturbedGraph& gp, int f) {
    int m = gp.base().m();
    int n = gp.base().n();
    std::vector<EdgeId> pick;
    auto sweep = [&](const FaultSet& F) {
        for (VertexId s = 0; s < n; ++s) dijkstra_avoiding(gp, s, F);
    };
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == f) return;
        for (int e = from; e < m; ++e) {
            pick.push_back(e);
            sweep(FaultSet(pick));
            self(self, e + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

OracleIndex OracleIndex::build(Graph g, int f, uint64_t seed, bool lazy,
                               uint64_t budget_entries) {
    OracleIndex ix;
    ix.g_ = std::move(g);
    ix.f_ = f;
    ix.lazy_ = lazy;
    for (int attempt = 0; attempt < 16; ++attempt) {
        try {
            ix.pg_ = std::make_unique<PerturbedGraph>(ix.g_, seed + attempt);
            ix.dist_ = std::make_unique<DistOracle>(*ix.pg_);
            certify_uniqueness(*ix.pg_, f);
            ix.store_ = std::make_unique<MaximiserStore>(*ix.dist_, f, lazy);
            ix.store_->build(budget_entries);
            ix.reseeds_ = attempt;
            return ix;
        } catch (const UniquenessViolation&) {
            continue;
        }
    }
    throw std::runtime_error("could not find a tie-free perturbation in 16 attempts");
}

void OracleIndex::save(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    bio::put_u64(os, kMagic);
    bio::put_i32(os, g_.n());
    bio::put_i32(os, g_.m());
    bio::put_u64(os, static_cast<uint64_t>(g_.W()));
    for (const Edge& e : g_.edges()) {
        bio::put_i32(os, e.u);
        bio::put_i32(os, e.v);
        bio::put_u64(os, static_cast<uint64_t>(e.w));
    }
    bio::put_u64(os, g_.hash());
    bio::put_wide(os, pg_->M());
    bio::put_u64(os, pg_->seed());
    for (uint64_t r : pg_->rho()) bio::put_u64(os, r);
    bio::put_i32(os, f_);
    bio::put_u64(os, lazy_ ? 1 : 0);
    store_->save(os);
    if (!os) throw std::runtime_error("write failure on " + path);
}

OracleIndex OracleIndex::load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + path);
    if (bio::get_u64(is) != kMagic) throw std::runtime_error("not an index file: " + path);
    int n = bio::get_i32(is);
    int m = bio::get_i32(is);
    int64_t W = static_cast<int64_t>(bio::get_u64(is));
    std::vector<Edge> edges(m);
    for (auto& e : edges) {
        e.u = bio::get_i32(is);
        e.v = bio::get_i32(is);
        e.w = static_cast<int64_t>(bio::get_u64(is));
    }
    OracleIndex ix;
    ix.g_ = Graph(n, W, std::move(edges));
    uint64_t want_hash = bio::get_u64(is);
    if (ix.g_.hash() != want_hash)
        throw std::runtime_error("index graph hash mismatch in " + path);
    Wide M = bio::get_wide(is);
    uint64_t seed = bio::get_u64(is);
    std::vector<uint64_t> rho(m);
    for (auto& r : rho) r = bio::get_u64(is);
    ix.pg_ = std::make_unique<PerturbedGraph>(ix.g_, M, seed, std::move(rho));
    ix.dist_ = std::make_unique<DistOracle>(*ix.pg_);
    ix.f_ = bio::get_i32(is);
    ix.lazy_ = bio::get_u64(is) != 0;
    ix.store_ = std::make_unique<MaximiserStore>(*ix.dist_, ix.f_, ix.lazy_);
    ix.store_->load(is);
    return ix;
}

}  // namespace fto
