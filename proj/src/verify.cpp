#include "fto/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace fto {

namespace {

void init_bounds(const OracleIndex& ix, VerifyReport& rep) {
    int f = ix.f();
    rep.jump_len_bound = f == 1 ? jump_bound_single(ix.dist()) : jump_bound(ix.dist(), f);
    rep.set1_bound = 8 * f * f * f;
    rep.set2_bound = 4 * f * f;
    rep.set3_bound = 2 * f;
}

std::string fault_list(const Graph& g, const FaultSet& F) {
    std::ostringstream ss;
    for (EdgeId e : F.ids()) ss << " (" << g.edge(e).u << "," << g.edge(e).v << ")";
    return ss.str();
}

}  // namespace

void verify_one(const OracleIndex& ix, VertexId s, VertexId t, const FaultSet& F,
                VerifyReport& rep) {
    ++rep.trials;
    const DistOracle& o = ix.dist();
    Oracle orc = ix.oracle();
    QueryResult qr = orc.query(s, t, F);
    rep.max_jump_len = std::max(rep.max_jump_len, qr.stats.max_jump_len);
    rep.max_set1 = std::max(rep.max_set1, qr.stats.max_set1);
    rep.max_set2 = std::max(rep.max_set2, qr.stats.max_set2);
    rep.max_set3 = std::max(rep.max_set3, qr.stats.max_set3);

    auto truth = brute_replacement_path(o, s, t, F);
    auto complain = [&](const std::string& what) {
        ++rep.mismatches;
        std::ostringstream ss;
        ss << what << ": seed=" << ix.seed() << " f=" << ix.f() << " n=" << ix.graph().n()
           << " m=" << ix.graph().m() << " s=" << s << " t=" << t << " F=["
           << fault_list(ix.graph(), F) << " ]";
        rep.details.push_back(ss.str());
    };

    if (static_cast<bool>(truth) != static_cast<bool>(qr.path)) {
        complain(truth ? "missing path" : "phantom path");
        return;
    }
    if (!truth) return;
    if (qr.pweight != truth->weight()) {
        complain("weight mismatch (got " + wide_to_string(qr.pweight) + " want " +
                 wide_to_string(truth->weight()) + ")");
        return;
    }
    if (pf_expand(o, *qr.path) != pf_expand(o, *truth)) {
        complain("path mismatch");
        return;
    }
    if (auto err = pf_validate(o, *qr.path, F.size() + 1)) {
        complain("invalid form: " + *err);
    }
}

VerifyReport verify_exhaustive_single(const OracleIndex& ix) {
    VerifyReport rep;
    init_bounds(ix, rep);
    auto t0 = std::chrono::steady_clock::now();
    const Graph& g = ix.graph();
    for (VertexId s = 0; s < g.n(); ++s)
        for (VertexId t = 0; t < g.n(); ++t) {
            if (s == t) continue;
            for (EdgeId e = 0; e < g.m(); ++e) verify_one(ix, s, t, FaultSet({e}), rep);
        }
    rep.store_entries = ix.store().entry_count();
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerifyReport verify_random(const OracleIndex& ix, int trials, uint64_t seed) {
    VerifyReport rep;
    init_bounds(ix, rep);
    auto t0 = std::chrono::steady_clock::now();
    const Graph& g = ix.graph();
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        VertexId s = static_cast<VertexId>(rng() % g.n());
        VertexId t = static_cast<VertexId>(rng() % g.n());
        if (s == t) t = (t + 1) % g.n();
        int k = 1 + static_cast<int>(rng() % ix.f());
        FaultSet F;
        while (F.size() < k) F.insert(static_cast<EdgeId>(rng() % g.m()));
        verify_one(ix, s, t, F, rep);
    }
    rep.store_entries = ix.store().entry_count();
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace fto
