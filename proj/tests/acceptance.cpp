// Standalone acceptance suite.  Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero when any gating criterion fails.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "fto/index.hpp"
#include "fto/verify.hpp"

using namespace fto;

namespace {

int failures = 0;

void report(int crit, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << crit << ": " << what << "\n";
    if (!ok) ++failures;
}

struct RunLog {
    std::vector<VerifyReport> reports;  // from criteria 1 and 2
    std::vector<int> report_f;
    int jump_sequences = 0;
    int jump_violations = 0;
};

// ---------------------------------------------------------------- criterion 1
void criterion1(RunLog& log) {
    const int ns[] = {8, 15, 25};
    const int64_t Ws[] = {1, 8};
    long trials = 0, mism = 0;
    int graphs = 0;
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        int n = ns[seed % 3];
        int64_t W = Ws[seed % 2];
        Graph g = generate_random_graph(n, 2 * n, W, seed);
        OracleIndex ix = OracleIndex::build(std::move(g), 1, seed, /*lazy=*/true);
        VerifyReport rep = verify_exhaustive_single(ix);
        trials += rep.trials;
        mism += rep.mismatches;
        for (const std::string& d : rep.details) std::cerr << "  c1: " << d << "\n";
        log.reports.push_back(std::move(rep));
        log.report_f.push_back(1);
        ++graphs;
    }
    std::ostringstream ss;
    ss << "single-fault exactness, " << graphs << " graphs, " << trials
       << " exhaustive (s,t,e) trials, " << mism << " mismatches";
    report(1, mism == 0, ss.str());
}

// ---------------------------------------------------------------- criterion 2
void criterion2(RunLog& log) {
    struct Cfg { int f, n, m; int64_t W; uint64_t seed; };
    const Cfg cfgs[] = {{2, 24, 48, 5, 31}, {3, 10, 20, 3, 32}};
    long trials = 0, mism = 0;
    for (const Cfg& c : cfgs) {
        Graph g = generate_random_graph(c.n, c.m, c.W, c.seed);
        OracleIndex ix = OracleIndex::build(std::move(g), c.f, c.seed, /*lazy=*/true);
        VerifyReport rep = verify_random(ix, 500, c.seed * 7919);
        trials += rep.trials;
        mism += rep.mismatches;
        for (const std::string& d : rep.details) std::cerr << "  c2: " << d << "\n";
        log.reports.push_back(std::move(rep));
        log.report_f.push_back(c.f);
    }
    std::ostringstream ss;
    ss << "multi-fault exactness, f in {2,3}, " << trials << " random trials, " << mism
       << " mismatches";
    report(2, mism == 0, ss.str());
}

// ---------------------------------------------------------------- criterion 3
void criterion3(const RunLog& log) {
    // every verified query already ran pf_validate at bound |F|+1, which
    // re-checks each segment as a shortest path; any violation shows up as
    // an "invalid form" detail line
    long bad = 0, total = 0;
    for (const VerifyReport& rep : log.reports) {
        total += rep.trials;
        for (const std::string& d : rep.details)
            if (d.find("invalid form") != std::string::npos) ++bad;
    }
    std::ostringstream ss;
    ss << "every returned path is a valid form with at most |F|+1 segments (" << total
       << " paths validated, " << bad << " violations)";
    report(3, bad == 0, ss.str());
}

// ---------------------------------------------------------------- criterion 4
void criterion4(RunLog& log) {
    std::mt19937_64 rng(404);
    while (log.jump_sequences < 200) {
        int n = 8 + static_cast<int>(rng() % 18);
        int m = std::min(n - 1 + static_cast<int>(rng() % 14), n * (n - 1) / 2);
        int64_t W = 1 + static_cast<int64_t>(rng() % 8);
        Graph g = generate_random_graph(n, m, W, rng());
        int f = 1 + static_cast<int>(rng() % 3);
        FaultSet F;
        while (F.size() < f) F.insert(static_cast<EdgeId>(rng() % g.m()));
        VertexId s = static_cast<VertexId>(rng() % n);
        VertexId t = static_cast<VertexId>(rng() % n);
        if (s == t) continue;
        try {
            PerturbedGraph pg(g, rng());
            DistOracle o(pg);
            auto rp = brute_replacement_path(o, s, t, F);
            if (!rp) continue;
            PathForm p = PathForm::decompose(o, pf_expand(o, *rp));
            for (bool rev : {false, true}) {
                JumpSequence js = find_jump(o, p, F, rev);
                int len = static_cast<int>(js.verts.size());
                if (len > jump_bound(o, f)) ++log.jump_violations;
                if (f == 1 && len > jump_bound_single(o)) ++log.jump_violations;
                ++log.jump_sequences;
            }
        } catch (const UniquenessViolation&) {
            continue;
        }
    }
    std::ostringstream ss;
    ss << "hop-sequence lengths within 8·levels+2 (single fault) and 16·f·levels+2 ("
       << log.jump_sequences << " sequences, " << log.jump_violations << " violations)";
    report(4, log.jump_violations == 0, ss.str());
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
    long sampled = 0, violations = 0;
    std::mt19937_64 rng(505);
    for (uint64_t seed : {51, 52}) {
        Graph g = generate_random_graph(12, 20, 4, seed);
        OracleIndex ix = OracleIndex::build(std::move(g), 2, seed, /*lazy=*/false);
        const DistOracle& o = ix.dist();
        const MaximiserStore& st = ix.store();
        const Graph& gr = ix.graph();
        size_t step = std::max<size_t>(1, st.entry_count() / 800);
        size_t i = 0;
        for (const auto& [key, entry] : st.entries()) {
            if (i++ % step != 0) continue;
            if (key.x == key.y) continue;
            for (int attempt = 0; attempt < 6; ++attempt) {
                // draw a random fault set and keep it only if feasible
                FaultSet F;
                int want = 1 + static_cast<int>(rng() % 2);
                for (int j = 0; j < want; ++j)
                    F.insert(static_cast<EdgeId>(rng() % gr.m()));
                if (!st.condition_holds(key, F)) continue;
                ++sampled;
                auto rp = brute_replacement_path(o, key.x, key.y, F);
                Wide w = pf_weight(rp);
                if (entry.value == w) continue;  // stored weight matches |xy <> F|
                if (entry.value < w) { ++violations; continue; }  // not maximal
                // strictly larger: some stored fault must block this path
                bool hits = false;
                if (rp)
                    for (EdgeId e : entry.fstar.ids())
                        if (pf_contains_edge(o, *rp, e)) { hits = true; break; }
                if (!hits) ++violations;
            }
        }
    }
    std::ostringstream ss;
    ss << "exchange property of stored argmax sets (" << sampled << " feasible (key,F) pairs, "
       << violations << " violations)";
    report(5, sampled >= 1000 && violations == 0, ss.str());
}

// ---------------------------------------------------------------- criterion 6
void criterion6(const RunLog& log) {
    long bad = 0;
    int seen1 = 0, seen2 = 0, seen3 = 0;
    for (size_t i = 0; i < log.reports.size(); ++i) {
        const VerifyReport& rep = log.reports[i];
        if (rep.max_set1 > rep.set1_bound) ++bad;
        if (rep.max_set2 > rep.set2_bound) ++bad;
        if (rep.max_set3 > rep.set3_bound) ++bad;
        if (rep.max_jump_len > rep.jump_len_bound) ++bad;
        seen1 = std::max(seen1, rep.max_set1);
        seen2 = std::max(seen2, rep.max_set2);
        seen3 = std::max(seen3, rep.max_set3);
    }
    std::ostringstream ss;
    ss << "candidate-set counters within 8f^3/4f^2/2f on all runs (largest seen: " << seen1
       << "/" << seen2 << "/" << seen3 << ", " << bad << " violations)";
    report(6, bad == 0, ss.str());
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    long bad = 0;
    size_t entries = 0;
    for (uint64_t seed : {71, 72}) {
        Graph g = generate_random_graph(10, 16, 4, seed);
        OracleIndex ix = OracleIndex::build(std::move(g), 1, seed, /*lazy=*/false);
        const MaximiserStore& st = ix.store();
        const Graph& gr = ix.graph();
        entries += st.entry_count();
        int levels = ix.dist().levels();
        long per_pair_cap = static_cast<long>(levels + 1) * (levels + 1);
        std::vector<long> per_pair(static_cast<size_t>(gr.n()) * gr.n(), 0);
        for (const auto& [key, entry] : st.entries()) {
            int f = ix.f();
            switch (key.variant) {
                case MaxVariant::D:
                    ++per_pair[static_cast<size_t>(key.x) * gr.n() + key.y];
                    break;
                case MaxVariant::D1:
                    if (static_cast<int>(entry.fstar.vertices(gr).size()) > 2 * f) ++bad;
                    break;
                case MaxVariant::D2xv:
                case MaxVariant::D2uy:
                    if (static_cast<int>(entry.fstar.vertices(gr).size()) > 2 * f) ++bad;
                    break;
                case MaxVariant::D3:
                    break;
            }
        }
        for (long c : per_pair)
            if (c > per_pair_cap) ++bad;
        // derived-table fan-out: each parent spawns two children per fault
        // endpoint, hence at most 2·2f
        for (const auto& [key, entry] : st.entries()) {
            if (key.variant != MaxVariant::D1) continue;
            long fanout = 2 * static_cast<long>(entry.fstar.vertices(gr).size());
            if (fanout > 4 * ix.f()) ++bad;
        }
    }
    std::ostringstream ss;
    ss << "store size accounting: per-pair entry counts within (levels+1)^2 and cascade "
          "fan-out within 4f ("
       << entries << " entries audited, " << bad << " violations)";
    report(7, bad == 0, ss.str());
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
    Graph g = generate_random_graph(14, 26, 4, 81);
    OracleIndex eager = OracleIndex::build(g, 2, 81, /*lazy=*/false);
    OracleIndex lazy = OracleIndex::build(g, 2, 81, /*lazy=*/true);
    Oracle a = eager.oracle(), b = lazy.oracle();
    std::mt19937_64 rng(808);
    long diffs = 0, trials = 500;
    for (long i = 0; i < trials; ++i) {
        VertexId s = static_cast<VertexId>(rng() % g.n());
        VertexId t = static_cast<VertexId>(rng() % g.n());
        if (s == t) t = (t + 1) % g.n();
        int k = 1 + static_cast<int>(rng() % 2);
        FaultSet F;
        while (F.size() < k) F.insert(static_cast<EdgeId>(rng() % g.m()));
        QueryResult qa = a.query(s, t, F);
        QueryResult qb = b.query(s, t, F);
        if (qa.path != qb.path || qa.pweight != qb.pweight) ++diffs;
    }
    std::ostringstream ss;
    ss << "eager and lazy table backends agree on " << trials << " queries (" << diffs
       << " differences)";
    report(8, diffs == 0, ss.str());
}

// ---------------------------------------------------------------- criterion 9
void criterion9() {
    // asymptotic query time is not measurable as a constant; log operation
    // counters across graph sizes instead (informational, non-gating)
    std::ostringstream trend;
    for (int n : {10, 16, 24}) {
        Graph g = generate_random_graph(n, 2 * n, 4, 90 + n);
        OracleIndex ix = OracleIndex::build(std::move(g), 2, 90 + n, /*lazy=*/true);
        Oracle orc = ix.oracle();
        std::mt19937_64 rng(909);
        uint64_t lookups = 0, recs = 0;
        const int trials = 60;
        for (int i = 0; i < trials; ++i) {
            VertexId s = static_cast<VertexId>(rng() % ix.graph().n());
            VertexId t = static_cast<VertexId>(rng() % ix.graph().n());
            if (s == t) t = (t + 1) % ix.graph().n();
            FaultSet F({static_cast<EdgeId>(rng() % ix.graph().m()),
                        static_cast<EdgeId>(rng() % ix.graph().m())});
            QueryResult qr = orc.query(s, t, F);
            lookups += qr.stats.maximiser_lookups;
            recs += qr.stats.recursive_calls;
        }
        trend << " n=" << n << ":lookups/query=" << lookups / trials
              << ",recursions/query=" << recs / trials;
    }
    report(9, true,
           "query-time constant not measurable; operation counters logged instead "
           "(informational):" + trend.str());
}

}  // namespace

int main() {
    RunLog log;
    criterion1(log);
    criterion2(log);
    criterion3(log);
    criterion4(log);
    criterion5();
    criterion6(log);
    criterion7();
    criterion8();
    criterion9();
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
