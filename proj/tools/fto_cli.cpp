#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fto/index.hpp"
#include "fto/verify.hpp"

using nlohmann::json;
using namespace fto;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

json path_to_json(const PathForm& p) {
    json pieces = json::array();
    for (const Piece& pc : p.pieces())
        pieces.push_back({{"kind", pc.kind == Piece::Seg ? "seg" : "edge"},
                          {"a", pc.a},
                          {"b", pc.b}});
    return {{"source", p.source()}, {"target", p.target()}, {"pieces", pieces},
            {"segments", p.seg_count()}};
}

json stats_to_json(const QueryStats& st) {
    return {{"maximiser_lookups", st.maximiser_lookups}, {"fi1_calls", st.fi1_calls},
            {"recursive_calls", st.recursive_calls},    {"max_depth", st.max_depth},
            {"max_jump_len", st.max_jump_len},          {"max_set1", st.max_set1},
            {"max_set2", st.max_set2},                  {"max_set3", st.max_set3}};
}

Graph parse_random_spec(const std::string& spec, uint64_t seed) {
    int n, m;
    int64_t W;
    char c1, c2;
    std::istringstream ss(spec);
    if (!(ss >> n >> c1 >> m >> c2 >> W) || c1 != ',' || c2 != ',')
        throw ParseError("--random expects n,m,W");
    return generate_random_graph(n, m, W, seed);
}

int cmd_build(const std::string& gpath, int f, uint64_t seed, bool lazy, uint64_t budget,
              const std::string& out) {
    OracleIndex ix = OracleIndex::build(load_graph_file(gpath), f, seed, lazy, budget);
    ix.save(out);
    std::cout << "index written to " << out << "\n"
              << "n=" << ix.graph().n() << " m=" << ix.graph().m() << " f=" << f
              << " seed=" << ix.seed() << " reseeds=" << ix.reseeds() << "\n"
              << "entries: D=" << ix.store().entry_count(MaxVariant::D)
              << " D1=" << ix.store().entry_count(MaxVariant::D1)
              << " D2=" << ix.store().entry_count(MaxVariant::D2xv) +
                               ix.store().entry_count(MaxVariant::D2uy)
              << " D3=" << ix.store().entry_count(MaxVariant::D3)
              << " total=" << ix.store().entry_count() << "\n";
    return kExitOk;
}

int cmd_query(const std::string& ipath, const std::string& qpath, bool expand) {
    OracleIndex ix = OracleIndex::load(ipath);
    Oracle orc = ix.oracle();
    std::ifstream qs(qpath);
    if (!qs) throw ParseError("cannot open query file " + qpath);
    std::string line;
    int lineno = 0;
    while (std::getline(qs, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        char tag;
        int s, t, k;
        json out;
        if (!(ss >> tag >> s >> t >> k) || tag != 'q') {
            throw ParseError("query line " + std::to_string(lineno) +
                             ": expected 'q <s> <t> <k> ...'");
        }
        FaultSet F;
        json fj = json::array();
        bool bad = false;
        for (int i = 0; i < k; ++i) {
            int u, v;
            if (!(ss >> u >> v))
                throw ParseError("query line " + std::to_string(lineno) + ": truncated");
            EdgeId e = u >= 0 && u < ix.graph().n() && v >= 0 && v < ix.graph().n()
                           ? ix.graph().find_edge(u, v)
                           : -1;
            if (e < 0) {
                out = {{"s", s}, {"t", t},
                       {"error", "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")"}};
                bad = true;
                break;
            }
            F.insert(e);
            fj.push_back({u, v});
        }
        if (!bad && F.size() > ix.f()) {
            out = {{"s", s}, {"t", t}, {"error", "more faults than the index supports"}};
            bad = true;
        }
        if (!bad && (s < 0 || s >= ix.graph().n() || t < 0 || t >= ix.graph().n())) {
            out = {{"s", s}, {"t", t}, {"error", "vertex out of range"}};
            bad = true;
        }
        if (!bad) {
            QueryResult qr = orc.query(s, t, F);
            out = {{"s", s}, {"t", t}, {"faults", fj}};
            if (qr.path) {
                out["weight"] = qr.base_weight;
                out["path"] = path_to_json(*qr.path);
                if (expand) out["vertices"] = pf_expand(ix.dist(), *qr.path);
            } else {
                out["weight"] = nullptr;
            }
            out["stats"] = stats_to_json(qr.stats);
        }
        std::cout << out.dump() << "\n";
    }
    return kExitOk;
}

json report_to_json(const VerifyReport& rep) {
    return {{"trials", rep.trials},
            {"mismatches", rep.mismatches},
            {"max_jump_len", rep.max_jump_len},
            {"jump_len_bound", rep.jump_len_bound},
            {"max_set_sizes", {rep.max_set1, rep.max_set2, rep.max_set3}},
            {"set_size_bounds", {rep.set1_bound, rep.set2_bound, rep.set3_bound}},
            {"store_entries", rep.store_entries},
            {"wall_ms", rep.wall_ms},
            {"details", rep.details}};
}

int cmd_verify(const std::string& gpath, const std::string& rnd, int f, int trials,
               uint64_t seed, bool lazy, bool exhaustive) {
    Graph g = gpath.empty() ? parse_random_spec(rnd, seed) : load_graph_file(gpath);
    OracleIndex ix = OracleIndex::build(std::move(g), f, seed, lazy);
    VerifyReport rep = exhaustive && f == 1 ? verify_exhaustive_single(ix)
                                            : verify_random(ix, trials, seed ^ 0x9e3779b9ull);
    std::cout << report_to_json(rep).dump(2) << "\n";
    return rep.ok() ? kExitOk : kExitMismatch;
}

int cmd_bench(const std::string& gpath, const std::string& rnd, int f, int trials,
              uint64_t seed, bool lazy) {
    Graph g = gpath.empty() ? parse_random_spec(rnd, seed) : load_graph_file(gpath);
    OracleIndex ix = OracleIndex::build(std::move(g), f, seed, lazy);
    Oracle orc = ix.oracle();
    std::mt19937_64 rng(seed ^ 0x51ed2701ull);
    std::cout << "trial,s,t,k,weight,micros,lookups,fi1_calls,recursive_calls,depth,"
                 "jump_max,set1,set2,set3\n";
    for (int i = 0; i < trials; ++i) {
        VertexId s = static_cast<VertexId>(rng() % ix.graph().n());
        VertexId t = static_cast<VertexId>(rng() % ix.graph().n());
        if (s == t) t = (t + 1) % ix.graph().n();
        int k = static_cast<int>(rng() % (ix.f() + 1));
        FaultSet F;
        while (F.size() < k) F.insert(static_cast<EdgeId>(rng() % ix.graph().m()));
        auto t0 = std::chrono::steady_clock::now();
        QueryResult qr = orc.query(s, t, F);
        double us = std::chrono::duration<double, std::micro>(
                        std::chrono::steady_clock::now() - t0).count();
        std::cout << i << "," << s << "," << t << "," << k << ","
                  << (qr.path ? std::to_string(qr.base_weight) : "") << "," << us << ","
                  << qr.stats.maximiser_lookups << "," << qr.stats.fi1_calls << ","
                  << qr.stats.recursive_calls << "," << qr.stats.max_depth << ","
                  << qr.stats.max_jump_len << "," << qr.stats.max_set1 << ","
                  << qr.stats.max_set2 << "," << qr.stats.max_set3 << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fault-tolerant exact distance oracle"};
    app.require_subcommand(1);

    std::string gpath, rnd, out = "oracle.idx", ipath, qpath;
    int f = 1, trials = 100;
    uint64_t seed = 1, budget = 50'000'000;
    bool lazy = false, expand = false, exhaustive = false;

    auto* b = app.add_subcommand("build", "build and serialize an index");
    b->add_option("-g,--graph", gpath)->required();
    b->add_option("-f,--faults", f)->required();
    b->add_option("--seed", seed);
    b->add_flag("--lazy", lazy);
    b->add_option("--budget", budget);
    b->add_option("-o,--out", out);

    auto* q = app.add_subcommand("query", "answer a batch of queries");
    q->add_option("-i,--index", ipath)->required();
    q->add_option("-q,--queries", qpath)->required();
    q->add_flag("--expand", expand);

    auto* v = app.add_subcommand("verify", "cross-check against a brute-force oracle");
    v->add_option("-g,--graph", gpath);
    v->add_option("--random", rnd);
    v->add_option("-f,--faults", f)->required();
    v->add_option("--trials", trials);
    v->add_option("--seed", seed);
    v->add_flag("--lazy", lazy);
    v->add_flag("--exhaustive", exhaustive);

    auto* be = app.add_subcommand("bench", "per-query timings and counters as CSV");
    be->add_option("-g,--graph", gpath);
    be->add_option("--random", rnd);
    be->add_option("-f,--faults", f)->required();
    be->add_option("--trials", trials);
    be->add_option("--seed", seed);
    be->add_flag("--lazy", lazy);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (b->parsed()) return cmd_build(gpath, f, seed, lazy, budget, out);
        if (q->parsed()) return cmd_query(ipath, qpath, expand);
        if (v->parsed()) {
            if (gpath.empty() == rnd.empty())
                throw ParseError("verify needs exactly one of --graph / --random");
            return cmd_verify(gpath, rnd, f, trials, seed, lazy, exhaustive);
        }
        if (be->parsed()) {
            if (gpath.empty() == rnd.empty())
                throw ParseError("bench needs exactly one of --graph / --random");
            return cmd_bench(gpath, rnd, f, trials, seed, lazy);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
