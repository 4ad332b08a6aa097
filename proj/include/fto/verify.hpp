#pragma once

#include <string>
#include <vector>

#include "fto/index.hpp"

namespace fto {

// Cross-check of the query layer against a fault-avoiding Dijkstra, plus
// the bound counters the test suites gate on.
struct VerifyReport {
    int trials = 0;
    int mismatches = 0;
    int max_jump_len = 0;
    int jump_len_bound = 0;
    int max_set1 = 0, max_set2 = 0, max_set3 = 0;
    int set1_bound = 0, set2_bound = 0, set3_bound = 0;
    size_t store_entries = 0;
    double wall_ms = 0;
    std::vector<std::string> details;  // one reproduction line per mismatch

    bool ok() const {
        return mismatches == 0 && max_jump_len <= jump_len_bound && max_set1 <= set1_bound &&
               max_set2 <= set2_bound && max_set3 <= set3_bound;
    }
};

// Compare one query against ground truth; appends to the report.
void verify_one(const OracleIndex& ix, VertexId s, VertexId t, const FaultSet& F,
                VerifyReport& rep);

// All (s, t, e) triples (single-fault exhaustive mode).
VerifyReport verify_exhaustive_single(const OracleIndex& ix);

// Random (s, t, F) trials with |F| in [1, f]; deterministic per seed.
VerifyReport verify_random(const OracleIndex& ix, int trials, uint64_t seed);

}  // namespace fto
