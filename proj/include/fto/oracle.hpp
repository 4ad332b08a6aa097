#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "fto/jump.hpp"
#include "fto/maximiser.hpp"
#include "fto/path_form.hpp"

namespace fto {

struct QueryStats {
    uint64_t maximiser_lookups = 0;
    uint64_t fi1_calls = 0;
    uint64_t recursive_calls = 0;
    int max_depth = 0;       // recursion levels actually used
    int max_jump_len = 0;    // longest hop sequence built
    int max_set1 = 0;        // largest candidate set from the three stages
    int max_set2 = 0;
    int max_set3 = 0;
};

struct QueryResult {
    std::optional<PathForm> path;
    Wide pweight = kInf;       // perturbed weight, kInf when disconnected
    int64_t base_weight = -1;  // original weight, -1 when disconnected
    QueryStats stats;
};

// Replacement-path queries against a prebuilt table store.  Exact: the
// returned path is the unique shortest s-t path avoiding F, in a form with
// at most |F|+1 shortest-path segments.
class Oracle {
public:
    Oracle(const DistOracle& o, const MaximiserStore& store);

    QueryResult query(VertexId s, VertexId t, const FaultSet& F) const;

    bool is_intermediate(VertexId x, VertexId s, VertexId t, const FaultSet& F) const;

    const DistOracle& dist_oracle() const { return *o_; }
    const MaximiserStore& store() const { return *store_; }

private:
    struct Ctx;
    using FindResult = std::pair<std::optional<PathForm>, std::vector<VertexId>>;

    std::optional<PathForm> query_rec(VertexId s, VertexId t, const FaultSet& F, int r,
                                      Ctx& ctx) const;
    std::optional<PathForm> query_single(VertexId s, VertexId t, EdgeId e, Ctx& ctx) const;
    std::optional<PathForm> query_multi(VertexId s, VertexId t, const FaultSet& F, int r,
                                        Ctx& ctx) const;
    // P_1..P_k, or an early exact answer when some P_i dodges every fault
    std::variant<std::optional<PathForm>, std::vector<PathForm>> find_paths(
        VertexId s, VertexId t, const FaultSet& F, Ctx& ctx) const;

    FindResult find_intermediate_1(VertexId x, VertexId y, const FaultSet& F, Ctx& ctx) const;
    FindResult find_intermediate_2(VertexId x, VertexId y, VertexId u, VertexId v,
                                   const FaultSet& F, Ctx& ctx) const;
    FindResult find_intermediate_3(VertexId x, VertexId y, VertexId u, VertexId v,
                                   const FaultSet& F, Ctx& ctx) const;

    Wide nearest_fault_threshold_(VertexId x, const FaultSet& F) const;

    const DistOracle* o_;
    const MaximiserStore* store_;
};

}  // namespace fto
