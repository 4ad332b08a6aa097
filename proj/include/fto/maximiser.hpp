#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fto/path_form.hpp"

namespace fto {

// Table variants.  D: single fault, two distance thresholds.  D1: up to f
// faults, two distance thresholds.  D2xv: threshold on the x side plus a
// y-clean vertex v.  D2uy: an x-clean vertex u plus a threshold on the y
// side.  D3: clean vertices on both sides.
enum class MaxVariant : uint8_t { D, D1, D2xv, D2uy, D3 };

struct MaxKey {
    MaxVariant variant;
    VertexId x = -1, y = -1;
    Wide d1 = 0, d2 = 0;  // 0 where the variant has no threshold on that side
    VertexId u = -1, v = -1;

    bool operator==(const MaxKey&) const = default;
    bool operator<(const MaxKey& o) const;
    std::string describe() const;
};

// Extremal fault set and its surviving path.  path is absent when fstar
// disconnects x from y (the winning value is infinite).
struct MaxEntry {
    FaultSet fstar;
    std::optional<PathForm> path;
    Wide value = 0;

    bool operator==(const MaxEntry&) const = default;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precomputed (eager) or memoized on demand (lazy) argmax tables.  Both
// backends produce identical entries for identical keys.
class MaximiserStore {
public:
    MaximiserStore(const DistOracle& o, int f, bool lazy);

    // eager cascade construction; no-op for the lazy backend
    void build(uint64_t budget_entries = 50'000'000);

    const MaxEntry& lookup(const MaxKey& k) const;

    int f() const { return f_; }
    bool lazy() const { return lazy_; }
    const DistOracle& oracle() const { return *o_; }

    // clamp a (possibly zero / infinite) distance to a valid threshold value
    Wide quantize(Wide dist) const;
    // all threshold values a key may carry: 0 plus powers of two in [M, 2^levels]
    std::vector<Wide> threshold_values() const;

    bool edge_allowed(const MaxKey& k, EdgeId e) const;
    bool condition_holds(const MaxKey& k, const FaultSet& F) const;
    MaxEntry solve(const MaxKey& k) const;

    size_t entry_count() const;
    size_t entry_count(MaxVariant v) const;
    uint64_t solves() const { return solves_; }
    uint64_t subsets_enumerated() const { return subsets_enumerated_; }
    const std::map<MaxKey, MaxEntry>& entries() const { return entries_; }

    // entry table only; graph and perturbation are serialized by the index
    void save(std::ostream& os) const;
    void load(std::istream& is);

private:
    const MaxEntry& lookup_lazy_(const MaxKey& k) const;
    Wide avoid_dist_(VertexId x, const FaultSet& F, VertexId y) const;

    const DistOracle* o_;
    int f_;
    bool lazy_;
    mutable std::map<MaxKey, MaxEntry> entries_;
    mutable std::mutex mu_;
    mutable uint64_t solves_ = 0;
    mutable uint64_t subsets_enumerated_ = 0;
    // per-source cache of fault-avoiding distance vectors, keyed by fault-set code
    mutable std::vector<std::unordered_map<uint64_t, std::vector<Wide>>> avoid_cache_;
};

void save_path_form(std::ostream& os, const PathForm& p);
PathForm load_path_form(std::istream& is, const DistOracle& o);

}  // namespace fto
