#pragma once

#include <memory>
#include <string>

#include "fto/oracle.hpp"

namespace fto {

// Owns the whole prebuilt stack: perturbation, distance tables, trees and
// the argmax store.  Serializable to a single versioned binary file.
class OracleIndex {
public:
    static OracleIndex build(Graph g, int f, uint64_t seed, bool lazy,
                             uint64_t budget_entries = 50'000'000);

    void save(const std::string& path) const;
    static OracleIndex load(const std::string& path);

    const Graph& graph() const { return g_; }
    const PerturbedGraph& perturbed() const { return *pg_; }
    const DistOracle& dist() const { return *dist_; }
    const MaximiserStore& store() const { return *store_; }
    MaximiserStore& store() { return *store_; }
    int f() const { return f_; }
    uint64_t seed() const { return pg_->seed(); }
    int reseeds() const { return reseeds_; }

    Oracle oracle() const { return Oracle(*dist_, *store_); }

private:
    OracleIndex() = default;

    Graph g_;
    int f_ = 1;
    bool lazy_ = false;
    int reseeds_ = 0;
    std::unique_ptr<PerturbedGraph> pg_;
    std::unique_ptr<DistOracle> dist_;
    std::unique_ptr<MaximiserStore> store_;
};

}  // namespace fto
