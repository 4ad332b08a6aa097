#pragma once

#include <optional>
#include <vector>

#include "fto/graph.hpp"
#include "fto/perturb.hpp"
#include "fto/wide.hpp"

namespace fto {

struct DijkstraResult {
    std::vector<Wide> dist;        // kInf where unreachable
    std::vector<VertexId> parent;  // -1 at source / unreachable
    std::vector<EdgeId> parent_edge;
};

// Exact perturbed distances in the graph with F deleted.  Throws
// UniquenessViolation on an exact relaxation tie.
DijkstraResult dijkstra_avoiding(const PerturbedGraph& gp, VertexId s, const FaultSet& F);

// Shortest path tree rooted at s with Euler-tour intervals and the
// power-of-two first-vertex tables used for O(log) path stepping.
class SpTree {
public:
    SpTree() = default;
    SpTree(const PerturbedGraph& gp, VertexId s, int levels);

    VertexId root() const { return root_; }
    bool reachable(VertexId v) const { return dist_[v] < kInf; }
    Wide dist(VertexId v) const { return dist_[v]; }
    VertexId parent(VertexId v) const { return parent_[v]; }
    EdgeId parent_edge(VertexId v) const { return parent_edge_[v]; }
    int levels() const { return levels_; }

    // u in T_s(x)?
    bool in_subtree(VertexId x, VertexId u) const {
        return tin_[x] <= tin_[u] && tin_[u] <= tout_[x];
    }

    // first vertex on the root->t path at distance >= 2^i, or -1
    VertexId pow2_first(VertexId t, int i) const {
        if (i > levels_) return -1;
        return pow2_first_[static_cast<size_t>(t) * (levels_ + 1) + i];
    }

    // explicit root->t path (verification helper)
    std::vector<VertexId> path_to(VertexId t) const;

private:
    void fill_row_(VertexId t, const std::vector<VertexId>& path,
                   const std::vector<Wide>& path_dist);

    VertexId root_ = 0;
    int levels_ = 0;
    std::vector<VertexId> parent_;
    std::vector<EdgeId> parent_edge_;
    std::vector<Wide> dist_;
    std::vector<int> tin_, tout_;
    std::vector<VertexId> pow2_first_;
};

// All-pairs perturbed distances plus one SpTree per source.
class DistOracle {
public:
    explicit DistOracle(const PerturbedGraph& gp);

    const PerturbedGraph& gp() const { return *gp_; }
    const Graph& graph() const { return gp_->base(); }
    int n() const { return gp_->base().n(); }
    int levels() const { return levels_; }  // ceil(log2(n*W*M))

    Wide dist(VertexId u, VertexId v) const {
        return d_[static_cast<size_t>(u) * n() + v];
    }
    // |xe|: min over the endpoints of e
    Wide edge_dist(VertexId x, EdgeId e) const;

    const SpTree& tree(VertexId s) const { return trees_[s]; }

    // first vertex on the shortest src->t path at distance >= d from src;
    // -1 if the path is shorter than d
    VertexId first_at_distance(VertexId src, VertexId t, Wide d) const;

    // e on the (unique) shortest s->t path?  Distance-equality test.
    bool edge_on_path(VertexId s, VertexId t, EdgeId e) const;

    // no edge of F on the shortest s->t path
    bool tree_path_intact(VertexId s, VertexId t, const FaultSet& F) const;

    // u is x-clean from F: xu intact and T_x(u) disjoint from V(F)
    bool is_clean(VertexId x, VertexId u, const FaultSet& F) const;

private:
    const PerturbedGraph* gp_;
    int levels_ = 0;
    std::vector<Wide> d_;
    std::vector<SpTree> trees_;
};

}  // namespace fto
