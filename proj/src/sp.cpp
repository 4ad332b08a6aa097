#include "fto/sp.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace fto {

DijkstraResult dijkstra_avoiding(const PerturbedGraph& gp, VertexId s, const FaultSet& F) {
    const Graph& g = gp.base();
    int n = g.n();
    DijkstraResult r;
    r.dist.assign(n, kInf);
    r.parent.assign(n, -1);
    r.parent_edge.assign(n, -1);
    using Item = std::pair<Wide, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    r.dist[s] = 0;
    pq.push({0, s});
    std::vector<char> done(n, 0);
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (auto [eid, v] : g.adjacent(u)) {
            if (F.contains(eid)) continue;
            Wide nd = du + gp.pweight(eid);
            if (nd == r.dist[v])
                throw UniquenessViolation(
                    "exact tie at vertex " + std::to_string(v) + " from source " +
                    std::to_string(s) + " (seed " + std::to_string(gp.seed()) + ")");
            if (nd < r.dist[v]) {
                r.dist[v] = nd;
                r.parent[v] = u;
                r.parent_edge[v] = eid;
                pq.push({nd, v});
            }
        }
    }
    return r;
}

SpTree::SpTree(const PerturbedGraph& gp, VertexId s, int levels) : root_(s), levels_(levels) {
    int n = gp.base().n();
    auto dj = dijkstra_avoiding(gp, s, FaultSet{});
    dist_ = std::move(dj.dist);
    parent_ = std::move(dj.parent);
    parent_edge_ = std::move(dj.parent_edge);

    std::vector<std::vector<VertexId>> children(n);
    for (VertexId v = 0; v < n; ++v)
        if (v != s && parent_[v] >= 0) children[parent_[v]].push_back(v);
    // children are already in ascending id order: v iterated in order

    tin_.assign(n, -1);
    tout_.assign(n, -1);
    pow2_first_.assign(static_cast<size_t>(n) * (levels_ + 1), -1);

    // iterative DFS keeping the root path on a stack; for every vertex the
    // pow2 row is filled by binary search over the path's prefix distances
    std::vector<VertexId> path;
    std::vector<Wide> path_dist;
    struct Frame { VertexId v; size_t next_child; };
    std::vector<Frame> stack;
    int timer = 0;
    if (reachable(s)) {
        stack.push_back({s, 0});
        path.push_back(s);
        path_dist.push_back(0);
        tin_[s] = timer++;
        fill_row_(s, path, path_dist);
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_child < children[f.v].size()) {
                VertexId c = children[f.v][f.next_child++];
                stack.push_back({c, 0});
                path.push_back(c);
                path_dist.push_back(dist_[c]);
                tin_[c] = timer++;
                fill_row_(c, path, path_dist);
            } else {
                tout_[f.v] = timer - 1;
                path.pop_back();
                path_dist.pop_back();
                stack.pop_back();
            }
        }
    }
}

void SpTree::fill_row_(VertexId t, const std::vector<VertexId>& path,
                       const std::vector<Wide>& path_dist) {
    Wide dt = dist_[t];
    size_t base = static_cast<size_t>(t) * (levels_ + 1);
    Wide thr = 1;
    for (int i = 0; i <= levels_; ++i, thr <<= 1) {
        if (thr > dt) break;  // rest stays -1
        auto it = std::lower_bound(path_dist.begin(), path_dist.end(), thr);
        pow2_first_[base + i] = path[it - path_dist.begin()];
    }
}

std::vector<VertexId> SpTree::path_to(VertexId t) const {
    std::vector<VertexId> p;
    for (VertexId v = t; v != -1; v = parent_[v]) p.push_back(v);
    std::reverse(p.begin(), p.end());
    return p;
}

DistOracle::DistOracle(const PerturbedGraph& gp) : gp_(&gp) {
    int n = gp.base().n();
    Wide bound = static_cast<Wide>(n) * (gp.base().W() + 1) * gp.M();
    levels_ = ceil_log2(bound);
    trees_.reserve(n);
    d_.resize(static_cast<size_t>(n) * n);
    for (VertexId s = 0; s < n; ++s) {
        trees_.emplace_back(gp, s, levels_);
        for (VertexId v = 0; v < n; ++v) d_[static_cast<size_t>(s) * n + v] = trees_[s].dist(v);
    }
}

Wide DistOracle::edge_dist(VertexId x, EdgeId e) const {
    const Edge& ed = gp_->base().edge(e);
    return std::min(dist(x, ed.u), dist(x, ed.v));
}

VertexId DistOracle::first_at_distance(VertexId src, VertexId t, Wide d) const {
    if (d <= 0) return src;
    if (dist(src, t) < d || is_inf(dist(src, t))) return -1;
    VertexId cur = src;
    Wide need = d;
    while (need > 0) {
        int l = floor_log2(need);
        VertexId x = trees_[cur].pow2_first(t, l);
        if (x < 0) return -1;
        Wide step = dist(cur, x);
        if (step >= need) return x;  // x's predecessor is < 2^l <= need
        need -= step;
        cur = x;
    }
    return cur;
}

bool DistOracle::edge_on_path(VertexId s, VertexId t, EdgeId e) const {
    Wide dst = dist(s, t);
    if (is_inf(dst)) return false;
    const Edge& ed = gp_->base().edge(e);
    Wide pw = gp_->pweight(e);
    Wide a1 = dist(s, ed.u), a2 = dist(ed.v, t);
    if (!is_inf(a1) && !is_inf(a2) && a1 + pw + a2 == dst) return true;
    Wide b1 = dist(s, ed.v), b2 = dist(ed.u, t);
    return !is_inf(b1) && !is_inf(b2) && b1 + pw + b2 == dst;
}

bool DistOracle::tree_path_intact(VertexId s, VertexId t, const FaultSet& F) const {
    for (EdgeId e : F.ids())
        if (edge_on_path(s, t, e)) return false;
    return true;
}

bool DistOracle::is_clean(VertexId x, VertexId u, const FaultSet& F) const {
    if (!trees_[x].reachable(u)) return false;
    if (!tree_path_intact(x, u, F)) return false;
    for (VertexId a : F.vertices(gp_->base())) {
        if (!trees_[x].reachable(a)) continue;
        if (trees_[x].in_subtree(u, a)) return false;
    }
    return true;
}

}  // namespace fto
