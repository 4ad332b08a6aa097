#include "fto/oracle.hpp"

#include <algorithm>
#include <set>

namespace fto {

struct Oracle::Ctx {
    QueryStats stats;
    int entry_r = 0;
    // sub-answers keyed by (s, t, fault-set code, r)
    std::map<std::tuple<VertexId, VertexId, uint64_t, int>, std::optional<PathForm>> memo;
};

namespace {

// argmin by perturbed weight; equal weights prefer the form with fewer segments
void take_min(std::optional<PathForm>& best, const std::optional<PathForm>& cand) {
    if (!cand) return;
    if (!best || cand->weight() < best->weight() ||
        (cand->weight() == best->weight() && cand->seg_count() < best->seg_count()))
        best = cand;
}

}  // namespace

Oracle::Oracle(const DistOracle& o, const MaximiserStore& store) : o_(&o), store_(&store) {}

bool Oracle::is_intermediate(VertexId x, VertexId s, VertexId t, const FaultSet& F) const {
    return !o_->tree_path_intact(s, x, F) && !o_->tree_path_intact(x, t, F);
}

Wide Oracle::nearest_fault_threshold_(VertexId x, const FaultSet& F) const {
    Wide best = kInf;
    for (VertexId a : F.vertices(o_->graph())) best = std::min(best, o_->dist(x, a));
    return store_->quantize(best);
}

QueryResult Oracle::query(VertexId s, VertexId t, const FaultSet& F) const {
    Ctx ctx;
    ctx.entry_r = F.size() + 1;
    QueryResult res;
    res.path = query_rec(s, t, F, F.size() + 1, ctx);
    res.stats = ctx.stats;
    if (res.path) {
        res.pweight = res.path->weight();
        res.base_weight = o_->gp().base_weight(res.pweight);
    }
    return res;
}

std::optional<PathForm> Oracle::query_rec(VertexId s, VertexId t, const FaultSet& F, int r,
                                          Ctx& ctx) const {
    if (r <= 0) return std::nullopt;
    ctx.stats.max_depth = std::max(ctx.stats.max_depth, ctx.entry_r - r + 1);
    auto key = std::make_tuple(s, t, F.code(), r);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;

    std::optional<PathForm> out;
    if (s == t) {
        out = PathForm::trivial(s);
    } else if (F.empty()) {
        if (o_->tree(s).reachable(t)) out = PathForm::tree_path(*o_, s, t);
    } else if (F.size() == 1) {
        out = query_single(s, t, F.ids()[0], ctx);
    } else {
        out = query_multi(s, t, F, r, ctx);
    }
    ctx.memo.emplace(key, out);
    return out;
}

std::optional<PathForm> Oracle::query_single(VertexId s, VertexId t, EdgeId e, Ctx& ctx) const {
    FaultSet F({e});
    if (o_->tree(s).reachable(t) && !o_->edge_on_path(s, t, e))
        return PathForm::tree_path(*o_, s, t);
    if (!o_->tree(s).reachable(t)) return std::nullopt;

    PathForm st = PathForm::tree_path(*o_, s, t);
    JumpSequence jf = find_jump(*o_, st, F, false);
    JumpSequence jr = find_jump(*o_, st, F, true);
    ctx.stats.max_jump_len = std::max<int>(
        ctx.stats.max_jump_len,
        std::max(jf.verts.size(), jr.verts.size()));

    // orient the fault edge: u is its endpoint nearer s along st
    const Edge& ed = o_->graph().edge(e);
    VertexId eu = ed.u, ev = ed.v;
    if (o_->dist(s, ev) < o_->dist(s, eu)) std::swap(eu, ev);

    std::optional<PathForm> best;
    for (VertexId x : jf.verts)
        for (VertexId y : jr.verts) {
            MaxKey k{MaxVariant::D, x, y, store_->quantize(o_->dist(x, eu)),
                     store_->quantize(o_->dist(y, ev))};
            ++ctx.stats.maximiser_lookups;
            const MaxEntry& ent = store_->lookup(k);
            if (!ent.path) continue;
            if (!o_->tree_path_intact(s, x, F) || !o_->tree_path_intact(y, t, F)) continue;
            PathForm cand = pf_concat(
                *o_, pf_concat(*o_, PathForm::tree_path(*o_, s, x), *ent.path),
                PathForm::tree_path(*o_, y, t));
            if (pf_contains_edge(*o_, cand, e)) continue;
            take_min(best, cand);
        }
    return best;
}

std::variant<std::optional<PathForm>, std::vector<PathForm>> Oracle::find_paths(
    VertexId s, VertexId t, const FaultSet& F, Ctx& ctx) const {
    FaultSet Fp;  // faults discovered so far
    std::vector<PathForm> paths;
    int f = F.size();
    for (int i = 1; i <= f; ++i) {
        auto Pi = query_rec(s, t, Fp, Fp.size() + 1, ctx);
        if (!Pi) return std::optional<PathForm>{};  // already disconnected
        bool found = false;
        for (EdgeId e : F.ids()) {
            if (Fp.contains(e)) continue;
            const Edge& ed = o_->graph().edge(e);
            Wide we = o_->gp().pweight(e);
            // e on P_i iff some orientation satisfies the length identity
            bool on = false;
            for (auto [p, q] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
                auto R1 = query_rec(s, p, Fp, Fp.size() + 1, ctx);
                auto R2 = query_rec(q, t, Fp, Fp.size() + 1, ctx);
                if (add_w(add_w(pf_weight(R1), we), pf_weight(R2)) == Pi->weight()) {
                    on = true;
                    break;
                }
            }
            if (on) {
                Fp.insert(e);
                found = true;
                break;
            }
        }
        if (!found) return std::optional<PathForm>{*Pi};  // P_i dodges all of F
        paths.push_back(*Pi);
    }
    return paths;
}

std::optional<PathForm> Oracle::query_multi(VertexId s, VertexId t, const FaultSet& F, int r,
                                            Ctx& ctx) const {
    auto fp = find_paths(s, t, F, ctx);
    if (std::holds_alternative<std::optional<PathForm>>(fp))
        return std::get<std::optional<PathForm>>(fp);
    auto& paths = std::get<std::vector<PathForm>>(fp);

    std::vector<JumpSequence> fwd, rev;
    for (const PathForm& p : paths) {
        fwd.push_back(find_jump(*o_, p, F, false));
        rev.push_back(find_jump(*o_, p, F, true));
        ctx.stats.max_jump_len = std::max<int>(
            ctx.stats.max_jump_len,
            std::max(fwd.back().verts.size(), rev.back().verts.size()));
    }

    std::optional<PathForm> best;
    std::set<VertexId> intermediates;
    // memoize the stage-1 search per (x, y) within this call
    std::map<std::pair<VertexId, VertexId>, FindResult> fi_memo;
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = 0; j < paths.size(); ++j)
            for (VertexId x : fwd[i].verts)
                for (VertexId y : rev[j].verts) {
                    if (is_intermediate(x, s, t, F)) {
                        intermediates.insert(x);
                        continue;
                    }
                    if (is_intermediate(y, s, t, F)) {
                        intermediates.insert(y);
                        continue;
                    }
                    auto mit = fi_memo.find({x, y});
                    if (mit == fi_memo.end())
                        mit = fi_memo.emplace(std::pair{x, y},
                                              find_intermediate_1(x, y, F, ctx)).first;
                    const auto& [P, I] = mit->second;
                    if (P && o_->tree_path_intact(s, x, F) && o_->tree_path_intact(y, t, F)) {
                        PathForm cand = pf_concat(
                            *o_, pf_concat(*o_, PathForm::tree_path(*o_, s, x), *P),
                            PathForm::tree_path(*o_, y, t));
                        if (pf_intact(*o_, cand, F)) take_min(best, cand);
                    }
                    intermediates.insert(I.begin(), I.end());
                }

    for (VertexId u : intermediates) {
        ctx.stats.recursive_calls += 2;
        auto L = query_rec(s, u, F, r - 1, ctx);
        if (!L) continue;
        auto R = query_rec(u, t, F, r - 1, ctx);
        if (!R) continue;
        PathForm cand = pf_concat(*o_, *L, *R);
        if (pf_intact(*o_, cand, F)) take_min(best, cand);
    }
    return best;
}

Oracle::FindResult Oracle::find_intermediate_1(VertexId x, VertexId y, const FaultSet& F,
                                               Ctx& ctx) const {
    ++ctx.stats.fi1_calls;
    Wide d1 = nearest_fault_threshold_(x, F);
    Wide d2 = nearest_fault_threshold_(y, F);
    MaxKey k{MaxVariant::D1, x, y, d1, d2};
    ++ctx.stats.maximiser_lookups;
    const MaxEntry& ent = store_->lookup(k);

    std::optional<PathForm> path;
    if (ent.path && pf_intact(*o_, *ent.path, F)) path = ent.path;
    std::vector<VertexId> inter;
    for (VertexId u : ent.fstar.vertices(o_->graph())) {
        if (o_->is_clean(x, u, F)) {
            auto [P1, I1] = find_intermediate_2(x, y, u, -1, F, ctx);
            take_min(path, P1);
            inter.insert(inter.end(), I1.begin(), I1.end());
        }
        if (o_->is_clean(y, u, F)) {
            auto [P2, I2] = find_intermediate_2(x, y, -1, u, F, ctx);
            take_min(path, P2);
            inter.insert(inter.end(), I2.begin(), I2.end());
        }
        if (is_intermediate(u, x, y, F)) inter.push_back(u);
    }
    std::sort(inter.begin(), inter.end());
    inter.erase(std::unique(inter.begin(), inter.end()), inter.end());
    int bound = 8 * store_->f() * store_->f() * store_->f();
    if (static_cast<int>(inter.size()) > bound)
        throw std::logic_error("stage-1 candidate set exceeds its bound");
    ctx.stats.max_set1 = std::max<int>(ctx.stats.max_set1, inter.size());
    return {path, inter};
}

Oracle::FindResult Oracle::find_intermediate_2(VertexId x, VertexId y, VertexId u, VertexId v,
                                               const FaultSet& F, Ctx& ctx) const {
    MaxKey k;
    if (u >= 0) {  // known x-clean vertex, threshold on the y side
        k = MaxKey{MaxVariant::D2uy, x, y, 0, nearest_fault_threshold_(y, F), u, -1};
    } else {  // known y-clean vertex, threshold on the x side
        k = MaxKey{MaxVariant::D2xv, x, y, nearest_fault_threshold_(x, F), 0, -1, v};
    }
    ++ctx.stats.maximiser_lookups;
    const MaxEntry& ent = store_->lookup(k);

    std::optional<PathForm> path;
    if (ent.path && pf_intact(*o_, *ent.path, F)) path = ent.path;
    std::vector<VertexId> inter;
    for (VertexId w : ent.fstar.vertices(o_->graph())) {
        if (u >= 0 && o_->is_clean(y, w, F)) {
            auto [P, I] = find_intermediate_3(x, y, u, w, F, ctx);
            take_min(path, P);
            inter.insert(inter.end(), I.begin(), I.end());
        }
        if (u < 0 && o_->is_clean(x, w, F)) {
            auto [P, I] = find_intermediate_3(x, y, w, v, F, ctx);
            take_min(path, P);
            inter.insert(inter.end(), I.begin(), I.end());
        }
        if (is_intermediate(w, x, y, F)) inter.push_back(w);
    }
    std::sort(inter.begin(), inter.end());
    inter.erase(std::unique(inter.begin(), inter.end()), inter.end());
    int bound = 4 * store_->f() * store_->f();
    if (static_cast<int>(inter.size()) > bound)
        throw std::logic_error("stage-2 candidate set exceeds its bound");
    ctx.stats.max_set2 = std::max<int>(ctx.stats.max_set2, inter.size());
    return {path, inter};
}

Oracle::FindResult Oracle::find_intermediate_3(VertexId x, VertexId y, VertexId u, VertexId v,
                                               const FaultSet& F, Ctx& ctx) const {
    MaxKey k{MaxVariant::D3, x, y, 0, 0, u, v};
    ++ctx.stats.maximiser_lookups;
    const MaxEntry& ent = store_->lookup(k);

    std::optional<PathForm> path;
    if (ent.path && pf_intact(*o_, *ent.path, F)) path = ent.path;
    std::vector<VertexId> inter;
    for (VertexId z : ent.fstar.vertices(o_->graph()))
        if (is_intermediate(z, x, y, F)) inter.push_back(z);
    std::sort(inter.begin(), inter.end());
    inter.erase(std::unique(inter.begin(), inter.end()), inter.end());
    int bound = 2 * store_->f();
    if (static_cast<int>(inter.size()) > bound)
        throw std::logic_error("stage-3 candidate set exceeds its bound");
    ctx.stats.max_set3 = std::max<int>(ctx.stats.max_set3, inter.size());
    return {path, inter};
}

}  // namespace fto
