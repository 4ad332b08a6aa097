#include "fto/maximiser.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "fto/bio.hpp"

namespace fto {

namespace {

const char* variant_name(MaxVariant v) {
    switch (v) {
        case MaxVariant::D: return "D";
        case MaxVariant::D1: return "D1";
        case MaxVariant::D2xv: return "D2xv";
        case MaxVariant::D2uy: return "D2uy";
        case MaxVariant::D3: return "D3";
    }
    return "?";
}

}  // namespace

bool MaxKey::operator<(const MaxKey& o) const {
    return std::tie(variant, x, y, d1, d2, u, v) <
           std::tie(o.variant, o.x, o.y, o.d1, o.d2, o.u, o.v);
}

std::string MaxKey::describe() const {
    std::ostringstream ss;
    ss << variant_name(variant) << "(x=" << x << ",y=" << y << ",d1=" << wide_to_string(d1)
       << ",d2=" << wide_to_string(d2) << ",u=" << u << ",v=" << v << ")";
    return ss.str();
}

MaximiserStore::MaximiserStore(const DistOracle& o, int f, bool lazy)
    : o_(&o), f_(f), lazy_(lazy), avoid_cache_(o.n()) {}

Wide MaximiserStore::quantize(Wide dist) const {
    if (dist <= 0) return 0;
    Wide top = Wide(1) << o_->levels();
    if (is_inf(dist) || dist >= top) return top;
    return pow2_floor(dist);
}

std::vector<Wide> MaximiserStore::threshold_values() const {
    std::vector<Wide> ds{0};
    Wide top = Wide(1) << o_->levels();
    for (Wide d = o_->gp().M(); d <= top; d <<= 1) ds.push_back(d);
    return ds;
}

bool MaximiserStore::edge_allowed(const MaxKey& k, EdgeId e) const {
    const Edge& ed = o_->graph().edge(e);
    auto far_enough = [&](VertexId from, Wide d) {
        return o_->dist(from, ed.u) >= d && o_->dist(from, ed.v) >= d;
    };
    // clean-vertex side condition restricted to the single edge e: e off the
    // root->cv path and neither endpoint inside the subtree under cv
    auto keeps_clean = [&](VertexId root, VertexId cv) {
        if (!o_->tree(root).reachable(cv)) return false;
        if (o_->edge_on_path(root, cv, e)) return false;
        const SpTree& T = o_->tree(root);
        if (T.reachable(ed.u) && T.in_subtree(cv, ed.u)) return false;
        if (T.reachable(ed.v) && T.in_subtree(cv, ed.v)) return false;
        return true;
    };
    switch (k.variant) {
        case MaxVariant::D:
        case MaxVariant::D1:
            return far_enough(k.x, k.d1) && far_enough(k.y, k.d2);
        case MaxVariant::D2xv:
            return far_enough(k.x, k.d1) && keeps_clean(k.y, k.v);
        case MaxVariant::D2uy:
            return far_enough(k.y, k.d2) && keeps_clean(k.x, k.u);
        case MaxVariant::D3:
            return keeps_clean(k.x, k.u) && keeps_clean(k.y, k.v);
    }
    return false;
}

bool MaximiserStore::condition_holds(const MaxKey& k, const FaultSet& F) const {
    int cap = k.variant == MaxVariant::D ? 1 : f_;
    if (static_cast<int>(F.ids().size()) > cap) return false;
    bool need_u = k.variant == MaxVariant::D2uy || k.variant == MaxVariant::D3;
    bool need_v = k.variant == MaxVariant::D2xv || k.variant == MaxVariant::D3;
    if (need_u && !o_->tree(k.x).reachable(k.u)) return false;
    if (need_v && !o_->tree(k.y).reachable(k.v)) return false;
    for (EdgeId e : F.ids())
        if (!edge_allowed(k, e)) return false;
    return true;
}

Wide MaximiserStore::avoid_dist_(VertexId x, const FaultSet& F, VertexId y) const {
    auto& cache = avoid_cache_[x];
    auto it = cache.find(F.code());
    if (it == cache.end())
        it = cache.emplace(F.code(), dijkstra_avoiding(o_->gp(), x, F).dist).first;
    return it->second[y];
}

MaxEntry MaximiserStore::solve(const MaxKey& k) const {
    ++solves_;
    int cap = k.variant == MaxVariant::D ? 1 : f_;
    std::vector<EdgeId> allowed;
    bool clean_ok = true;
    if ((k.variant == MaxVariant::D2uy || k.variant == MaxVariant::D3) &&
        !o_->tree(k.x).reachable(k.u))
        clean_ok = false;
    if ((k.variant == MaxVariant::D2xv || k.variant == MaxVariant::D3) &&
        !o_->tree(k.y).reachable(k.v))
        clean_ok = false;
    if (clean_ok)
        for (EdgeId e = 0; e < o_->graph().m(); ++e)
            if (edge_allowed(k, e)) allowed.push_back(e);

    MaxEntry best;
    best.value = o_->dist(k.x, k.y);  // the empty fault set is the baseline

    std::vector<EdgeId> pick;
    auto consider = [&]() {
        ++subsets_enumerated_;
        FaultSet F(pick);
        Wide val = avoid_dist_(k.x, F, k.y);
        if (val > best.value ||
            (val == best.value &&
             std::lexicographical_compare(F.ids().begin(), F.ids().end(),
                                          best.fstar.ids().begin(), best.fstar.ids().end()))) {
            best.value = val;
            best.fstar = F;
        }
    };
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(pick.size()) == cap) return;
        for (size_t i = from; i < allowed.size(); ++i) {
            pick.push_back(allowed[i]);
            consider();
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);

    if (!is_inf(best.value)) {
        if (best.fstar.ids().empty()) {
            best.path = PathForm::tree_path(*o_, k.x, k.y);
        } else {
            auto dj = dijkstra_avoiding(o_->gp(), k.x, best.fstar);
            std::vector<VertexId> vs;
            for (VertexId w = k.y; w != -1; w = dj.parent[w]) vs.push_back(w);
            std::reverse(vs.begin(), vs.end());
            best.path = PathForm::decompose(*o_, vs);
        }
    }
    return best;
}

const MaxEntry& MaximiserStore::lookup(const MaxKey& k) const {
    if (lazy_) return lookup_lazy_(k);
    auto it = entries_.find(k);
    if (it == entries_.end()) throw std::out_of_range("no table entry for key " + k.describe());
    return it->second;
}

const MaxEntry& MaximiserStore::lookup_lazy_(const MaxKey& k) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(k);
    if (it == entries_.end()) it = entries_.emplace(k, solve(k)).first;
    return it->second;
}

void MaximiserStore::build(uint64_t budget_entries) {
    if (lazy_) return;
    const Graph& g = o_->graph();
    auto ds = threshold_values();
    auto check_budget = [&]() {
        if (entries_.size() > budget_entries)
            throw BudgetExceeded("table entry budget exceeded; use the lazy backend");
    };
    auto add = [&](const MaxKey& k) -> const MaxEntry& {
        auto it = entries_.find(k);
        if (it == entries_.end()) {
            it = entries_.emplace(k, solve(k)).first;
            check_budget();
        }
        return it->second;
    };

    std::vector<std::pair<MaxKey, MaxEntry>> level1;
    for (VertexId x = 0; x < g.n(); ++x)
        for (VertexId y = 0; y < g.n(); ++y)
            for (Wide d1 : ds)
                for (Wide d2 : ds) {
                    add({MaxVariant::D, x, y, d1, d2});
                    if (f_ >= 2) {
                        MaxKey k{MaxVariant::D1, x, y, d1, d2};
                        level1.emplace_back(k, add(k));
                    }
                }

    std::vector<std::pair<MaxKey, MaxEntry>> level2;
    for (const auto& [k1, e1] : level1)
        for (VertexId w : e1.fstar.vertices(g)) {
            MaxKey a{MaxVariant::D2xv, k1.x, k1.y, k1.d1, 0, -1, w};
            level2.emplace_back(a, add(a));
            MaxKey b{MaxVariant::D2uy, k1.x, k1.y, 0, k1.d2, w, -1};
            level2.emplace_back(b, add(b));
        }

    for (const auto& [k2, e2] : level2)
        for (VertexId w : e2.fstar.vertices(g)) {
            if (k2.variant == MaxVariant::D2xv)
                add({MaxVariant::D3, k2.x, k2.y, 0, 0, w, k2.v});
            else
                add({MaxVariant::D3, k2.x, k2.y, 0, 0, k2.u, w});
        }
}

size_t MaximiserStore::entry_count() const { return entries_.size(); }

size_t MaximiserStore::entry_count(MaxVariant v) const {
    size_t c = 0;
    for (const auto& [k, e] : entries_)
        if (k.variant == v) ++c;
    return c;
}

void save_path_form(std::ostream& os, const PathForm& p) {
    bio::put_u64(os, p.pieces().size());
    for (const Piece& pc : p.pieces()) {
        bio::put_u64(os, pc.kind);
        bio::put_i32(os, pc.a);
        bio::put_i32(os, pc.b);
    }
}

PathForm load_path_form(std::istream& is, const DistOracle& o) {
    size_t np = bio::get_u64(is);
    std::vector<Piece> pcs(np);
    for (auto& pc : pcs) {
        pc.kind = static_cast<Piece::Kind>(bio::get_u64(is));
        pc.a = bio::get_i32(is);
        pc.b = bio::get_i32(is);
    }
    return PathForm::restore(o, std::move(pcs));
}

void MaximiserStore::save(std::ostream& os) const {
    bio::put_u64(os, entries_.size());
    for (const auto& [k, e] : entries_) {
        bio::put_u64(os, static_cast<uint64_t>(k.variant));
        bio::put_i32(os, k.x);
        bio::put_i32(os, k.y);
        bio::put_wide(os, k.d1);
        bio::put_wide(os, k.d2);
        bio::put_i32(os, k.u);
        bio::put_i32(os, k.v);
        bio::put_u64(os, e.fstar.ids().size());
        for (EdgeId id : e.fstar.ids()) bio::put_i32(os, id);
        bio::put_u64(os, e.path ? 1 : 0);
        if (e.path) save_path_form(os, *e.path);
        bio::put_wide(os, e.value);
    }
}

void MaximiserStore::load(std::istream& is) {
    entries_.clear();
    size_t cnt = bio::get_u64(is);
    for (size_t i = 0; i < cnt; ++i) {
        MaxKey k;
        k.variant = static_cast<MaxVariant>(bio::get_u64(is));
        k.x = bio::get_i32(is);
        k.y = bio::get_i32(is);
        k.d1 = bio::get_wide(is);
        k.d2 = bio::get_wide(is);
        k.u = bio::get_i32(is);
        k.v = bio::get_i32(is);
        MaxEntry e;
        size_t nf = bio::get_u64(is);
        std::vector<EdgeId> ids(nf);
        for (auto& id : ids) id = bio::get_i32(is);
        e.fstar = FaultSet(ids);
        if (bio::get_u64(is)) e.path = load_path_form(is, *o_);
        e.value = bio::get_wide(is);
        entries_.emplace(k, std::move(e));
    }
}

}  // namespace fto
