#include "fto/path_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace fto {

namespace {

Wide piece_weight(const DistOracle& o, const Piece& p) {
    if (p.kind == Piece::Seg) return o.dist(p.a, p.b);
    EdgeId e = o.graph().find_edge(p.a, p.b);
    if (e < 0) throw std::logic_error("link piece is not a graph edge");
    return o.gp().pweight(e);
}

// merge adjacent segments whose weights add exactly; runs to fixpoint
void canonicalize(const DistOracle& o, std::vector<Piece>& pieces) {
    std::vector<Piece> out;
    for (const Piece& p : pieces) {
        out.push_back(p);
        while (out.size() >= 2) {
            Piece& y = out[out.size() - 1];
            Piece& x = out[out.size() - 2];
            if (x.kind != Piece::Seg || y.kind != Piece::Seg) break;
            if (o.dist(x.a, x.b) + o.dist(y.a, y.b) != o.dist(x.a, y.b)) break;
            x.b = y.b;
            out.pop_back();
        }
    }
    pieces = std::move(out);
}

}  // namespace

PathForm PathForm::trivial(VertexId v) {
    PathForm p;
    p.source_ = p.target_ = v;
    p.pieces_ = {{Piece::Seg, v, v}};
    p.weight_ = 0;
    return p;
}

PathForm PathForm::tree_path(const DistOracle& o, VertexId s, VertexId t) {
    if (is_inf(o.dist(s, t))) throw std::invalid_argument("tree_path: unreachable target");
    PathForm p;
    p.source_ = s;
    p.target_ = t;
    p.pieces_ = {{Piece::Seg, s, t}};
    p.weight_ = o.dist(s, t);
    return p;
}

PathForm PathForm::from_vertex_path(const DistOracle& o, const std::vector<VertexId>& vs) {
    if (vs.empty()) throw std::invalid_argument("empty vertex path");
    PathForm p;
    p.source_ = vs.front();
    p.target_ = vs.back();
    p.weight_ = 0;
    p.pieces_.push_back({Piece::Seg, vs[0], vs[0]});
    for (size_t i = 1; i < vs.size(); ++i) {
        EdgeId e = o.graph().find_edge(vs[i - 1], vs[i]);
        if (e < 0) throw std::invalid_argument("vertex path uses a missing edge");
        p.pieces_.push_back({Piece::Link, vs[i - 1], vs[i]});
        p.pieces_.push_back({Piece::Seg, vs[i], vs[i]});
        p.weight_ = add_w(p.weight_, o.gp().pweight(e));
    }
    return p;
}

PathForm PathForm::decompose(const DistOracle& o, const std::vector<VertexId>& vs) {
    if (vs.empty()) throw std::invalid_argument("empty vertex path");
    // prefix sums of edge weights along the walk
    std::vector<Wide> pre(vs.size(), 0);
    for (size_t i = 1; i < vs.size(); ++i) {
        EdgeId e = o.graph().find_edge(vs[i - 1], vs[i]);
        if (e < 0) throw std::invalid_argument("vertex path uses a missing edge");
        pre[i] = pre[i - 1] + o.gp().pweight(e);
    }
    PathForm p;
    p.source_ = vs.front();
    p.target_ = vs.back();
    p.weight_ = pre.back();
    size_t i = 0;
    while (true) {
        // a subpath that weighs exactly its endpoints' distance IS the
        // unique shortest path, so greedy extension is safe
        size_t j = i;
        while (j + 1 < vs.size() && pre[j + 1] - pre[i] == o.dist(vs[i], vs[j + 1])) ++j;
        p.pieces_.push_back({Piece::Seg, vs[i], vs[j]});
        if (j + 1 == vs.size()) break;
        p.pieces_.push_back({Piece::Link, vs[j], vs[j + 1]});
        i = j + 1;
        if (i + 1 == vs.size()) {
            p.pieces_.push_back({Piece::Seg, vs[i], vs[i]});
            break;
        }
    }
    canonicalize(o, p.pieces_);
    return p;
}

PathForm PathForm::restore(const DistOracle& o, std::vector<Piece> pieces) {
    if (pieces.empty()) throw std::invalid_argument("empty piece list");
    PathForm p;
    p.source_ = pieces.front().a;
    p.target_ = pieces.back().b;
    p.weight_ = 0;
    for (const Piece& pc : pieces) p.weight_ = add_w(p.weight_, piece_weight(o, pc));
    p.pieces_ = std::move(pieces);
    return p;
}

int PathForm::seg_count() const {
    int k = 0;
    for (const Piece& p : pieces_)
        if (p.kind == Piece::Seg) ++k;
    return k;
}

PathForm pf_concat(const DistOracle& o, const PathForm& a, const PathForm& b) {
    if (a.target() != b.source()) throw std::invalid_argument("pf_concat: endpoint mismatch");
    PathForm r;
    r.source_ = a.source();
    r.target_ = b.target();
    r.pieces_ = a.pieces();
    r.pieces_.insert(r.pieces_.end(), b.pieces().begin(), b.pieces().end());
    canonicalize(o, r.pieces_);
    r.weight_ = add_w(a.weight(), b.weight());
    return r;
}

PathForm pf_reverse(const PathForm& p) {
    PathForm r;
    r.source_ = p.target();
    r.target_ = p.source();
    r.weight_ = p.weight();
    r.pieces_.reserve(p.pieces().size());
    for (auto it = p.pieces().rbegin(); it != p.pieces().rend(); ++it)
        r.pieces_.push_back({it->kind, it->b, it->a});
    return r;
}

bool pf_contains_edge(const DistOracle& o, const PathForm& p, EdgeId e) {
    const Edge& ed = o.graph().edge(e);
    for (const Piece& pc : p.pieces()) {
        if (pc.kind == Piece::Link) {
            VertexId a = std::min(pc.a, pc.b), b = std::max(pc.a, pc.b);
            if (a == ed.u && b == ed.v) return true;
        } else if (pc.a != pc.b) {
            if (o.edge_on_path(pc.a, pc.b, e)) return true;
        }
    }
    return false;
}

bool pf_intact(const DistOracle& o, const PathForm& p, const FaultSet& F) {
    for (EdgeId e : F.ids())
        if (pf_contains_edge(o, p, e)) return false;
    return true;
}

VertexId pf_first_at_distance(const DistOracle& o, const PathForm& p, Wide d) {
    if (d <= 0) return p.source();
    Wide cum = 0;
    for (const Piece& pc : p.pieces()) {
        Wide w = piece_weight(o, pc);
        if (cum + w >= d) {
            if (pc.kind == Piece::Link) return pc.b;
            return o.first_at_distance(pc.a, pc.b, d - cum);
        }
        cum += w;
    }
    return -1;
}

std::vector<VertexId> pf_expand(const DistOracle& o, const PathForm& p) {
    std::vector<VertexId> vs{p.source()};
    for (const Piece& pc : p.pieces()) {
        if (pc.kind == Piece::Link) {
            vs.push_back(pc.b);
        } else if (pc.a != pc.b) {
            auto seg = o.tree(pc.a).path_to(pc.b);
            vs.insert(vs.end(), seg.begin() + 1, seg.end());
        }
    }
    std::unordered_set<VertexId> seen(vs.begin(), vs.end());
    if (seen.size() != vs.size()) throw std::logic_error("path expansion is not simple");
    return vs;
}

std::optional<std::string> pf_validate(const DistOracle& o, const PathForm& p, int bound) {
    const auto& pcs = p.pieces();
    if (pcs.empty()) return "no pieces";
    if (pcs.front().kind != Piece::Seg || pcs.back().kind != Piece::Seg)
        return "form must start and end with a segment";
    if (pcs.front().a != p.source()) return "source mismatch";
    if (pcs.back().b != p.target()) return "target mismatch";
    Wide total = 0;
    for (size_t i = 0; i < pcs.size(); ++i) {
        const Piece& pc = pcs[i];
        if (i > 0) {
            if (pcs[i - 1].b != pc.a) return "chain break between pieces";
            if (pcs[i - 1].kind == Piece::Link && pc.kind == Piece::Link)
                return "two consecutive interleaving edges";
        }
        if (pc.kind == Piece::Seg) {
            if (is_inf(o.dist(pc.a, pc.b))) return "segment endpoints disconnected";
            total = add_w(total, o.dist(pc.a, pc.b));
        } else {
            EdgeId e = o.graph().find_edge(pc.a, pc.b);
            if (e < 0) return "interleaving edge not in graph";
            total = add_w(total, o.gp().pweight(e));
        }
    }
    if (total != p.weight()) return "cached weight mismatch";
    if (p.seg_count() > bound)
        return "segment count " + std::to_string(p.seg_count()) + " exceeds bound " +
               std::to_string(bound);
    try {
        pf_expand(o, p);
    } catch (const std::logic_error& e) {
        return e.what();
    }
    return std::nullopt;
}

std::optional<PathForm> brute_replacement_path(const DistOracle& o, VertexId s, VertexId t,
                                               const FaultSet& F) {
    auto dj = dijkstra_avoiding(o.gp(), s, F);
    if (is_inf(dj.dist[t])) return std::nullopt;
    std::vector<VertexId> vs;
    for (VertexId v = t; v != -1; v = dj.parent[v]) vs.push_back(v);
    std::reverse(vs.begin(), vs.end());
    return PathForm::from_vertex_path(o, vs);
}

}  // namespace fto
