#include "fto/jump.hpp"

#include <algorithm>
#include <optional>

namespace fto {

namespace {

struct Hit {
    VertexId v;
    Wide pre;  // prefix distance of v along the path
};

// first vertex at prefix distance >= d, together with that prefix distance
std::optional<Hit> first_at(const DistOracle& o, const PathForm& p, Wide d) {
    if (d <= 0) return Hit{p.source(), 0};
    Wide cum = 0;
    for (const Piece& pc : p.pieces()) {
        Wide w;
        if (pc.kind == Piece::Seg) {
            w = o.dist(pc.a, pc.b);
        } else {
            w = o.gp().pweight(o.graph().find_edge(pc.a, pc.b));
        }
        if (cum + w >= d) {
            if (pc.kind == Piece::Link) return Hit{pc.b, cum + w};
            VertexId v = o.first_at_distance(pc.a, pc.b, d - cum);
            return Hit{v, cum + o.dist(pc.a, v)};
        }
        cum += w;
    }
    return std::nullopt;
}

}  // namespace

JumpSequence find_jump(const DistOracle& o, const PathForm& p, const FaultSet& F,
                       bool reversed) {
    PathForm dir = reversed ? pf_reverse(p) : p;
    JumpSequence js;
    js.reversed = reversed;
    auto fv = F.vertices(o.graph());
    VertexId x = dir.source();
    Wide cum = 0;
    while (true) {
        js.verts.push_back(x);
        // largest power of two <= distance from x to its nearest fault endpoint
        Wide near2 = kInf;
        for (VertexId a : fv) {
            Wide d = o.dist(x, a);
            if (!is_inf(d)) near2 = std::min(near2, pow2_floor(d));
        }
        if (is_inf(near2)) near2 = 0;
        Wide thr = std::max(o.gp().M(), near2);
        auto hit = first_at(o, dir, cum + thr);
        if (!hit) break;
        x = hit->v;
        cum = hit->pre;
    }
    return js;
}

}  // namespace fto
