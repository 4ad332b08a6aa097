#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fto/sp.hpp"

namespace fto {

// One piece of a decomposable form: either the unique shortest path a->b,
// or an explicit interleaving edge (a,b).
struct Piece {
    enum Kind : uint8_t { Seg, Link };
    Kind kind;
    VertexId a;
    VertexId b;
    bool operator==(const Piece&) const = default;
};

// A path in k-decomposable form: shortest-path segments interleaved with
// explicit edges.  First and last pieces are segments (possibly degenerate
// (v,v)); no two consecutive explicit edges.  Immutable once built.
class PathForm {
public:
    static PathForm trivial(VertexId v);  // zero-weight (v,v)
    static PathForm tree_path(const DistOracle& o, VertexId s, VertexId t);
    // chain of explicit single edges (brute-force oracle output)
    static PathForm from_vertex_path(const DistOracle& o, const std::vector<VertexId>& vs);
    // greedy re-expression with the fewest shortest-path segments
    static PathForm decompose(const DistOracle& o, const std::vector<VertexId>& vs);
    // rebuild from a previously serialized piece list
    static PathForm restore(const DistOracle& o, std::vector<Piece> pieces);

    VertexId source() const { return source_; }
    VertexId target() const { return target_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    Wide weight() const { return weight_; }
    int seg_count() const;

    bool operator==(const PathForm&) const = default;

private:
    friend PathForm pf_concat(const DistOracle&, const PathForm&, const PathForm&);
    friend PathForm pf_reverse(const PathForm&);
    PathForm() = default;

    VertexId source_ = 0;
    VertexId target_ = 0;
    std::vector<Piece> pieces_;
    Wide weight_ = 0;
};

// |PATH| with the empty-path sentinel mapped to infinity.
inline Wide pf_weight(const std::optional<PathForm>& p) {
    return p ? p->weight() : kInf;
}

// Concatenation with canonical merging of adjacent segments at junctions.
// Declared edges are never absorbed.  Throws on endpoint mismatch.
PathForm pf_concat(const DistOracle& o, const PathForm& a, const PathForm& b);

PathForm pf_reverse(const PathForm& p);

bool pf_contains_edge(const DistOracle& o, const PathForm& p, EdgeId e);
bool pf_intact(const DistOracle& o, const PathForm& p, const FaultSet& F);

// First vertex along p at cumulative perturbed distance >= d; -1 if the
// path is shorter than d.
VertexId pf_first_at_distance(const DistOracle& o, const PathForm& p, Wide d);

// Explicit vertex sequence.  Throws std::logic_error if the expansion is
// not a simple path (signals a bug upstream).
std::vector<VertexId> pf_expand(const DistOracle& o, const PathForm& p);

// First violated invariant, or nullopt when p is a valid form with at most
// `bound` segments.
std::optional<std::string> pf_validate(const DistOracle& o, const PathForm& p, int bound);

// Ground-truth replacement path from a fault-avoiding Dijkstra, as a chain
// of single edges.  nullopt when s,t are disconnected under F.
std::optional<PathForm> brute_replacement_path(const DistOracle& o, VertexId s, VertexId t,
                                               const FaultSet& F);

}  // namespace fto
