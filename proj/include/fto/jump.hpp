#pragma once

#include <vector>

#include "fto/path_form.hpp"

namespace fto {

// Vertices hit when hopping along a path: from each vertex we advance to the
// first vertex at distance >= max{M, largest power of two <= distance to the
// nearest fault endpoint}.  Sequence length stays logarithmic in the total
// path weight.
struct JumpSequence {
    std::vector<VertexId> verts;
    bool reversed = false;  // built over the target->source orientation
};

// Hop sequence over p (or its reversal) relative to the fault set F.
JumpSequence find_jump(const DistOracle& o, const PathForm& p, const FaultSet& F,
                       bool reversed = false);

// Length ceilings checked by the test suites.
inline int jump_bound_single(const DistOracle& o) { return 8 * o.levels() + 2; }
inline int jump_bound(const DistOracle& o, int f) { return 16 * f * o.levels() + 2; }

}  // namespace fto
