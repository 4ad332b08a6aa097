#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fto {

// 128-bit weight type. Perturbed weights are w*M + rho, so even modest
// graphs overflow 64 bits once W and M grow; 128 bits covers n*W*M at any
// scale we run at.
using Wide = __int128;

// Distinguished "unreachable" value, ordered above every finite weight.
inline constexpr Wide kInf = (static_cast<Wide>(INT64_MAX) << 64);

inline bool is_inf(Wide w) { return w >= kInf; }

// Saturating addition: inf absorbs, finite sums are overflow-checked.
inline Wide add_w(Wide a, Wide b) {
    if (is_inf(a) || is_inf(b)) return kInf;
    Wide s = a + b;
    if (s < a || s >= kInf) throw std::overflow_error("wide weight overflow");
    return s;
}

// Largest power of two <= w; defined as 0 for w <= 0.
inline Wide pow2_floor(Wide w) {
    if (w <= 0) return 0;
    Wide p = 1;
    while ((p << 1) <= w) p <<= 1;
    return p;
}

// Smallest e with 2^e >= w (w >= 1).
inline int ceil_log2(Wide w) {
    int e = 0;
    Wide p = 1;
    while (p < w) { p <<= 1; ++e; }
    return e;
}

inline int floor_log2(Wide w) {
    int e = -1;
    while (w > 0) { w >>= 1; ++e; }
    return e;
}

inline std::string wide_to_string(Wide w) {
    if (is_inf(w)) return "inf";
    if (w == 0) return "0";
    bool neg = w < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-w) : static_cast<unsigned __int128>(w);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

}  // namespace fto
