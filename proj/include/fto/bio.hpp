#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fto/wide.hpp"

namespace fto::bio {

inline void put_u64(std::ostream& os, uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

inline uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw std::runtime_error("truncated index file");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
}

inline void put_i32(std::ostream& os, int32_t v) { put_u64(os, static_cast<uint64_t>(static_cast<int64_t>(v))); }
inline int32_t get_i32(std::istream& is) { return static_cast<int32_t>(static_cast<int64_t>(get_u64(is))); }

inline void put_wide(std::ostream& os, Wide v) {
    put_u64(os, static_cast<uint64_t>(static_cast<unsigned __int128>(v)));
    put_u64(os, static_cast<uint64_t>(static_cast<unsigned __int128>(v) >> 64));
}

inline Wide get_wide(std::istream& is) {
    uint64_t lo = get_u64(is), hi = get_u64(is);
    return static_cast<Wide>((static_cast<unsigned __int128>(hi) << 64) | lo);
}

}  // namespace fto::bio
