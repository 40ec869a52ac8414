#pragma once

#include <array>

#include "subdual/bit_matrix.hpp"

namespace subdual::detail {

// Up- and down-sets of every 6-bit element code, packed as 64-bit element sets.
// Restrict to an n-atom algebra by masking with low_mask(1 << n).
inline constexpr std::array<Word, 64> kUpSets = [] {
    std::array<Word, 64> t{};
    for (unsigned c = 0; c < 64; ++c)
        for (unsigned d = 0; d < 64; ++d)
            if ((c & ~d) == 0) t[c] |= Word{1} << d;
    return t;
}();

inline constexpr std::array<Word, 64> kDownSets = [] {
    std::array<Word, 64> t{};
    for (unsigned c = 0; c < 64; ++c)
        for (unsigned d = 0; d < 64; ++d)
            if ((d & ~c) == 0) t[c] |= Word{1} << d;
    return t;
}();

}  // namespace subdual::detail
