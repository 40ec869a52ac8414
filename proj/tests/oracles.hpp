#pragma once
// Naive reference implementations for the tests. These work on sets of pairs
// and plain loops, independently of the bit-matrix code under test.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "subdual/relation.hpp"
#include "subdual/subordination.hpp"

namespace oracle {

using Pairs = std::set<std::pair<int, int>>;

inline Pairs pairs_of(const subdual::Rel& r)
{
    Pairs out;
    for (int i = 0; i < r.source().size; ++i)
        for (int j = 0; j < r.target().size; ++j)
            if (r.related(i, j)) out.insert({i, j});
    return out;
}

// (x, z) iff some y has (x, y) in r and (y, z) in s.
inline Pairs compose(const Pairs& r, const Pairs& s, int middle)
{
    Pairs out;
    for (auto [x, y] : r)
        for (int w = 0; w < middle; ++w)
            if (w == y)
                for (auto [y2, z] : s)
                    if (y2 == w) out.insert({x, z});
    return out;
}

inline bool leq(int a, int b) { return (a & ~b) == 0; }

// S1-S4 straight from the definitions, all quantifiers spelled out.
inline bool is_subordination(const subdual::Subordination& s)
{
    const int na = s.source().element_count();
    const int nb = s.target().element_count();
    auto rel = [&](int a, int b) { return s.related(static_cast<subdual::Word>(a), static_cast<subdual::Word>(b)); };
    if (!rel(0, 0) || !rel(na - 1, nb - 1)) return false;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b)
            for (int c = 0; c < nb; ++c)
                if (rel(a, c) && rel(b, c) && !rel(a | b, c)) return false;
    for (int a = 0; a < na; ++a)
        for (int c = 0; c < nb; ++c)
            for (int d = 0; d < nb; ++d)
                if (rel(a, c) && rel(a, d) && !rel(a, c & d)) return false;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b)
            for (int c = 0; c < nb; ++c)
                for (int d = 0; d < nb; ++d)
                    if (leq(a, b) && rel(b, c) && leq(c, d) && !rel(a, d)) return false;
    return true;
}

inline bool is_equivalence(const Pairs& p, int n)
{
    for (int i = 0; i < n; ++i)
        if (!p.count({i, i})) return false;
    for (auto [i, j] : p)
        if (!p.count({j, i})) return false;
    for (auto [i, j] : p)
        for (auto [k, l] : p)
            if (j == k && !p.count({i, l})) return false;
    return true;
}

inline std::uint64_t bell(int n)
{
    // Stirling numbers of the second kind, summed.
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k) s[i][k] = static_cast<std::uint64_t>(k) * s[i - 1][k] + s[i - 1][k - 1];
    std::uint64_t b = 0;
    for (int k = 0; k <= n; ++k) b += s[n][k];
    return b;
}

}  // namespace oracle
