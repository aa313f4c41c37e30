#pragma once

// Exact determinant over a commutative ring by Laplace expansion along
// rows, memoized on the set of columns already consumed. Only column
// subsets reachable through nonzero entries are materialized, so sparse
// (e.g. banded Toeplitz) matrices stay far below the 2^n worst case.

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "lmc/error.hpp"

namespace lmc {

template <class Ring>
using Matrix = std::vector<std::vector<Ring>>;

/// Ring needs: copy, binary + and *, unary -, is_zero().
/// `one` supplies the multiplicative identity of the ring the entries live in.
template <class Ring>
Ring cofactor_determinant(const Matrix<Ring>& m, const Ring& one) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw StructuralError("determinant of a non-square matrix");
    if (n == 0) return one;
    if (n > 31) throw StructuralError("matrix too large for subset memoization");

    // layer r maps column-subset (|mask| = r) to the minor on rows [0, r) x mask
    std::map<std::uint32_t, Ring> layer;
    layer.emplace(0u, one);
    for (std::size_t r = 0; r < n; ++r) {
        std::map<std::uint32_t, Ring> next;
        for (const auto& [mask, minor] : layer) {
            if (minor.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const std::uint32_t bit = 1u << c;
                if (mask & bit) continue;
                const Ring& entry = m[r][c];
                if (entry.is_zero()) continue;
                // sign of placing column c after the columns already used
                const auto free_before =
                    static_cast<int>(c) - std::popcount(mask & (bit - 1u));
                Ring term = minor * entry;
                if (free_before % 2 != 0) term = -term;
                auto it = next.find(mask | bit);
                if (it == next.end())
                    next.emplace(mask | bit, std::move(term));
                else
                    it->second = it->second + term;
            }
        }
        layer = std::move(next);
    }
    const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1u);
    auto it = layer.find(full);
    if (it == layer.end()) return one + (-one);
    return it->second;
}

} // namespace lmc
