/*
 * Copyright 2026 The qbent authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef QBENT_GF2LINALG_HPP_
#define QBENT_GF2LINALG_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

// Dense linear algebra over GF(2).  A matrix is a vector of rows; row i is a
// bitmask whose bit j is the (i, j) entry.  Sized for ncols <= 63.
namespace qbent::gf2 {

inline unsigned rank(std::vector<std::uint64_t> rows, unsigned ncols) {
    unsigned r = 0;
    for (unsigned c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && !((rows[piv] >> c) & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != r && ((rows[k] >> c) & 1)) rows[k] ^= rows[r];
        ++r;
    }
    return r;
}

struct LinearSolution {
    std::uint64_t particular = 0;
    std::vector<std::uint64_t> kernel;  // basis of the homogeneous solutions
};

/// Solve M v = b.  Equation i is rows[i] . v = bit i of rhs.  Requires
/// rows.size() <= 64 and ncols <= 63.  nullopt when inconsistent.
inline std::optional<LinearSolution> solve(std::vector<std::uint64_t> rows,
                                           std::uint64_t rhs, unsigned ncols) {
    if (rows.size() > 64 || ncols > 63)
        throw std::invalid_argument("gf2: system too large for bitmask solver");
    // Augment with the rhs at bit `ncols`, then Gauss-Jordan.
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows[i] |= ((rhs >> i) & 1) << ncols;

    std::vector<unsigned> pivot_col;
    unsigned r = 0;
    for (unsigned c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && !((rows[piv] >> c) & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != r && ((rows[k] >> c) & 1)) rows[k] ^= rows[r];
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t k = r; k < rows.size(); ++k)
        if (rows[k] != 0) return std::nullopt;  // 0 = 1 row

    LinearSolution sol;
    std::uint64_t pivot_mask = 0;
    for (unsigned i = 0; i < r; ++i) {
        pivot_mask |= std::uint64_t{1} << pivot_col[i];
        if ((rows[i] >> ncols) & 1) sol.particular |= std::uint64_t{1} << pivot_col[i];
    }
    for (unsigned c = 0; c < ncols; ++c) {
        if ((pivot_mask >> c) & 1) continue;
        std::uint64_t v = std::uint64_t{1} << c;  // free variable
        for (unsigned i = 0; i < r; ++i)
            if ((rows[i] >> c) & 1) v |= std::uint64_t{1} << pivot_col[i];
        sol.kernel.push_back(v);
    }
    return sol;
}

/// Minimum element (as an integer) of the coset x + span(basis).
inline std::uint64_t coset_min(std::uint64_t x,
                               const std::vector<std::uint64_t>& basis) {
    std::uint64_t piv[64] = {};
    for (std::uint64_t b : basis) {
        while (b) {
            const int h = 63 - std::countl_zero(b);
            if (!piv[h]) {
                piv[h] = b;
                break;
            }
            b ^= piv[h];
        }
    }
    for (int h = 63; h >= 0; --h)
        if (piv[h] && ((x >> h) & 1)) x ^= piv[h];
    return x;
}

}  // namespace qbent::gf2

#endif  // QBENT_GF2LINALG_HPP_
