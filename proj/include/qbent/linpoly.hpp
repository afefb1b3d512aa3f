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
#ifndef QBENT_LINPOLY_HPP_
#define QBENT_LINPOLY_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbent/gf2linalg.hpp"
#include "qbent/gf2n.hpp"
#include "qbent/skewpoly.hpp"

// Linearized polynomials L(x) = sum a_i x^(2^i) over GF(2^n): GF(2)-linear
// maps of the field.  L is a permutation exactly when its Dickson matrix is
// nonsingular, exactly when the associate twisted polynomial
// l(x) = sum a_i x^i is coprime to x^n + 1 on the right, and exactly when
// the induced GF(2) matrix has full rank; all three tests live here.
namespace qbent {

class LinearizedPoly {
  public:
    /// Zero map.
    explicit LinearizedPoly(const Field& f) : field_(f), a_(f.n(), f.zero()) {}

    /// Coefficients a_i of x^(2^i); up to n entries, padded with zeros.
    LinearizedPoly(const Field& f, std::vector<FieldElem> coeffs) : field_(f) {
        if (coeffs.size() > f.n())
            throw std::invalid_argument("linpoly: more than n coefficients");
        for (const auto& c : coeffs)
            if (c.field() != f)
                throw std::invalid_argument("linpoly: coefficient from a different field");
        a_ = std::move(coeffs);
        a_.resize(f.n(), f.zero());
    }

    static LinearizedPoly identity(const Field& f) {
        LinearizedPoly L(f);
        L.a_[0] = f.one();
        return L;
    }

    const Field& field() const { return field_; }
    const std::vector<FieldElem>& coeffs() const { return a_; }
    FieldElem coeff(std::size_t i) const { return a_[i % field_.n()]; }

    friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += to_hex(a_[i]) + " x^" + std::to_string(std::uint64_t{1} << i);
        }
        return s.empty() ? "0" : s;
    }

  private:
    Field field_;
    std::vector<FieldElem> a_;  // exactly n entries
};

inline FieldElem lp_eval(const LinearizedPoly& L, const FieldElem& x) {
    if (x.field() != L.field())
        throw std::invalid_argument("linpoly: argument from a different field");
    FieldElem acc = L.field().zero();
    FieldElem y = x;  // runs through x^(2^i)
    for (unsigned i = 0; i < L.field().n(); ++i) {
        if (!L.coeff(i).is_zero()) acc += L.coeff(i) * y;
        y = y.squared();
    }
    return acc;
}

/// Coefficient-preserving bridge to the twisted ring: x^(2^i) |-> x^i.
inline SkewPoly associate_skew(const LinearizedPoly& L) {
    return SkewPoly(L.field(), L.coeffs());
}

/// Inverse bridge; requires deg l < n.
inline LinearizedPoly from_skew(const SkewPoly& l) {
    const unsigned n = l.field().n();
    if (l.degree() && *l.degree() >= n)
        throw std::invalid_argument("linpoly: associate degree must be < n");
    return LinearizedPoly(l.field(), {l.coeffs().begin(), l.coeffs().end()});
}

using FieldMatrix = std::vector<std::vector<FieldElem>>;

/// Dickson matrix: row i, column j holds a_((j-i) mod n)^(2^i); each row is
/// the right cyclic shift of the previous one with every entry squared.
inline FieldMatrix dickson_matrix(const LinearizedPoly& L) {
    const unsigned n = L.field().n();
    FieldMatrix m(n);
    for (unsigned i = 0; i < n; ++i) {
        m[i].reserve(n);
        for (unsigned j = 0; j < n; ++j)
            m[i].push_back(frobenius(L.coeff((j + n - i) % n), i));
    }
    return m;
}

/// Determinant by Gaussian elimination; characteristic 2, so no sign
/// bookkeeping.  Takes the matrix by value and destroys it.
inline FieldElem det(FieldMatrix m) {
    if (m.empty()) throw std::invalid_argument("linpoly: det of empty matrix");
    const std::size_t n = m.size();
    const Field& f = m[0][0].field();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("linpoly: det requires a square matrix");

    FieldElem d = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return f.zero();
        std::swap(m[c], m[piv]);
        d *= m[c][c];
        const FieldElem inv = m[c][c].inverse();
        for (std::size_t k = c + 1; k < n; ++k) {
            if (m[k][c].is_zero()) continue;
            const FieldElem factor = m[k][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[k][j] += factor * m[c][j];
        }
    }
    return d;
}

enum class PermMethod { gcrd, dickson, bruteforce };

/// Permutation test.  gcrd: the associate is right-coprime to x^n + 1;
/// dickson: det of the Dickson matrix is nonzero; bruteforce: the GF(2)
/// matrix of images of a basis has rank n.
inline bool is_permutation(const LinearizedPoly& L, PermMethod method) {
    const Field& f = L.field();
    const unsigned n = f.n();
    switch (method) {
        case PermMethod::gcrd: {
            const SkewPoly g = gcrd(associate_skew(L), SkewPoly::x_pow_n_plus_one(f));
            return g.degree() == std::optional<std::size_t>{0};
        }
        case PermMethod::dickson:
            return !det(dickson_matrix(L)).is_zero();
        case PermMethod::bruteforce: {
            if (n > 24)
                throw std::domain_error("linpoly: bruteforce permutation test capped at n = 24");
            std::vector<std::uint64_t> rows(n, 0);
            for (unsigned j = 0; j < n; ++j) {
                const std::uint64_t img = lp_eval(L, f.element(std::uint64_t{1} << j)).bits();
                for (unsigned i = 0; i < n; ++i) rows[i] |= ((img >> i) & 1) << j;
            }
            return gf2::rank(std::move(rows), n) == n;
        }
    }
    throw std::invalid_argument("linpoly: unsupported permutation test");
}

namespace detail {
inline std::int64_t exact_div3(std::int64_t v, const char* what) {
    if (v % 3 != 0) throw std::logic_error(std::string("linpoly: 3 does not divide ") + what);
    return v / 3;
}
}  // namespace detail

/// The permutation family P(x) = sum_{i<n/2} a^((2^n - 2^(2i+1) - 2)/3)
/// x^(2^(2i+1)) for even n and a non-cube a.  Coefficients sit at the odd
/// indices only; each exponent's divisibility by 3 is asserted.
inline LinearizedPoly build_P(const Field& f, const FieldElem& a) {
    const unsigned n = f.n();
    if (n % 2 != 0) throw std::domain_error("linpoly: build_P requires even n");
    if (a.field() != f) throw std::invalid_argument("linpoly: a from a different field");
    if (a.is_zero() || is_cube(a))
        throw std::invalid_argument("linpoly: build_P requires a non-cube a");
    std::vector<FieldElem> coeffs(n, f.zero());
    for (unsigned i = 0; i < n / 2; ++i) {
        const unsigned idx = 2 * i + 1;
        const std::int64_t num = (std::int64_t{1} << n) - (std::int64_t{1} << idx) - 2;
        coeffs[idx] = pow(a, detail::exact_div3(num, "2^n - 2^(2i+1) - 2"));
    }
    return LinearizedPoly(f, std::move(coeffs));
}

/// The scaled associate p1(x) = sum_{i<n/2} a^(-(2^(2i+1) + 1)/3) x^(2i+1);
/// the associate of P is a^((2^n-1)/3) * p1.
inline SkewPoly build_p1(const Field& f, const FieldElem& a) {
    const unsigned n = f.n();
    if (n % 2 != 0) throw std::domain_error("linpoly: build_p1 requires even n");
    if (a.field() != f) throw std::invalid_argument("linpoly: a from a different field");
    if (a.is_zero() || is_cube(a))
        throw std::invalid_argument("linpoly: build_p1 requires a non-cube a");
    std::vector<FieldElem> coeffs(n, f.zero());
    for (unsigned i = 0; i < n / 2; ++i) {
        const unsigned deg = 2 * i + 1;
        const std::int64_t num = (std::int64_t{1} << deg) + 1;
        coeffs[deg] = pow(a, -detail::exact_div3(num, "2^(2i+1) + 1"));
    }
    return SkewPoly(f, std::move(coeffs));
}

}  // namespace qbent

#endif  // QBENT_LINPOLY_HPP_
