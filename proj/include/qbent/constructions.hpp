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
#ifndef QBENT_CONSTRUCTIONS_HPP_
#define QBENT_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbent/boolfun.hpp"
#include "qbent/gf2n.hpp"
#include "qbent/gf2poly.hpp"
#include "qbent/linpoly.hpp"

// Generators and bentness criteria for four families of quadratic trace
// forms: the classic c-vector family ("ma"), its subfield generalization
// ("hu"), the Gold-sum variant ("li"), and the non-cube-coefficient family
// ("new") whose bentness rides on the permutation polynomial build_P.
namespace qbent::constructions {

/// Ordinary commutative gcd over GF(2)[x] on packed polynomials; monic by
/// construction.  Backs the ma/hu criteria and serves as the commutative
/// cross-check against the twisted-ring gcrd.
inline std::uint64_t gcd_f2(std::uint64_t u, std::uint64_t v) {
    if (u == 0 && v == 0)
        throw std::domain_error("constructions: gcd_f2(0, 0) undefined");
    return gf2poly::gcd(u, v);
}

namespace detail {

inline void require_even(unsigned n, unsigned min, const char* family) {
    if (n < min || n % 2 != 0)
        throw std::invalid_argument(std::string("constructions: ") + family +
                                    " requires even n >= " + std::to_string(min));
}

/// Gold-type full-trace term Tr_1^n(beta x^(1+2^i)).
inline TraceTerm gold_term(const Field& f, const FieldElem& beta, unsigned i) {
    return TraceTerm{f.n(), beta, (std::uint64_t{1} << i) + 1};
}

/// Half-trace term Tr_1^(n/2)(beta x^(1+2^(n/2))); beta must sit in the
/// half-size subfield.
inline TraceTerm half_term(const Field& f, const FieldElem& beta) {
    return TraceTerm{f.n() / 2, beta, (std::uint64_t{1} << (f.n() / 2)) + 1};
}

}  // namespace detail

// ---- family ma ---------------------------------------------------------------

// Coefficient bits c_1..c_{n/2-1} selecting the Gold terms next to the fixed
// half-trace term.
struct MaParams {
    unsigned n = 0;
    std::vector<std::uint8_t> c;  // c[i-1] is c_i
};

inline TraceRepr construct_ma(const Field& f, const MaParams& p) {
    detail::require_even(p.n, 4, "ma");
    if (f.n() != p.n) throw std::invalid_argument("constructions: field degree != params.n");
    if (p.c.size() != p.n / 2 - 1)
        throw std::invalid_argument("constructions: ma c-vector must have n/2 - 1 entries");
    TraceRepr r(f);
    for (unsigned i = 1; i <= p.n / 2 - 1; ++i)
        if (p.c[i - 1]) r.add_term(detail::gold_term(f, f.one(), i));
    r.add_term(detail::half_term(f, f.one()));
    return r;
}

/// Bent iff gcd(c(x), x^n + 1) = 1 with c(x) = sum c_i (x^i + x^(n-i)) + x^(n/2).
inline bool ma_criterion(const MaParams& p) {
    detail::require_even(p.n, 4, "ma");
    if (p.c.size() != p.n / 2 - 1)
        throw std::invalid_argument("constructions: ma c-vector must have n/2 - 1 entries");
    std::uint64_t c = std::uint64_t{1} << (p.n / 2);
    for (unsigned i = 1; i <= p.n / 2 - 1; ++i)
        if (p.c[i - 1]) c ^= (std::uint64_t{1} << i) | (std::uint64_t{1} << (p.n - i));
    const std::uint64_t xn1 = (std::uint64_t{1} << p.n) | 1;
    return gcd_f2(c, xn1) == 1;
}

// ---- family hu ---------------------------------------------------------------

// Subfield generalization: e | n with m = n/e even, a nonzero beta in
// F_{2^e}, and coefficient bits c_1..c_{m/2} (the last one gating the
// half-trace term).
struct HuParams {
    unsigned n = 0;
    unsigned e = 1;
    FieldElem beta;
    std::vector<std::uint8_t> c;  // c[i-1] is c_i, i = 1..m/2
};

enum class HuModulus { xm_plus_1, xn_plus_1 };

inline void validate_hu(const Field& f, const HuParams& p) {
    detail::require_even(p.n, 4, "hu");
    if (f.n() != p.n) throw std::invalid_argument("constructions: field degree != params.n");
    if (p.e == 0 || p.n % p.e != 0 || (p.n / p.e) % 2 != 0)
        throw std::invalid_argument("constructions: hu requires e | n with n/e even");
    const unsigned m = p.n / p.e;
    if (p.c.size() != m / 2)
        throw std::invalid_argument("constructions: hu c-vector must have m/2 entries");
    if (p.beta.field() != f)
        throw std::invalid_argument("constructions: hu beta from a different field");
    if (p.beta.is_zero()) throw std::invalid_argument("constructions: hu beta must be nonzero");
    if (frobenius(p.beta, p.e) != p.beta)
        throw std::invalid_argument("constructions: hu beta must lie in F_{2^e}");
}

inline TraceRepr construct_hu(const Field& f, const HuParams& p) {
    validate_hu(f, p);
    const unsigned m = p.n / p.e;
    TraceRepr r(f);
    for (unsigned i = 1; i <= m / 2 - 1; ++i)
        if (p.c[i - 1]) r.add_term(detail::gold_term(f, p.beta, p.e * i));
    // e | n/2 because m is even, so beta also lies in the half-size subfield.
    if (p.c[m / 2 - 1]) r.add_term(detail::half_term(f, p.beta));
    return r;
}

/// Bent iff c_{m/2} = 1 and c(x) is coprime to the modulus, with
/// c(x) = sum_{i<m/2} c_i (x^i + x^(m-i)) + x^(m/2).  The companion c(x)
/// has degree below m, so the degree-consistent modulus is x^m + 1
/// (default); the strict mode tests x^n + 1 instead.
inline bool hu_criterion(const HuParams& p, HuModulus mode = HuModulus::xm_plus_1) {
    const unsigned m = p.n / p.e;
    if (p.c.size() != m / 2)
        throw std::invalid_argument("constructions: hu c-vector must have m/2 entries");
    if (!p.c[m / 2 - 1]) return false;
    std::uint64_t c = std::uint64_t{1} << (m / 2);
    for (unsigned i = 1; i + 1 <= m / 2; ++i)
        if (p.c[i - 1]) c ^= (std::uint64_t{1} << i) | (std::uint64_t{1} << (m - i));
    const unsigned deg = mode == HuModulus::xm_plus_1 ? m : p.n;
    const std::uint64_t mod = (std::uint64_t{1} << deg) | 1;
    return gcd_f2(c, mod) == 1;
}

// ---- family li ---------------------------------------------------------------

// The all-ones base form plus t extra Gold terms at strides of k.
struct LiParams {
    unsigned n = 0;
    unsigned k = 1;
    unsigned t = 1;
};

/// Terms are normalized before materialization: exponents 1 + 2^(ki) reduce
/// via ki mod n, identical terms cancel in pairs over GF(2), and a full
/// trace at i = n/2 folds through the half-size subfield (with beta = 1 that
/// fold is 1 + 1 = 0, so the term vanishes).
inline TraceRepr construct_li(const Field& f, const LiParams& p) {
    detail::require_even(p.n, 4, "li");
    if (f.n() != p.n) throw std::invalid_argument("constructions: field degree != params.n");
    if (p.k == 0) throw std::invalid_argument("constructions: li requires k >= 1");

    std::vector<int> parity(p.n, 0);
    for (unsigned i = 1; i <= p.n / 2 - 1; ++i) parity[i] ^= 1;  // base form
    for (unsigned i = 1; i <= p.t; ++i)
        parity[(static_cast<std::uint64_t>(p.k) * i) % p.n] ^= 1;

    TraceRepr r(f);
    for (unsigned j = 0; j < p.n; ++j) {
        if (!parity[j]) continue;
        if (j == p.n / 2) continue;  // folds to a zero coefficient
        r.add_term(detail::gold_term(f, f.one(), j));
    }
    r.add_term(detail::half_term(f, f.one()));
    return r;
}

/// Bent iff gcd(n, (2t+1)k) = gcd(n, k).
inline bool li_criterion(const LiParams& p) {
    detail::require_even(p.n, 4, "li");
    if (p.k == 0) throw std::invalid_argument("constructions: li requires k >= 1");
    return std::gcd<std::uint64_t, std::uint64_t>(p.n, std::uint64_t{2 * p.t + 1} * p.k) ==
           std::gcd(p.n, p.k);
}

// ---- family new --------------------------------------------------------------

/// Index pool T: odd numbers 2i+1 for 0 <= i <= n/4 - 1 (n = 0 mod 4) or
/// 0 <= i <= (n-6)/4 (n = 2 mod 4).
inline std::vector<unsigned> index_set_T(unsigned n) {
    detail::require_even(n, 4, "new");
    const unsigned top = n % 4 == 0 ? n / 4 : (n - 2) / 4;  // (n-6)/4 + 1
    std::vector<unsigned> T;
    T.reserve(top);
    for (unsigned i = 0; i < top; ++i) T.push_back(2 * i + 1);
    return T;
}

// A non-cube a plus a chosen subset I of T; the realized index set is
// S = I union {n - i : i in T \ I}.
struct NewParams {
    FieldElem a;
    std::vector<unsigned> I;
};

inline std::vector<unsigned> derive_S(unsigned n, const std::vector<unsigned>& I) {
    const std::vector<unsigned> T = index_set_T(n);
    for (unsigned i : I)
        if (std::find(T.begin(), T.end(), i) == T.end())
            throw std::invalid_argument("constructions: I must be a subset of T");
    std::vector<unsigned> S = I;
    for (unsigned i : T)
        if (std::find(I.begin(), I.end(), i) == I.end()) S.push_back(n - i);
    std::sort(S.begin(), S.end());
    if (std::adjacent_find(S.begin(), S.end()) != S.end())
        throw std::invalid_argument("constructions: duplicate indices in I");

    // S and its mirror must tile the odd residues of [1, n-1], minus n/2
    // in the n = 2 mod 4 case.
    std::vector<unsigned> tiles;
    for (unsigned s : S) {
        tiles.push_back(s);
        tiles.push_back(n - s);
    }
    std::sort(tiles.begin(), tiles.end());
    tiles.erase(std::unique(tiles.begin(), tiles.end()), tiles.end());
    std::vector<unsigned> odds;
    for (unsigned v = 1; v < n; v += 2)
        if (!(n % 4 == 2 && v == n / 2)) odds.push_back(v);
    if (tiles != odds)
        throw std::logic_error("constructions: index set S fails its tiling invariant");
    return S;
}

inline TraceRepr construct_new(const Field& f, const NewParams& p) {
    const unsigned n = f.n();
    detail::require_even(n, 4, "new");
    if (p.a.field() != f) throw std::invalid_argument("constructions: a from a different field");
    if (p.a.is_zero() || is_cube(p.a))
        throw std::invalid_argument("constructions: family new requires a non-cube a");

    const std::vector<unsigned> S = derive_S(n, p.I);
    TraceRepr r(f);
    for (unsigned i : S) {
        const std::int64_t num = (std::int64_t{1} << n) - (std::int64_t{1} << i) - 2;
        if (num % 3 != 0)
            throw std::logic_error("constructions: 3 does not divide 2^n - 2^i - 2");
        r.add_term(detail::gold_term(f, pow(p.a, num / 3), i));
    }
    if (n % 4 == 2) {
        const std::int64_t num = (std::int64_t{1} << n) - (std::int64_t{1} << (n / 2)) - 2;
        if (num % 3 != 0)
            throw std::logic_error("constructions: 3 does not divide 2^n - 2^(n/2) - 2");
        const FieldElem beta = pow(p.a, num / 3);
        if (frobenius(beta, n / 2) != beta)
            throw std::logic_error("constructions: half-term coefficient left the subfield");
        r.add_term(detail::half_term(f, beta));
    }
    return r;
}

/// All 2^|T| instances for one non-cube a, subsets of T in bitmask order
/// (bit k of the mask selects T[k]).
inline std::vector<std::pair<std::vector<unsigned>, TraceRepr>> enumerate_new(
    const Field& f, const FieldElem& a) {
    const std::vector<unsigned> T = index_set_T(f.n());
    std::vector<std::pair<std::vector<unsigned>, TraceRepr>> out;
    out.reserve(std::size_t{1} << T.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << T.size()); ++mask) {
        std::vector<unsigned> I;
        for (std::size_t k = 0; k < T.size(); ++k)
            if ((mask >> k) & 1) I.push_back(T[k]);
        TraceRepr repr = construct_new(f, NewParams{a, I});
        out.emplace_back(std::move(I), std::move(repr));
    }
    return out;
}

/// Checks entrywise that the Gram matrix of the constructed function equals
/// the Gram matrix of (x, y) -> Tr(P(x) y) for P = build_P(a); with P a
/// permutation this forces the radical to vanish and the rank to be n.
inline bool associated_P_check(const Field& f, const NewParams& p) {
    const BooleanFunction fn = truth_table(construct_new(f, p));
    const std::vector<std::uint64_t> lhs = gram_matrix(fn, f);
    const LinearizedPoly P = build_P(f, p.a);
    const unsigned n = f.n();
    for (unsigned i = 0; i < n; ++i) {
        const FieldElem Pi = lp_eval(P, f.element(std::uint64_t{1} << i));
        std::uint64_t row = 0;
        for (unsigned j = 0; j < n; ++j) {
            const FieldElem ej = f.element(std::uint64_t{1} << j);
            row |= (trace(Pi * ej, 1).bits() & 1) << j;
        }
        if (row != lhs[i]) return false;
    }
    return true;
}

}  // namespace qbent::constructions

#endif  // QBENT_CONSTRUCTIONS_HPP_
