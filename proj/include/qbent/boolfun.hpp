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
#ifndef QBENT_BOOLFUN_HPP_
#define QBENT_BOOLFUN_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbent/gf2linalg.hpp"
#include "qbent/gf2n.hpp"

// Boolean functions on GF(2^n): evaluation of trace forms
// f(x) = sum_i Tr_1^{n_i}(beta_i x^{r_i}), materialized truth tables, the
// Walsh transform indexed by field elements, bentness, the Gram matrix and
// rank of the associated bilinear form, and the algebraic degree.
namespace qbent {

// A single summand Tr_1^{n_i}(beta x^r).  beta is stored as an element of
// the ambient field but must be fixed by Frobenius^{n_i}, i.e. lie in the
// subfield of size 2^{n_i}.
struct TraceTerm {
    unsigned subfield_degree = 0;
    FieldElem beta;
    std::uint64_t exponent = 0;
};

class TraceRepr {
  public:
    explicit TraceRepr(const Field& f) : field_(f) {}

    TraceRepr(const Field& f, std::vector<TraceTerm> terms) : field_(f) {
        for (const auto& t : terms) validate_term(f, t);
        terms_ = std::move(terms);
    }

    const Field& field() const { return field_; }
    const std::vector<TraceTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(TraceTerm t) {
        validate_term(field_, t);
        terms_.push_back(std::move(t));
    }

    /// Canonical-form check (not forced on construction): every exponent is
    /// the minimum of its doubling orbit mod 2^n - 1 and the declared
    /// subfield degree is that orbit's size.
    bool canonical() const {
        const std::uint64_t m = field_.order();
        for (const auto& t : terms_) {
            if (t.exponent == 0) {
                if (t.subfield_degree != 1) return false;
                continue;
            }
            std::uint64_t cur = t.exponent;
            unsigned size = 0;
            do {
                if (cur < t.exponent) return false;
                cur = (cur * 2) % m;
                ++size;
            } while (cur != t.exponent);
            if (size != t.subfield_degree) return false;
        }
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) os << " + ";
            os << "Tr_1^" << terms_[i].subfield_degree << "(" << to_hex(terms_[i].beta)
               << " x^" << terms_[i].exponent << ")";
        }
        return os.str();
    }

  private:
    static void validate_term(const Field& f, const TraceTerm& t) {
        if (t.beta.field() != f)
            throw std::invalid_argument("boolfun: term coefficient from a different field");
        if (t.subfield_degree == 0 || f.n() % t.subfield_degree != 0)
            throw std::invalid_argument("boolfun: term subfield degree must divide n");
        if (frobenius(t.beta, t.subfield_degree) != t.beta)
            throw std::invalid_argument("boolfun: term coefficient outside its declared subfield");
        if (t.exponent > f.order())
            throw std::invalid_argument("boolfun: term exponent out of range [0, 2^n - 1]");
    }

    Field field_;
    std::vector<TraceTerm> terms_;
};

// Truth table of an n-variable Boolean function, index = element bit
// pattern, packed little-endian (bit x of the table sits at byte x/8,
// bit x%8).
class BooleanFunction {
  public:
    explicit BooleanFunction(unsigned n) : n_(check(n)), packed_(byte_len(n), 0) {}

    BooleanFunction(unsigned n, std::vector<std::uint8_t> packed)
        : n_(check(n)), packed_(std::move(packed)) {
        if (packed_.size() != byte_len(n_))
            throw std::invalid_argument("boolfun: packed table has wrong length");
        if (n_ < 3 && (packed_[0] >> (std::uint64_t{1} << n_)) != 0)
            throw std::invalid_argument("boolfun: padding bits must be zero");
    }

    unsigned n() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }
    const std::vector<std::uint8_t>& packed() const { return packed_; }

    int bit(std::uint64_t x) const { return (packed_[x >> 3] >> (x & 7)) & 1; }
    void set_bit(std::uint64_t x, int v) {
        const std::uint8_t mask = static_cast<std::uint8_t>(1u << (x & 7));
        if (v)
            packed_[x >> 3] |= mask;
        else
            packed_[x >> 3] &= static_cast<std::uint8_t>(~mask);
    }

    std::uint64_t weight() const {
        std::uint64_t w = 0;
        for (std::uint8_t b : packed_) w += std::popcount(static_cast<unsigned>(b));
        return w;
    }

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

  private:
    static unsigned check(unsigned n) {
        if (n < 1 || n > 24)
            throw std::out_of_range("boolfun: truth tables supported for 1 <= n <= 24");
        return n;
    }
    static std::size_t byte_len(unsigned n) {
        return n < 3 ? 1 : (std::size_t{1} << (n - 3));
    }

    unsigned n_;
    std::vector<std::uint8_t> packed_;
};

/// FNV-1a 64-bit over the packed truth-table bytes; the digest printed in
/// report rows.
inline std::uint64_t tt_digest(const BooleanFunction& f) {
    std::uint64_t h = 14695981039346656037ULL;
    for (std::uint8_t b : f.packed()) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

// ---- evaluation -------------------------------------------------------------

/// Evaluate a trace form at one point: sum over terms of
/// Tr_1^{n_i}(beta_i x^{r_i}) with the convention x^0 = 1 even at x = 0
/// (so an r = 0 term is the constant Tr(beta)).  Each term's inner value
/// must land in the declared subfield.
inline int eval_trace(const TraceRepr& repr, const FieldElem& x) {
    if (x.field() != repr.field())
        throw std::invalid_argument("boolfun: point from a different field");
    const unsigned n = repr.field().n();
    int acc = 0;
    for (const auto& t : repr.terms()) {
        FieldElem inner = t.exponent == 0
                              ? t.beta
                              : t.beta * pow(x, static_cast<std::int64_t>(t.exponent));
        const unsigned d = t.subfield_degree;
        if (d < n && frobenius(inner, d) != inner)
            throw std::invalid_argument("boolfun: term value leaves its declared subfield");
        // Tr_1^d computed inside the ambient field: sum of inner^(2^j), j < d.
        FieldElem tr = inner;
        FieldElem y = inner;
        for (unsigned j = 1; j < d; ++j) {
            y = y.squared();
            tr += y;
        }
        if (tr.bits() > 1)
            throw std::logic_error("boolfun: trace value escaped GF(2)");
        acc ^= static_cast<int>(tr.bits());
    }
    return acc;
}

namespace detail {

// The Frobenius power x -> x^(2^k) as a GF(2)-linear map, tabulated on the
// basis so a point application is a handful of XORs.
struct LinearMap {
    std::uint64_t img[32] = {};
    std::uint64_t apply(std::uint64_t x) const {
        std::uint64_t r = 0;
        while (x) {
            r ^= img[std::countr_zero(x)];
            x &= x - 1;
        }
        return r;
    }
};

inline LinearMap frobenius_map(const Field& f, unsigned k) {
    LinearMap m;
    for (unsigned j = 0; j < f.n(); ++j)
        m.img[j] = frobenius(f.element(std::uint64_t{1} << j), k).bits();
    return m;
}

// Mask turning the partial trace sum_{j<d} y^(2^j) into a parity: for y in
// the subfield of size 2^d the sum is 0 or 1, and linearity gives its low
// bit as popcount(y & mask) mod 2.
inline std::uint64_t partial_trace_mask(const Field& f, unsigned d) {
    std::uint64_t mask = 0;
    for (unsigned j = 0; j < f.n(); ++j) {
        FieldElem y = f.element(std::uint64_t{1} << j);
        FieldElem acc = y;
        for (unsigned t = 1; t < d; ++t) {
            y = y.squared();
            acc += y;
        }
        mask |= (acc.bits() & 1) << j;
    }
    return mask;
}

}  // namespace detail

/// Materialize the full 2^n-entry truth table.  Terms whose exponent has at
/// most two set bits (covers x^(2^u) and x^(2^u + 2^v), hence every Gold-type
/// exponent 1 + 2^i) are evaluated through tabulated Frobenius maps; other
/// exponents fall back to per-point pow.  Either path matches eval_trace
/// bit for bit, including the subfield-membership check.
inline BooleanFunction truth_table(const TraceRepr& repr) {
    const Field& f = repr.field();
    const unsigned n = f.n();
    BooleanFunction out(n);

    struct Plan {
        enum class Kind { constant, one_power, two_powers, generic } kind;
        FieldElem beta;
        std::uint64_t exponent = 0;
        unsigned d = 0;
        detail::LinearMap frob_u, frob_v, member;
        std::uint64_t trace_mask = 0;
        int const_bit = 0;
    };

    std::vector<Plan> plans;
    plans.reserve(repr.terms().size());
    for (const auto& t : repr.terms()) {
        Plan p;
        p.beta = t.beta;
        p.exponent = t.exponent;
        p.d = t.subfield_degree;
        p.trace_mask = detail::partial_trace_mask(f, p.d);
        if (t.exponent == 0) {
            p.kind = Plan::Kind::constant;
            FieldElem tr = t.beta;
            FieldElem y = t.beta;
            for (unsigned j = 1; j < p.d; ++j) {
                y = y.squared();
                tr += y;
            }
            p.const_bit = static_cast<int>(tr.bits() & 1);
        } else if (std::popcount(t.exponent) == 1) {
            p.kind = Plan::Kind::one_power;
            p.frob_u = detail::frobenius_map(f, static_cast<unsigned>(std::countr_zero(t.exponent)));
        } else if (std::popcount(t.exponent) == 2) {
            p.kind = Plan::Kind::two_powers;
            const auto u = static_cast<unsigned>(std::countr_zero(t.exponent));
            const auto v = static_cast<unsigned>(63 - std::countl_zero(t.exponent));
            p.frob_u = detail::frobenius_map(f, u);
            p.frob_v = detail::frobenius_map(f, v);
        } else {
            p.kind = Plan::Kind::generic;
        }
        if (p.d < n) p.member = detail::frobenius_map(f, p.d);
        plans.push_back(std::move(p));
    }

    for (std::uint64_t xb = 0; xb < out.size(); ++xb) {
        int bit = 0;
        for (const auto& p : plans) {
            if (p.kind == Plan::Kind::constant) {
                bit ^= p.const_bit;
                continue;
            }
            std::uint64_t inner;
            switch (p.kind) {
                case Plan::Kind::one_power:
                    inner = (p.beta * f.element(p.frob_u.apply(xb))).bits();
                    break;
                case Plan::Kind::two_powers:
                    inner = (p.beta * (f.element(p.frob_u.apply(xb)) *
                                       f.element(p.frob_v.apply(xb))))
                                .bits();
                    break;
                default: {
                    const FieldElem x = f.element(xb);
                    inner = xb == 0
                                ? 0
                                : (p.beta * pow(x, static_cast<std::int64_t>(p.exponent))).bits();
                    break;
                }
            }
            if (p.d < n && p.member.apply(inner) != inner)
                throw std::invalid_argument("boolfun: term value leaves its declared subfield");
            bit ^= static_cast<int>(std::popcount(inner & p.trace_mask) & 1);
        }
        if (bit) out.set_bit(xb, 1);
    }
    return out;
}

// ---- Walsh spectrum ----------------------------------------------------------

class WalshSpectrum {
  public:
    explicit WalshSpectrum(std::vector<std::int64_t> values, unsigned n)
        : n_(n), v_(std::move(values)) {
        if (v_.size() != (std::uint64_t{1} << n))
            throw std::invalid_argument("boolfun: spectrum has wrong length");
        std::uint64_t energy = 0;
        for (const std::int64_t s : v_)
            energy += static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(s);
        if (energy != (std::uint64_t{1} << (2 * n)))
            throw std::logic_error("boolfun: spectrum violates Parseval");
    }

    unsigned n() const { return n_; }
    std::int64_t at(std::uint64_t a_bits) const { return v_.at(a_bits); }
    const std::vector<std::int64_t>& values() const { return v_; }

  private:
    unsigned n_;
    std::vector<std::int64_t> v_;
};

/// Walsh transform indexed by field elements: out[a] = sum over x of
/// (-1)^(f(x) + Tr(a x)).  A coordinate butterfly computes
/// W[u] = sum (-1)^(f(x) + <u, x>); writing a in the dual basis of the
/// evaluation basis turns Tr(a x) into the dot product <u(a), x> with
/// u(a)_j = Tr(a e_j), so out[a] = W[u(a)].
inline WalshSpectrum walsh_spectrum(const BooleanFunction& fn, const Field& f) {
    if (fn.n() != f.n())
        throw std::invalid_argument("boolfun: function size does not match field");
    const unsigned n = f.n();
    const std::uint64_t N = fn.size();

    std::vector<std::int64_t> v(N);
    for (std::uint64_t x = 0; x < N; ++x) v[x] = fn.bit(x) ? -1 : 1;
    for (std::uint64_t len = 1; len < N; len <<= 1)
        for (std::uint64_t i = 0; i < N; i += len << 1)
            for (std::uint64_t j = i; j < i + len; ++j) {
                const std::int64_t a = v[j], b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }

    // u(a) is GF(2)-linear in a; tabulate it on the basis.
    detail::LinearMap u;
    for (unsigned k = 0; k < n; ++k) {
        const FieldElem ek = f.element(std::uint64_t{1} << k);
        std::uint64_t row = 0;
        for (unsigned j = 0; j < n; ++j) {
            const FieldElem ej = f.element(std::uint64_t{1} << j);
            row |= (trace(ek * ej, 1).bits() & 1) << j;
        }
        u.img[k] = row;
    }

    std::vector<std::int64_t> out(N);
    for (std::uint64_t a = 0; a < N; ++a) out[a] = v[u.apply(a)];
    return WalshSpectrum(std::move(out), n);
}

/// Bent: defined for even n; every spectrum magnitude equals 2^(n/2).
inline bool is_bent(const BooleanFunction& fn, const Field& f) {
    if (fn.n() % 2 != 0) throw std::domain_error("boolfun: bent is undefined for odd n");
    const WalshSpectrum s = walsh_spectrum(fn, f);
    const std::int64_t target = std::int64_t{1} << (fn.n() / 2);
    return std::all_of(s.values().begin(), s.values().end(),
                       [&](std::int64_t v) { return v == target || v == -target; });
}

// ---- quadratic-form machinery -------------------------------------------------

/// Gram matrix of the associated bilinear form on the standard basis:
/// row i bit j = B_f(e_i, e_j) with B_f(x, y) = f(x+y) + f(x) + f(y).
inline std::vector<std::uint64_t> gram_matrix(const BooleanFunction& fn, const Field& f) {
    if (fn.n() != f.n())
        throw std::invalid_argument("boolfun: function size does not match field");
    const unsigned n = f.n();
    std::vector<std::uint64_t> rows(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        const std::uint64_t ei = std::uint64_t{1} << i;
        for (unsigned j = 0; j < n; ++j) {
            const std::uint64_t ej = std::uint64_t{1} << j;
            const int b = fn.bit(ei ^ ej) ^ fn.bit(ei) ^ fn.bit(ej);
            rows[i] |= static_cast<std::uint64_t>(b) << j;
        }
    }
    return rows;
}

/// Rank of the bilinear form: GF(2) rank of the Gram matrix, i.e.
/// n - dim rad(B_f) for quadratic f.
inline unsigned rank(const BooleanFunction& fn, const Field& f) {
    return gf2::rank(gram_matrix(fn, f), f.n());
}

/// Algebraic degree via the binary Moebius transform of the truth table;
/// nullopt for the zero function, 0 for the constant one.
inline std::optional<unsigned> algebraic_degree(const BooleanFunction& fn) {
    const std::uint64_t N = fn.size();
    std::vector<std::uint8_t> a(N);
    for (std::uint64_t x = 0; x < N; ++x) a[x] = static_cast<std::uint8_t>(fn.bit(x));
    for (unsigned i = 0; i < fn.n(); ++i) {
        const std::uint64_t step = std::uint64_t{1} << i;
        for (std::uint64_t x = 0; x < N; ++x)
            if (x & step) a[x] ^= a[x ^ step];
    }
    std::optional<unsigned> deg;
    for (std::uint64_t x = 0; x < N; ++x)
        if (a[x]) {
            const unsigned w = static_cast<unsigned>(std::popcount(x));
            if (!deg || w > *deg) deg = w;
        }
    return deg;
}

/// Cyclotomic cosets of 2 modulo 2^n - 1 (the zero coset included), each as
/// (minimum element, orbit size); sizes divide n.
inline std::vector<std::pair<std::uint64_t, unsigned>> coset_leaders(unsigned n) {
    if (n < 1 || n > 24) throw std::out_of_range("boolfun: coset_leaders supports 1 <= n <= 24");
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    if (m == 1) return {{0, 1}};  // n = 1: the only residue is 0
    std::vector<bool> seen(m, false);
    for (std::uint64_t r = 0; r < m; ++r) {
        if (seen[r]) continue;
        unsigned size = 0;
        std::uint64_t cur = r;
        do {
            seen[cur] = true;
            cur = (cur * 2) % m;
            ++size;
        } while (cur != r);
        out.emplace_back(r, size);
    }
    return out;
}

}  // namespace qbent

#endif  // QBENT_BOOLFUN_HPP_
