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
#ifndef QBENT_GF2N_HPP_
#define QBENT_GF2N_HPP_

#include <bit>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qbent/gf2linalg.hpp"
#include "qbent/gf2poly.hpp"

// Exact arithmetic in GF(2^n), 1 <= n <= 32, in a fixed polynomial basis
// 1, x, ..., x^{n-1}.  An element is the n-bit coordinate vector packed
// little-endian (bit i = coefficient of x^i); all I/O prints that bit
// pattern as lowercase hex.  Everything here is an immutable value; every
// operation is a pure function.
namespace qbent {

class FieldElem;

class Field {
  public:
    Field() = default;  // degenerate placeholder; elements are unusable

    /// Field with the built-in modulus (smallest irreducible of degree n).
    static Field make(unsigned n) {
        check_degree(n);
        return Field(n, gf2poly::kBuiltinModulus[n]);
    }

    /// Field with an explicit modulus; degree, constant term and
    /// irreducibility are validated.
    static Field make(unsigned n, std::uint64_t modulus) {
        check_degree(n);
        if (gf2poly::degree(modulus) != static_cast<int>(n))
            throw std::invalid_argument("gf2n: modulus degree != n");
        if ((modulus & 1) == 0)
            throw std::invalid_argument("gf2n: modulus constant term must be 1");
        if (!gf2poly::is_irreducible(modulus))
            throw std::invalid_argument("gf2n: modulus is reducible");
        return Field(n, modulus);
    }

    unsigned n() const { return n_; }
    std::uint64_t modulus() const { return mod_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }
    std::uint64_t order() const { return (std::uint64_t{1} << n_) - 1; }
    bool valid() const { return n_ != 0; }

    FieldElem element(std::uint64_t bits) const;
    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_hex(std::string_view s) const;

    friend bool operator==(const Field&, const Field&) = default;

  private:
    Field(unsigned n, std::uint64_t mod) : n_(n), mod_(mod) {}
    static void check_degree(unsigned n) {
        if (n < 1 || n > 32)
            throw std::out_of_range("gf2n: extension degree must be in [1,32]");
    }

    unsigned n_ = 0;
    std::uint64_t mod_ = 0;
};

class FieldElem {
  public:
    FieldElem() = default;  // zero of the degenerate field

    const Field& field() const { return field_; }
    std::uint64_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    friend bool operator==(const FieldElem&, const FieldElem&) = default;

    FieldElem& operator+=(const FieldElem& o) {
        check_same(*this, o);
        bits_ ^= o.bits_;
        return *this;
    }
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }

    FieldElem& operator*=(const FieldElem& o) {
        check_same(*this, o);
        bits_ = reduce(clmul(bits_, o.bits_));
        return *this;
    }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }

    FieldElem squared() const {
        FieldElem r = *this;
        std::uint64_t wide = 0;
        std::uint64_t b = bits_;
        while (b) {
            const int i = std::countr_zero(b);
            wide |= std::uint64_t{1} << (2 * i);
            b &= b - 1;
        }
        r.bits_ = reduce(wide);
        return r;
    }

    FieldElem inverse() const {
        require_valid();
        if (bits_ == 0) throw std::domain_error("gf2n: inverse of zero");
        // x^(2^n - 2) by square-and-multiply.
        FieldElem acc = field_.one();
        FieldElem base = *this;
        std::uint64_t e = field_.order() - 1;
        while (e) {
            if (e & 1) acc *= base;
            base = base.squared();
            e >>= 1;
        }
        return acc;
    }

    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        return a * b.inverse();
    }

  private:
    friend class Field;
    FieldElem(const Field& f, std::uint64_t b) : field_(f), bits_(b) {}

    void require_valid() const {
        if (!field_.valid())
            throw std::invalid_argument("gf2n: operation on uninitialized element");
    }
    static void check_same(const FieldElem& a, const FieldElem& b) {
        a.require_valid();
        if (a.field_ != b.field_)
            throw std::invalid_argument("gf2n: elements belong to different fields");
    }

    static std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
        std::uint64_t r = 0;
        while (b) {
            r ^= a << std::countr_zero(b);
            b &= b - 1;
        }
        return r;
    }
    std::uint64_t reduce(std::uint64_t wide) const {
        const int n = static_cast<int>(field_.n());
        for (int k = gf2poly::degree(wide); k >= n; k = gf2poly::degree(wide))
            wide ^= field_.modulus() << (k - n);
        return wide;
    }

    Field field_{};
    std::uint64_t bits_ = 0;
};

inline FieldElem Field::element(std::uint64_t bits) const {
    if (!valid()) throw std::invalid_argument("gf2n: uninitialized field");
    if (bits >= size())
        throw std::out_of_range("gf2n: element bits exceed field size");
    return FieldElem(*this, bits);
}
inline FieldElem Field::zero() const { return element(0); }
inline FieldElem Field::one() const { return element(1); }

// ---- hex I/O ---------------------------------------------------------------

inline std::string to_hex(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

inline std::uint64_t parse_hex_u64(std::string_view s) {
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
        s.remove_prefix(2);
    if (s.empty()) throw std::invalid_argument("gf2n: empty hex string");
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("gf2n: malformed hex string '" + std::string(s) + "'");
    return v;
}

inline std::string to_hex(const FieldElem& e) { return to_hex(e.bits()); }

inline FieldElem Field::from_hex(std::string_view s) const {
    return element(parse_hex_u64(s));
}

inline std::ostream& operator<<(std::ostream& os, const FieldElem& e) {
    return os << to_hex(e);
}

// ---- modulus overrides ------------------------------------------------------

/// Optional substitution table for field moduli, loaded from a text file of
/// lines "n,hex-modulus" (e.g. "4,13" for x^4+x+1).  Blank lines and lines
/// starting with '#' are skipped.
struct ModulusOverrides {
    std::map<unsigned, std::uint64_t> table;

    static ModulusOverrides parse(std::istream& in) {
        ModulusOverrides ov;
        std::string line;
        while (std::getline(in, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("gf2n: override line missing ',': " + line);
            unsigned n = 0;
            const std::string_view ns(line.data() + first, comma - first);
            const auto [p, ec] = std::from_chars(ns.data(), ns.data() + ns.size(), n, 10);
            if (ec != std::errc{} || p != ns.data() + ns.size())
                throw std::invalid_argument("gf2n: bad degree in override line: " + line);
            std::string_view hs(line);
            hs.remove_prefix(comma + 1);
            while (!hs.empty() && (hs.front() == ' ' || hs.front() == '\t')) hs.remove_prefix(1);
            while (!hs.empty() && (hs.back() == '\r' || hs.back() == ' ' || hs.back() == '\t'))
                hs.remove_suffix(1);
            ov.table[n] = parse_hex_u64(hs);
        }
        return ov;
    }
};

inline Field make_field(unsigned n) { return Field::make(n); }

inline Field make_field(unsigned n, const ModulusOverrides& ov) {
    const auto it = ov.table.find(n);
    if (it != ov.table.end()) return Field::make(n, it->second);
    return Field::make(n);
}

// ---- operations -------------------------------------------------------------

/// x^k with the exponent reduced mod 2^n - 1 for nonzero x.  pow(0, k) = 0
/// for k > 0; 0^k with k <= 0 is rejected.
inline FieldElem pow(const FieldElem& x, std::int64_t k) {
    if (x.is_zero()) {
        if (k <= 0) throw std::domain_error("gf2n: pow(0, k) undefined for k <= 0");
        return x;
    }
    const auto m = static_cast<std::int64_t>(x.field().order());
    std::int64_t e = k % m;
    if (e < 0) e += m;
    FieldElem acc = x.field().one();
    FieldElem base = x;
    while (e) {
        if (e & 1) acc *= base;
        base = base.squared();
        e >>= 1;
    }
    return acc;
}

/// x^(2^k); k is taken modulo n (negative k allowed).
inline FieldElem frobenius(const FieldElem& x, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(x.field().n());
    std::int64_t r = k % n;
    if (r < 0) r += n;
    FieldElem y = x;
    for (std::int64_t i = 0; i < r; ++i) y = y.squared();
    return y;
}

/// Trace onto the subfield of size 2^d: Tr_d^n(x) = sum of x^(2^(d j)),
/// j = 0..n/d-1.  Requires d | n.
inline FieldElem trace(const FieldElem& x, unsigned d) {
    const unsigned n = x.field().n();
    if (d == 0 || n % d != 0)
        throw std::invalid_argument("gf2n: trace requires d | n");
    FieldElem acc = x.field().zero();
    FieldElem y = x;
    for (unsigned j = 0; j < n / d; ++j) {
        acc += y;
        for (unsigned s = 0; s < d; ++s) y = y.squared();
    }
    return acc;
}

/// Cube test for even n (so 3 | 2^n - 1): x is a cube iff x^((2^n-1)/3) = 1.
inline bool is_cube(const FieldElem& x) {
    const unsigned n = x.field().n();
    if (n % 2 != 0) throw std::domain_error("gf2n: is_cube requires even n");
    if (x.is_zero()) throw std::domain_error("gf2n: is_cube of zero");
    return pow(x, static_cast<std::int64_t>(x.field().order() / 3)) == x.field().one();
}

/// All non-cubes of an even-degree field in ascending bit-pattern order;
/// cardinality 2(2^n - 1)/3.
inline std::vector<FieldElem> noncubes(const Field& f) {
    if (f.n() % 2 != 0) throw std::domain_error("gf2n: noncubes requires even n");
    std::vector<FieldElem> out;
    out.reserve(2 * (f.order() / 3));
    for (std::uint64_t b = 1; b < f.size(); ++b) {
        const FieldElem e = f.element(b);
        if (!is_cube(e)) out.push_back(e);
    }
    return out;
}

/// Solve c + c^(2^(n/2)) = t for t in the half-size subfield; returns the
/// solution with the smallest bit pattern.  The map is GF(2)-linear with
/// kernel the half-size subfield, so the solution set is an affine space.
inline FieldElem solve_relative_trace(const Field& f, const FieldElem& t) {
    const unsigned n = f.n();
    if (n % 2 != 0)
        throw std::domain_error("gf2n: solve_relative_trace requires even n");
    if (t.field() != f)
        throw std::invalid_argument("gf2n: t belongs to a different field");
    if (frobenius(t, n / 2) != t)
        throw std::invalid_argument("gf2n: t is not in the half-size subfield");

    std::vector<std::uint64_t> rows(n, 0);
    for (unsigned j = 0; j < n; ++j) {
        const FieldElem ej = f.element(std::uint64_t{1} << j);
        const std::uint64_t img = (ej + frobenius(ej, n / 2)).bits();
        for (unsigned i = 0; i < n; ++i) rows[i] |= ((img >> i) & 1) << j;
    }
    const auto sol = gf2::solve(rows, t.bits(), n);
    if (!sol) throw std::logic_error("gf2n: relative trace equation inconsistent");
    return f.element(gf2::coset_min(sol->particular, sol->kernel));
}

/// Dual basis: for a GF(2)-basis b_0..b_{n-1} returns d_0..d_{n-1} with
/// Tr(b_i d_j) = delta_ij.  Throws on a linearly dependent input.
inline std::vector<FieldElem> dual_basis(const Field& f,
                                         std::span<const FieldElem> basis) {
    const unsigned n = f.n();
    if (basis.size() != n)
        throw std::invalid_argument("gf2n: dual_basis needs exactly n elements");
    std::vector<std::uint64_t> rows(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (basis[i].field() != f)
            throw std::invalid_argument("gf2n: basis element from a different field");
        for (unsigned k = 0; k < n; ++k) {
            const FieldElem ek = f.element(std::uint64_t{1} << k);
            rows[i] |= (trace(basis[i] * ek, 1).bits() & 1) << k;
        }
    }
    std::vector<FieldElem> dual;
    dual.reserve(n);
    for (unsigned j = 0; j < n; ++j) {
        const auto sol = gf2::solve(rows, std::uint64_t{1} << j, n);
        if (!sol || !sol->kernel.empty())
            throw std::invalid_argument("gf2n: basis is linearly dependent");
        dual.push_back(f.element(sol->particular));
    }
    return dual;
}

}  // namespace qbent

#endif  // QBENT_GF2N_HPP_
