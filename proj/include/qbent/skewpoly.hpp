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
#ifndef QBENT_SKEWPOLY_HPP_
#define QBENT_SKEWPOLY_HPP_

#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbent/gf2n.hpp"

// The twisted polynomial ring F_{2^n}[x; sigma], sigma the Frobenius
// x -> x^2.  Addition is coefficient-wise; multiplication obeys
// (a x^i) * (b x^j) = a b^(2^i) x^(i+j), so x b = b^2 x and the ring is
// not commutative.  Units are the nonzero constants, which is why gcrd is
// normalized monic and "coprime" means "gcrd of degree 0".
namespace qbent {

class SkewPoly {
  public:
    explicit SkewPoly(const Field& f) : field_(f) {}

    SkewPoly(const Field& f, std::vector<FieldElem> coeffs) : field_(f) {
        for (const auto& c : coeffs)
            if (c.field() != f)
                throw std::invalid_argument("skewpoly: coefficient from a different field");
        coeffs_ = std::move(coeffs);
        trim();
    }

    static SkewPoly zero(const Field& f) { return SkewPoly(f); }
    static SkewPoly one(const Field& f) { return SkewPoly(f, {f.one()}); }

    static SkewPoly monomial(const FieldElem& c, std::size_t k) {
        SkewPoly p(c.field());
        if (!c.is_zero()) {
            p.coeffs_.assign(k + 1, c.field().zero());
            p.coeffs_[k] = c;
        }
        return p;
    }

    /// x^n + 1 for n the extension degree of f.
    static SkewPoly x_pow_n_plus_one(const Field& f) {
        std::vector<FieldElem> c(f.n() + 1, f.zero());
        c[0] = f.one();
        c[f.n()] = f.one();
        return SkewPoly(f, std::move(c));
    }

    const Field& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial (which has no degree).
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    FieldElem coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : field_.zero();
    }
    std::span<const FieldElem> coeffs() const { return coeffs_; }

    FieldElem leading() const {
        if (coeffs_.empty()) throw std::domain_error("skewpoly: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    SkewPoly& operator+=(const SkewPoly& o) {
        check_same(*this, o);
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), field_.zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }

    /// Left multiplication by a constant: c * (sum a_i x^i) = sum (c a_i) x^i.
    SkewPoly scaled_left(const FieldElem& c) const {
        if (c.field() != field_)
            throw std::invalid_argument("skewpoly: scalar from a different field");
        if (c.is_zero()) return SkewPoly(field_);
        SkewPoly r(field_);
        r.coeffs_ = coeffs_;
        for (auto& a : r.coeffs_) a *= c;
        r.trim();
        return r;
    }

    friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << to_hex(coeffs_[i]);
            if (i == 1)
                os << " x";
            else if (i > 1)
                os << " x^" << i;
        }
        return os.str();
    }

    static void check_same(const SkewPoly& a, const SkewPoly& b) {
        if (a.field_ != b.field_)
            throw std::invalid_argument("skewpoly: operands over different fields");
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    Field field_;
    std::vector<FieldElem> coeffs_;  // coeffs_[i] multiplies x^i; no trailing zeros
};

/// Twisted product: bilinear extension of (a x^i)(b x^j) = a b^(2^i) x^(i+j).
inline SkewPoly smul(const SkewPoly& f, const SkewPoly& g) {
    SkewPoly::check_same(f, g);
    const Field& fl = f.field();
    if (f.is_zero() || g.is_zero()) return SkewPoly(fl);
    const std::size_t df = *f.degree(), dg = *g.degree();
    std::vector<FieldElem> out(df + dg + 1, fl.zero());
    for (std::size_t i = 0; i <= df; ++i) {
        const FieldElem a = f.coeff(i);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j <= dg; ++j) {
            const FieldElem b = g.coeff(j);
            if (b.is_zero()) continue;
            out[i + j] += a * frobenius(b, static_cast<std::int64_t>(i));
        }
    }
    return SkewPoly(fl, std::move(out));
}

inline SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) { return smul(f, g); }

struct SkewDivision {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// Right division: the unique Q, R with f = Q * g + R and R = 0 or
/// deg R < deg g.  Peels the top coefficient of the running remainder with
/// h = (f_i / g_s^(2^(i-s))) x^(i-s) for i = deg f down to deg g, since
/// (c x^(i-s)) * (g_s x^s) = c g_s^(2^(i-s)) x^i.
inline SkewDivision right_divide(const SkewPoly& f, const SkewPoly& g) {
    SkewPoly::check_same(f, g);
    const Field& fl = f.field();
    if (g.is_zero()) throw std::domain_error("skewpoly: right division by zero");
    if (f.is_zero() || *f.degree() < *g.degree())
        return {SkewPoly(fl), f};

    const std::size_t r = *f.degree(), s = *g.degree();
    std::vector<FieldElem> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<FieldElem> q(r - s + 1, fl.zero());
    for (std::size_t i = r + 1; i-- > s;) {
        if (rem[i].is_zero()) continue;
        const auto shift = static_cast<std::int64_t>(i - s);
        const FieldElem c = rem[i] / frobenius(g.leading(), shift);
        q[i - s] = c;
        // rem -= (c x^(i-s)) * g
        for (std::size_t j = 0; j <= s; ++j) {
            const FieldElem gj = g.coeff(j);
            if (!gj.is_zero()) rem[i - s + j] += c * frobenius(gj, shift);
        }
    }
    rem.resize(s);
    return {SkewPoly(fl, std::move(q)), SkewPoly(fl, std::move(rem))};
}

/// Remainder of right division.
inline SkewPoly rrem(const SkewPoly& f, const SkewPoly& g) {
    return right_divide(f, g).remainder;
}

/// Monic normalization: left-multiply by the inverse of the leading
/// coefficient (left, so coefficients scale without twisting).
inline SkewPoly monic(const SkewPoly& f) {
    if (f.is_zero()) throw std::domain_error("skewpoly: cannot normalize the zero polynomial");
    return f.scaled_left(f.leading().inverse());
}

/// Greatest common right divisor via the right Euclid scheme, returned
/// monic.  gcrd(f, 0) = monic(f); gcrd(0, 0) is rejected.
inline SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) {
    SkewPoly::check_same(f, g);
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("skewpoly: gcrd(0, 0) undefined");
    SkewPoly a = f, b = g;
    while (!b.is_zero()) {
        SkewPoly t = rrem(a, b);
        a = std::move(b);
        b = std::move(t);
    }
    return monic(a);
}

}  // namespace qbent

#endif  // QBENT_SKEWPOLY_HPP_
