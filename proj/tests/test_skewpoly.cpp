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
#include <catch2/catch_amalgamated.hpp>

#include "qbent/constructions.hpp"
#include "qbent/linpoly.hpp"
#include "qbent/skewpoly.hpp"
#include "test_helpers.hpp"

using namespace qbent;

TEST_CASE("twisted multiplication") {
    const Field f4 = make_field(2);
    const FieldElem alpha = f4.element(2);
    const SkewPoly x = SkewPoly::monomial(f4.one(), 1);

    SECTION("x * b = b^2 x for every constant b") {
        for (std::uint64_t bb = 0; bb < 4; ++bb) {
            const FieldElem b = f4.element(bb);
            CHECK(smul(x, SkewPoly::monomial(b, 0)) == SkewPoly::monomial(b * b, 1));
        }
    }
    SECTION("1 is a two-sided identity") {
        auto r = testing::rng(5);
        const Field f = make_field(4);
        for (int i = 0; i < 100; ++i) {
            const SkewPoly p = testing::rand_skew(r, f, 6);
            CHECK(smul(p, SkewPoly::one(f)) == p);
            CHECK(smul(SkewPoly::one(f), p) == p);
        }
    }
    SECTION("(alpha x)(alpha x) = x^2 over GF(4)") {
        const SkewPoly ax = SkewPoly::monomial(alpha, 1);
        CHECK(smul(ax, ax) == SkewPoly::monomial(f4.one(), 2));  // alpha^3 = 1
    }
    SECTION("noncommutativity witness: x * alpha != alpha * x") {
        const SkewPoly ca = SkewPoly::monomial(alpha, 0);
        CHECK(smul(x, ca) == SkewPoly::monomial(alpha * alpha, 1));
        CHECK(smul(ca, x) == SkewPoly::monomial(alpha, 1));
        CHECK(smul(x, ca) != smul(ca, x));
    }
    SECTION("degrees add for nonzero factors") {
        auto r = testing::rng(6);
        const Field f = make_field(6);
        for (int i = 0; i < 200; ++i) {
            SkewPoly a = testing::rand_skew(r, f, 5);
            SkewPoly b = testing::rand_skew(r, f, 5);
            if (a.is_zero() || b.is_zero()) continue;
            CHECK(*smul(a, b).degree() == *a.degree() + *b.degree());
        }
    }
    SECTION("associativity and distributivity") {
        auto r = testing::rng(8);
        for (unsigned n : {2u, 4u, 6u}) {
            const Field f = make_field(n);
            for (int i = 0; i < 200; ++i) {
                const SkewPoly a = testing::rand_skew(r, f, 4);
                const SkewPoly b = testing::rand_skew(r, f, 4);
                const SkewPoly c = testing::rand_skew(r, f, 4);
                REQUIRE(smul(smul(a, b), c) == smul(a, smul(b, c)));
                REQUIRE(smul(a, b + c) == smul(a, b) + smul(a, c));
                REQUIRE(smul(a + b, c) == smul(a, c) + smul(b, c));
            }
        }
    }
    SECTION("mismatched fields are rejected") {
        CHECK_THROWS_AS(smul(SkewPoly::one(f4), SkewPoly::one(make_field(4))),
                        std::invalid_argument);
    }
}

TEST_CASE("zero polynomial has no degree") {
    const Field f = make_field(2);
    CHECK_FALSE(SkewPoly::zero(f).degree().has_value());
    CHECK(SkewPoly::one(f).degree() == std::optional<std::size_t>{0});
    CHECK_THROWS_AS(SkewPoly::zero(f).leading(), std::domain_error);
}

TEST_CASE("right division") {
    const Field f16 = make_field(4);
    const FieldElem a = f16.element(2);  // non-cube generator

    SECTION("g / g and f / 1") {
        auto r = testing::rng(9);
        for (int i = 0; i < 100; ++i) {
            SkewPoly g = testing::rand_skew(r, f16, 6);
            if (g.is_zero()) continue;
            const auto [q1, r1] = right_divide(g, g);
            CHECK(q1 == SkewPoly::one(f16));
            CHECK(r1.is_zero());
            const auto [q2, r2] = right_divide(g, SkewPoly::one(f16));
            CHECK(q2 == g);
            CHECK(r2.is_zero());
        }
    }
    SECTION("low-degree dividend returns (0, f)") {
        const SkewPoly lo = SkewPoly::monomial(a, 1);
        const SkewPoly hi = SkewPoly::monomial(f16.one(), 3);
        const auto [q, rem] = right_divide(lo, hi);
        CHECK(q.is_zero());
        CHECK(rem == lo);
    }
    SECTION("worked n=4 case: x^4 + 1 divided by p1") {
        // p1 = a^-1 x + a^-3 x^3 over GF(16) with a the class of x
        const SkewPoly p1 = build_p1(f16, a);
        REQUIRE(p1 == SkewPoly(f16, {f16.zero(), f16.element(0x9), f16.zero(),
                                     f16.element(0xf)}));
        const auto [q, rem] = right_divide(SkewPoly::x_pow_n_plus_one(f16), p1);
        // quotient a^6 x, remainder a^4 x^2 + 1
        CHECK(q == SkewPoly::monomial(f16.element(0xc), 1));
        CHECK(rem == SkewPoly(f16, {f16.one(), f16.zero(), f16.element(0x3)}));
        CHECK(smul(q, p1) + rem == SkewPoly::x_pow_n_plus_one(f16));

        // second Euclid step: p1 divided by that remainder
        const auto [q2, rem2] = right_divide(p1, rem);
        CHECK(q2 == SkewPoly::monomial(f16.element(0x3), 1));          // a^4 x
        CHECK(rem2 == SkewPoly::monomial(f16.element(0xa), 1));        // (a^-1 + a^4) x
    }
    SECTION("division identity and degree bound on random pairs") {
        auto r = testing::rng(10);
        for (unsigned n : {2u, 4u, 6u, 8u}) {
            const Field f = make_field(n);
            for (int i = 0; i < 1000; ++i) {
                const SkewPoly a1 = testing::rand_skew(r, f, 2 * n);
                SkewPoly b1 = testing::rand_skew(r, f, n);
                if (b1.is_zero()) b1 = SkewPoly::one(f);
                const auto [q, rem] = right_divide(a1, b1);
                REQUIRE(smul(q, b1) + rem == a1);
                REQUIRE((rem.is_zero() || *rem.degree() < *b1.degree()));
            }
        }
    }
    SECTION("rrem") {
        auto r = testing::rng(12);
        const SkewPoly p = testing::rand_skew(r, f16, 5);
        if (!p.is_zero()) CHECK(rrem(p, p).is_zero());
        const SkewPoly p1 = build_p1(f16, a);
        CHECK(rrem(SkewPoly::x_pow_n_plus_one(f16), p1) ==
              SkewPoly(f16, {f16.one(), f16.zero(), f16.element(0x3)}));
    }
    SECTION("division by zero") {
        CHECK_THROWS_AS(right_divide(SkewPoly::one(f16), SkewPoly::zero(f16)),
                        std::domain_error);
    }
}

TEST_CASE("gcrd") {
    const Field f16 = make_field(4);
    const FieldElem a = f16.element(2);

    SECTION("gcrd with zero is the monic normalization") {
        auto r = testing::rng(14);
        for (int i = 0; i < 50; ++i) {
            SkewPoly p = testing::rand_skew(r, f16, 5);
            if (p.is_zero()) continue;
            CHECK(gcrd(p, SkewPoly::zero(f16)) == monic(p));
            CHECK(gcrd(SkewPoly::zero(f16), p) == monic(p));
        }
        CHECK_THROWS_AS(gcrd(SkewPoly::zero(f16), SkewPoly::zero(f16)), std::domain_error);
    }
    SECTION("output is monic and right-divides both inputs") {
        auto r = testing::rng(15);
        for (unsigned n : {2u, 4u, 6u}) {
            const Field f = make_field(n);
            for (int i = 0; i < 300; ++i) {
                const SkewPoly u = testing::rand_skew(r, f, 7);
                const SkewPoly v = testing::rand_skew(r, f, 7);
                if (u.is_zero() && v.is_zero()) continue;
                const SkewPoly w = gcrd(u, v);
                REQUIRE(w.leading() == f.one());
                if (!u.is_zero()) REQUIRE(rrem(u, w).is_zero());
                if (!v.is_zero()) REQUIRE(rrem(v, w).is_zero());
            }
        }
    }
    SECTION("maximality: a planted common right divisor divides the gcrd") {
        auto r = testing::rng(19);
        for (unsigned n : {2u, 4u, 6u}) {
            const Field f = make_field(n);
            for (int i = 0; i < 300; ++i) {
                SkewPoly w = testing::rand_skew(r, f, 4);
                if (w.is_zero()) w = SkewPoly::one(f);
                const SkewPoly u = testing::rand_skew(r, f, 4);
                const SkewPoly v = testing::rand_skew(r, f, 4);
                const SkewPoly fp = smul(u, w), gp = smul(v, w);
                if (fp.is_zero() && gp.is_zero()) continue;
                const SkewPoly d = gcrd(fp, gp);
                REQUIRE(rrem(d, w).is_zero());
                REQUIRE(*d.degree() >= *w.degree());
            }
        }
    }
    SECTION("symmetry up to the monic normalization") {
        auto r = testing::rng(16);
        const Field f = make_field(4);
        for (int i = 0; i < 200; ++i) {
            const SkewPoly u = testing::rand_skew(r, f, 6);
            const SkewPoly v = testing::rand_skew(r, f, 6);
            if (u.is_zero() && v.is_zero()) continue;
            CHECK(gcrd(u, v) == gcrd(v, u));
        }
    }
    SECTION("GF(2)-coefficient inputs reduce to the ordinary gcd") {
        auto r = testing::rng(18);
        const Field f = make_field(6);
        for (int i = 0; i < 1000; ++i) {
            const std::uint64_t u = r() & 0x3ff, v = r() & 0x3ff;
            if (u == 0 && v == 0) continue;
            std::vector<FieldElem> uc, vc;
            for (int j = 0; j < 10; ++j) {
                uc.push_back((u >> j) & 1 ? f.one() : f.zero());
                vc.push_back((v >> j) & 1 ? f.one() : f.zero());
            }
            const SkewPoly w = gcrd(SkewPoly(f, uc), SkewPoly(f, vc));
            std::uint64_t bits = 0;
            for (std::size_t j = 0; j < w.coeffs().size(); ++j)
                if (!w.coeff(j).is_zero()) bits |= std::uint64_t{1} << j;
            REQUIRE(bits == constructions::gcd_f2(u, v));
        }
    }
    SECTION("p1 is right-coprime to x^n + 1, cross-checked by brute force") {
        const SkewPoly p1 = build_p1(f16, a);
        const SkewPoly w = gcrd(p1, SkewPoly::x_pow_n_plus_one(f16));
        CHECK(w == SkewPoly::one(f16));
        // independent route: the companion linearized polynomial permutes GF(16)
        CHECK(testing::perm_exhaustive(build_P(f16, a)));
    }
}

TEST_CASE("skew text form") {
    const Field f = make_field(4);
    CHECK(SkewPoly::x_pow_n_plus_one(f).to_string() == "1 x^4 + 1");
    CHECK(SkewPoly::zero(f).to_string() == "0");
    CHECK(SkewPoly(f, {f.element(0xa), f.element(0x9)}).to_string() == "9 x + a");
}
