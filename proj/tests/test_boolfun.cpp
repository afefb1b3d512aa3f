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

#include <map>

#include "qbent/boolfun.hpp"
#include "qbent/constructions.hpp"
#include "qbent/selftest.hpp"
#include "test_helpers.hpp"

using namespace qbent;

namespace {

TraceRepr gold(const Field& f, const FieldElem& beta, unsigned i) {
    TraceRepr r(f);
    r.add_term(TraceTerm{f.n(), beta, (std::uint64_t{1} << i) + 1});
    return r;
}

BooleanFunction random_table(std::mt19937_64& r, unsigned n) {
    BooleanFunction fn(n);
    for (std::uint64_t x = 0; x < fn.size(); ++x) fn.set_bit(x, static_cast<int>(r() & 1));
    return fn;
}

}  // namespace

TEST_CASE("trace term validation") {
    const Field f = make_field(4);
    CHECK_THROWS_AS(TraceRepr(f, {TraceTerm{3, f.one(), 1}}), std::invalid_argument);
    // g generates GF(16)* and is not in GF(4), so it cannot carry a
    // subfield-2 term.
    CHECK_THROWS_AS(TraceRepr(f, {TraceTerm{2, f.element(2), 5}}), std::invalid_argument);
    CHECK_THROWS_AS(TraceRepr(f, {TraceTerm{4, f.one(), 16}}), std::invalid_argument);
    CHECK_NOTHROW(TraceRepr(f, {TraceTerm{2, f.element(6), 5}}));  // g^5 lies in GF(4)
    CHECK_THROWS_AS(TraceRepr(f, {TraceTerm{4, make_field(2).one(), 1}}),
                    std::invalid_argument);
}

TEST_CASE("canonical form check") {
    const Field f = make_field(4);
    TraceRepr canon(f);
    canon.add_term(TraceTerm{4, f.one(), 3});  // 3 is a coset leader, orbit size 4
    CHECK(canon.canonical());
    TraceRepr off(f);
    off.add_term(TraceTerm{4, f.one(), 9});  // 9 is in the orbit of 3
    CHECK_FALSE(off.canonical());
    TraceRepr wrong_size(f);
    wrong_size.add_term(TraceTerm{4, f.one(), 5});  // orbit {5, 10} has size 2
    CHECK_FALSE(wrong_size.canonical());
}

TEST_CASE("eval_trace") {
    const Field f = make_field(4);
    SECTION("empty representation is identically zero") {
        const TraceRepr r(f);
        for (std::uint64_t b = 0; b < 16; ++b) CHECK(eval_trace(r, f.element(b)) == 0);
    }
    SECTION("Tr_1^4(x^3) at 0 and 1") {
        const TraceRepr r = gold(f, f.one(), 1);
        CHECK(eval_trace(r, f.zero()) == 0);
        CHECK(eval_trace(r, f.one()) == 0);  // four equal summands in char 2
    }
    SECTION("constant term via r = 0 behaves as Tr(beta)") {
        TraceRepr r(f);
        r.add_term(TraceTerm{1, f.one(), 0});
        for (std::uint64_t b = 0; b < 16; ++b) CHECK(eval_trace(r, f.element(b)) == 1);
    }
    SECTION("a term whose value escapes its subfield is rejected") {
        // Tr_1^2(beta x) with beta in GF(4): x itself roams all of GF(16).
        TraceRepr r(f);
        r.add_term(TraceTerm{2, f.element(6), 1});
        CHECK_THROWS_AS(eval_trace(r, f.element(2)), std::invalid_argument);
    }
}

TEST_CASE("truth_table") {
    SECTION("zero representation, table length") {
        const Field f = make_field(4);
        const BooleanFunction tt = truth_table(TraceRepr(f));
        CHECK(tt.size() == 16);
        CHECK(tt.weight() == 0);
    }
    SECTION("n=2: Tr_1^2(x^3) vanishes everywhere") {
        const Field f = make_field(2);
        const BooleanFunction tt = truth_table(gold(f, f.one(), 1));
        CHECK(tt.weight() == 0);
    }
    SECTION("fast paths match pointwise eval_trace") {
        auto r = testing::rng(61);
        for (unsigned n : {4u, 6u}) {
            const Field f = make_field(n);
            for (int i = 0; i < 50; ++i) {
                const TraceRepr repr = testing::rand_quadratic(r, f);
                const BooleanFunction tt = truth_table(repr);
                for (std::uint64_t b = 0; b < f.size(); ++b)
                    REQUIRE(tt.bit(b) == eval_trace(repr, f.element(b)));
            }
        }
    }
    SECTION("generic-exponent path (more than two bits set)") {
        const Field f = make_field(4);
        TraceRepr repr(f);
        repr.add_term(TraceTerm{4, f.element(0x5), 7});  // x^7, three bits
        const BooleanFunction tt = truth_table(repr);
        for (std::uint64_t b = 0; b < 16; ++b)
            CHECK(tt.bit(b) == eval_trace(repr, f.element(b)));
    }
    SECTION("subfield escape is caught in the fast path too") {
        const Field f = make_field(4);
        TraceRepr repr(f);
        repr.add_term(TraceTerm{2, f.element(6), 1});
        CHECK_THROWS_AS(truth_table(repr), std::invalid_argument);
    }
}

TEST_CASE("walsh spectrum") {
    SECTION("constant zero function") {
        const Field f = make_field(4);
        const WalshSpectrum s = walsh_spectrum(BooleanFunction(4), f);
        CHECK(s.at(0) == 16);
        for (std::uint64_t a = 1; a < 16; ++a) CHECK(s.at(a) == 0);
    }
    SECTION("Parseval on random tables") {
        auto r = testing::rng(62);
        for (unsigned n : {4u, 6u, 8u}) {
            const Field f = make_field(n);
            for (int i = 0; i < 20; ++i) {
                const WalshSpectrum s = walsh_spectrum(random_table(r, n), f);
                std::uint64_t energy = 0;
                for (const auto v : s.values())
                    energy += static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(v);
                REQUIRE(energy == std::uint64_t{1} << (2 * n));
            }
        }
    }
    SECTION("fast transform equals the naive double sum") {
        auto r = testing::rng(63);
        for (unsigned n : {2u, 3u}) {  // exhaustive over all tables
            const Field f = make_field(n);
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (1u << n)); ++bits) {
                BooleanFunction fn(n);
                for (std::uint64_t x = 0; x < fn.size(); ++x)
                    fn.set_bit(x, static_cast<int>((bits >> x) & 1));
                REQUIRE(walsh_spectrum(fn, f).values() == selftest::naive_walsh(fn, f));
            }
        }
        for (unsigned n : {4u, 5u, 6u}) {
            const Field f = make_field(n);
            for (int i = 0; i < 100; ++i) {
                const BooleanFunction fn = random_table(r, n);
                REQUIRE(walsh_spectrum(fn, f).values() == selftest::naive_walsh(fn, f));
            }
        }
    }
    SECTION("fast equals naive under a non-default modulus") {
        const Field f = Field::make(4, 0x19);  // x^4 + x^3 + 1
        auto r = testing::rng(68);
        for (int i = 0; i < 50; ++i) {
            const BooleanFunction fn = random_table(r, 4);
            REQUIRE(walsh_spectrum(fn, f).values() == selftest::naive_walsh(fn, f));
        }
    }
    SECTION("per-point values of two n=4 quadratics") {
        const Field f = make_field(4);
        // Tr(x^3): coefficient 1 is a cube, the spectrum degenerates to {0, +-8}
        const WalshSpectrum s1 = walsh_spectrum(truth_table(gold(f, f.one(), 1)), f);
        CHECK(s1.at(0) == -8);
        CHECK(s1.at(1) == 8);
        CHECK(s1.at(6) == 8);
        CHECK(s1.at(7) == 8);
        std::map<std::int64_t, int> hist;
        for (const auto v : s1.values()) ++hist[v];
        CHECK(hist[0] == 12);
        // Tr(a^4 x^3) with a a non-cube is flat of magnitude 4
        const WalshSpectrum s2 =
            walsh_spectrum(truth_table(gold(f, pow(f.element(2), 4), 1)), f);
        for (const auto v : s2.values()) CHECK((v == 4 || v == -4));
    }
}

TEST_CASE("is_bent") {
    const Field f = make_field(4);
    SECTION("constants are not bent") {
        CHECK_FALSE(is_bent(BooleanFunction(4), f));
    }
    SECTION("half-trace Gold form at n=4 is bent, full-trace with cube coefficient is not") {
        TraceRepr half(f);
        half.add_term(TraceTerm{2, f.one(), 5});
        CHECK(is_bent(truth_table(half), f));
        CHECK_FALSE(is_bent(truth_table(gold(f, f.one(), 1)), f));
        CHECK(is_bent(truth_table(gold(f, pow(f.element(2), 4), 1)), f));
    }
    SECTION("odd n is rejected") {
        CHECK_THROWS_AS(is_bent(BooleanFunction(3), make_field(3)), std::domain_error);
    }
    SECTION("size mismatch and the table cap") {
        CHECK_THROWS_AS(walsh_spectrum(BooleanFunction(4), make_field(6)),
                        std::invalid_argument);
        CHECK_THROWS_AS(truth_table(TraceRepr(make_field(26))), std::out_of_range);
    }
    SECTION("bentness is invariant under affine terms") {
        auto r = testing::rng(64);
        for (unsigned n : {4u, 6u}) {
            const Field fn = make_field(n);
            for (int i = 0; i < 100; ++i) {
                const BooleanFunction fn_tt = truth_table(testing::rand_quadratic(r, fn));
                const FieldElem b = testing::rand_elem(r, fn);
                const int eps = static_cast<int>(r() & 1);
                BooleanFunction shifted = fn_tt;
                for (std::uint64_t x = 0; x < shifted.size(); ++x) {
                    const int affine =
                        static_cast<int>(trace(b * fn.element(x), 1).bits()) ^ eps;
                    shifted.set_bit(x, shifted.bit(x) ^ affine);
                }
                REQUIRE(is_bent(fn_tt, fn) == is_bent(shifted, fn));
            }
        }
    }
}

TEST_CASE("gram matrix and rank") {
    const Field f = make_field(4);
    SECTION("zero and linear functions have zero Gram matrix") {
        const auto rows0 = gram_matrix(BooleanFunction(4), f);
        for (const auto row : rows0) CHECK(row == 0);
        TraceRepr lin(f);
        lin.add_term(TraceTerm{4, f.element(0x7), 1});
        const auto rows1 = gram_matrix(truth_table(lin), f);
        for (const auto row : rows1) CHECK(row == 0);
        CHECK(rank(BooleanFunction(4), f) == 0);
    }
    SECTION("frozen ranks at n=4") {
        TraceRepr half(f);
        half.add_term(TraceTerm{2, f.one(), 5});
        CHECK(rank(truth_table(half), f) == 4);
        CHECK(rank(truth_table(gold(f, f.one(), 1)), f) == 2);
    }
    SECTION("bilinearity of B_f for quadratic f") {
        auto r = testing::rng(65);
        const Field f6 = make_field(6);
        for (int i = 0; i < 100; ++i) {
            const BooleanFunction tt =
                truth_table(testing::rand_quadratic(r, f6, /*with_constant=*/false));
            const auto B = [&](std::uint64_t x, std::uint64_t y) {
                return tt.bit(x ^ y) ^ tt.bit(x) ^ tt.bit(y);
            };
            for (int k = 0; k < 20; ++k) {
                const std::uint64_t x = r() & 63, y = r() & 63, z = r() & 63;
                REQUIRE((B(x ^ y, z) ^ B(x, z) ^ B(y, z)) == 0);
            }
        }
    }
    SECTION("quadratic forms have even rank") {
        auto r = testing::rng(66);
        const Field f8 = make_field(8);
        for (int i = 0; i < 1000; ++i) {
            const unsigned rk = rank(
                truth_table(testing::rand_quadratic(r, f8, /*with_constant=*/false)), f8);
            REQUIRE(rk % 2 == 0);
        }
    }
    SECTION("bent iff full rank (exhaustive ma instances at n=4,6 plus random at n=8)") {
        for (unsigned n : {4u, 6u}) {
            const Field fn = make_field(n);
            const unsigned len = n / 2 - 1;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
                std::vector<std::uint8_t> c(len);
                for (unsigned i = 0; i < len; ++i) c[i] = (mask >> i) & 1;
                const BooleanFunction tt =
                    truth_table(constructions::construct_ma(fn, {n, c}));
                REQUIRE(is_bent(tt, fn) == (rank(tt, fn) == n));
            }
        }
        auto r = testing::rng(67);
        const Field f8 = make_field(8);
        for (int i = 0; i < 100; ++i) {
            const BooleanFunction tt = truth_table(testing::rand_quadratic(r, f8));
            REQUIRE(is_bent(tt, f8) == (rank(tt, f8) == 8));
        }
    }
}

TEST_CASE("algebraic degree") {
    const Field f = make_field(4);
    SECTION("constants and the zero marker") {
        BooleanFunction ones(4);
        for (std::uint64_t x = 0; x < 16; ++x) ones.set_bit(x, 1);
        CHECK(algebraic_degree(ones) == std::optional<unsigned>{0});
        CHECK_FALSE(algebraic_degree(BooleanFunction(4)).has_value());
    }
    SECTION("Gold form has degree 2, affine forms degree 1") {
        CHECK(algebraic_degree(truth_table(gold(f, f.one(), 1))) ==
              std::optional<unsigned>{2});
        TraceRepr lin(f);
        lin.add_term(TraceTerm{4, f.element(0x7), 1});
        CHECK(algebraic_degree(truth_table(lin)) == std::optional<unsigned>{1});
    }
}

TEST_CASE("cyclotomic cosets") {
    SECTION("n=2 and n=4 frozen tables") {
        const auto c2 = coset_leaders(2);
        REQUIRE(c2 == std::vector<std::pair<std::uint64_t, unsigned>>{{0, 1}, {1, 2}});
        const auto c4 = coset_leaders(4);
        REQUIRE(c4 == std::vector<std::pair<std::uint64_t, unsigned>>{
                          {0, 1}, {1, 4}, {3, 4}, {5, 2}, {7, 4}});
    }
    SECTION("coset leaders with coset sizes form canonical trace terms") {
        for (unsigned n : {4u, 6u}) {
            const Field f = make_field(n);
            for (const auto& [leader, size] : coset_leaders(n)) {
                // any coefficient of the subfield of size 2^size works; take
                // a relative trace image and fall back to 1 if it vanishes
                FieldElem beta = trace(f.element(3), size);
                if (beta.is_zero()) beta = f.one();
                TraceRepr repr(f);
                repr.add_term(TraceTerm{size, beta, leader});
                REQUIRE(repr.canonical());
            }
        }
    }
    SECTION("sizes partition 2^n - 1 and divide n") {
        for (unsigned n : {4u, 6u, 8u, 11u}) {
            std::uint64_t total = 0;
            for (const auto& [leader, size] : coset_leaders(n)) {
                total += size;
                REQUIRE(n % size == 0);
            }
            CHECK(total == (std::uint64_t{1} << n) - 1);
        }
    }
}

TEST_CASE("truth-table digest") {
    const Field f = make_field(4);
    TraceRepr half(f);
    half.add_term(TraceTerm{2, f.one(), 5});
    const BooleanFunction a = truth_table(half);
    CHECK(tt_digest(a) == tt_digest(a));
    CHECK(tt_digest(a) != tt_digest(BooleanFunction(4)));
}
