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
#ifndef QBENT_SELFTEST_HPP_
#define QBENT_SELFTEST_HPP_

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qbent/boolfun.hpp"
#include "qbent/constructions.hpp"
#include "qbent/gf2n.hpp"
#include "qbent/linpoly.hpp"
#include "qbent/skewpoly.hpp"

// The full verification suite: every family criterion replayed against the
// Walsh transform on its whole parameter grid, the algorithmic contracts of
// the twisted ring, and the counting/degree/novelty checks.  Shared by the
// standalone acceptance binary and the CLI `selftest` subcommand.  All
// randomized parts draw from a seeded mt19937_64 using raw engine output,
// so a fixed seed reproduces bit-identical runs everywhere.
namespace qbent::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool informational = false;
    bool passed = false;
    std::string detail;
};

struct Options {
    std::uint64_t seed = 1;
};

// ---- deterministic sampling helpers -------------------------------------------

inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + stream);
}

inline std::uint64_t rand_bits(std::mt19937_64& rng, unsigned n) {
    return rng() & ((std::uint64_t{1} << n) - 1);
}

inline FieldElem rand_elem(std::mt19937_64& rng, const Field& f) {
    return f.element(rand_bits(rng, f.n()));
}

inline FieldElem rand_nonzero(std::mt19937_64& rng, const Field& f) {
    for (;;) {
        const FieldElem e = rand_elem(rng, f);
        if (!e.is_zero()) return e;
    }
}

/// Uniform element of the half-size subfield: the relative trace
/// w + w^(2^(n/2)) maps the field 2^(n/2)-to-1 onto it.
inline FieldElem rand_half_subfield(std::mt19937_64& rng, const Field& f) {
    const FieldElem w = rand_elem(rng, f);
    return w + frobenius(w, f.n() / 2);
}

inline SkewPoly rand_skew(std::mt19937_64& rng, const Field& f, unsigned max_deg) {
    const auto deg = static_cast<unsigned>(rng() % (max_deg + 1));
    std::vector<FieldElem> c;
    c.reserve(deg + 1);
    for (unsigned i = 0; i <= deg; ++i) c.push_back(rand_elem(rng, f));
    return SkewPoly(f, std::move(c));
}

/// The (n, a) evaluation grid: every non-cube for n <= 10, twenty distinct
/// seeded samples for larger n.
inline std::vector<FieldElem> grid_noncubes(const Field& f, std::uint64_t seed) {
    if (f.n() <= 10) return noncubes(f);
    auto rng = seeded_rng(seed, f.n());
    std::set<std::uint64_t> seen;
    std::vector<FieldElem> out;
    while (out.size() < 20) {
        const std::uint64_t b = rand_bits(rng, f.n());
        if (b == 0 || seen.count(b)) continue;
        const FieldElem e = f.element(b);
        if (is_cube(e)) continue;
        seen.insert(b);
        out.push_back(e);
    }
    return out;
}

inline constexpr unsigned kGridN[] = {4, 6, 8, 10, 12, 14, 16};

/// Independent Walsh oracle: the defining double sum, evaluated with plain
/// field operations.  Never used by walsh_spectrum itself.
inline std::vector<std::int64_t> naive_walsh(const BooleanFunction& fn, const Field& f) {
    const std::uint64_t N = fn.size();
    std::vector<std::int64_t> out(N);
    for (std::uint64_t a = 0; a < N; ++a) {
        const FieldElem ae = f.element(a);
        std::int64_t s = 0;
        for (std::uint64_t x = 0; x < N; ++x) {
            const int t = static_cast<int>(trace(ae * f.element(x), 1).bits());
            s += (fn.bit(x) ^ t) ? -1 : 1;
        }
        out[a] = s;
    }
    return out;
}

/// Random quadratic trace form (Gold terms, a half-trace term, optional
/// affine part) used by the rank-equivalence and agreement sweeps.
inline TraceRepr rand_quadratic(std::mt19937_64& rng, const Field& f) {
    const unsigned n = f.n();
    TraceRepr r(f);
    for (unsigned i = 1; i <= n / 2 - 1; ++i)
        if (rng() & 1) r.add_term(TraceTerm{n, rand_nonzero(rng, f), (std::uint64_t{1} << i) + 1});
    if (rng() & 1) {
        const FieldElem g = rand_half_subfield(rng, f);
        if (!g.is_zero())
            r.add_term(TraceTerm{n / 2, g, (std::uint64_t{1} << (n / 2)) + 1});
    }
    if (rng() & 1) r.add_term(TraceTerm{n, rand_nonzero(rng, f), 1});  // affine
    if (rng() & 1) r.add_term(TraceTerm{1, f.one(), 0});               // constant
    return r;
}

// ---- criteria ------------------------------------------------------------------

inline CriterionResult c01_new_family_bent(const Options& opt) {
    CriterionResult res{1, "family-new instances are bent on the full (n, a, I) grid", false,
                        true, ""};
    std::size_t instances = 0, failures = 0;
    for (unsigned n : kGridN) {
        const Field f = make_field(n);
        for (const FieldElem& a : grid_noncubes(f, opt.seed)) {
            for (const auto& [I, repr] : constructions::enumerate_new(f, a)) {
                ++instances;
                if (!is_bent(truth_table(repr), f)) {
                    ++failures;
                    res.passed = false;
                }
            }
        }
    }
    res.detail = std::to_string(instances) + " instances, " + std::to_string(failures) +
                 " non-bent";
    return res;
}

inline CriterionResult c02_perm_tests(const Options& opt) {
    CriterionResult res{2, "build_P passes and all three permutation tests agree", false, true,
                        ""};
    std::size_t built = 0, agree_checks = 0, failures = 0;
    for (unsigned n : kGridN) {
        const Field f = make_field(n);
        for (const FieldElem& a : grid_noncubes(f, opt.seed)) {
            ++built;
            const LinearizedPoly P = build_P(f, a);
            const bool g = is_permutation(P, PermMethod::gcrd);
            const bool d = is_permutation(P, PermMethod::dickson);
            const bool b = is_permutation(P, PermMethod::bruteforce);
            if (!(g && d && b)) {
                ++failures;
                res.passed = false;
            }
        }
    }
    for (unsigned n : {4u, 6u, 8u}) {
        const Field f = make_field(n);
        auto rng = seeded_rng(opt.seed, 200 + n);
        for (int i = 0; i < 1000; ++i) {
            std::vector<FieldElem> coeffs;
            for (unsigned j = 0; j < n; ++j) coeffs.push_back(rand_elem(rng, f));
            const LinearizedPoly L(f, std::move(coeffs));
            ++agree_checks;
            const bool g = is_permutation(L, PermMethod::gcrd);
            const bool d = is_permutation(L, PermMethod::dickson);
            const bool b = is_permutation(L, PermMethod::bruteforce);
            if (g != d || d != b) {
                ++failures;
                res.passed = false;
            }
        }
    }
    res.detail = std::to_string(built) + " build_P instances + " +
                 std::to_string(agree_checks) + " random agreement checks, " +
                 std::to_string(failures) + " failures";
    return res;
}

inline CriterionResult c03_rank_equivalence(const Options& opt) {
    CriterionResult res{3, "quadratic f is bent exactly when rank(f) = n", false, true, ""};
    std::size_t checks = 0, failures = 0;
    for (unsigned n : {4u, 6u, 8u, 10u}) {
        const Field f = make_field(n);
        const unsigned len = n / 2 - 1;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            std::vector<std::uint8_t> c(len);
            for (unsigned i = 0; i < len; ++i) c[i] = (mask >> i) & 1;
            const BooleanFunction tt =
                truth_table(constructions::construct_ma(f, {n, c}));
            ++checks;
            if (is_bent(tt, f) != (rank(tt, f) == n)) {
                ++failures;
                res.passed = false;
            }
        }
    }
    {
        const Field f = make_field(8);
        auto rng = seeded_rng(opt.seed, 300);
        for (int i = 0; i < 1000; ++i) {
            const BooleanFunction tt = truth_table(rand_quadratic(rng, f));
            ++checks;
            if (is_bent(tt, f) != (rank(tt, f) == 8)) {
                ++failures;
                res.passed = false;
            }
        }
    }
    res.detail = std::to_string(checks) + " functions, " + std::to_string(failures) +
                 " rank/bent mismatches";
    return res;
}

inline CriterionResult c04_ma_criterion(const Options&) {
    CriterionResult res{4, "family-ma gcd criterion matches the Walsh verdict", false, true, ""};
    std::size_t checks = 0, failures = 0;
    for (unsigned n : {4u, 6u, 8u, 10u}) {
        const Field f = make_field(n);
        const unsigned len = n / 2 - 1;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            std::vector<std::uint8_t> c(len);
            for (unsigned i = 0; i < len; ++i) c[i] = (mask >> i) & 1;
            const constructions::MaParams p{n, c};
            ++checks;
            if (constructions::ma_criterion(p) !=
                is_bent(truth_table(constructions::construct_ma(f, p)), f)) {
                ++failures;
                res.passed = false;
            }
        }
    }
    res.detail = std::to_string(checks) + " c-vectors, " + std::to_string(failures) +
                 " criterion/Walsh mismatches";
    return res;
}

inline CriterionResult c05_li_criterion(const Options&) {
    CriterionResult res{5, "family-li gcd criterion matches the Walsh verdict", false, true, ""};
    std::size_t checks = 0, failures = 0;
    for (unsigned n : {4u, 6u, 8u, 10u}) {
        const Field f = make_field(n);
        for (unsigned k = 1; k <= n - 1; ++k)
            for (unsigned t = 1; t <= 5; ++t) {
                const constructions::LiParams p{n, k, t};
                ++checks;
                if (constructions::li_criterion(p) !=
                    is_bent(truth_table(constructions::construct_li(f, p)), f)) {
                    ++failures;
                    res.passed = false;
                }
            }
    }
    res.detail = std::to_string(checks) + " (n,k,t) triples, " + std::to_string(failures) +
                 " criterion/Walsh mismatches";
    return res;
}

inline CriterionResult c06_hu_criterion(const Options&) {
    CriterionResult res{6, "family-hu criterion: one modulus reading matches Walsh on its grid",
                        false, true, ""};
    std::size_t checks = 0, default_mismatch = 0, strict_mismatch = 0;
    for (unsigned n : {4u, 8u, 12u}) {
        const Field f = make_field(n);
        for (unsigned e = 1; e <= n; ++e) {
            if (n % e != 0 || (n / e) % 2 != 0) continue;
            const unsigned m = n / e;
            // every nonzero beta of the subfield F_{2^e}
            std::vector<FieldElem> betas;
            for (std::uint64_t b = 1; b < f.size(); ++b) {
                const FieldElem x = f.element(b);
                if (frobenius(x, e) == x) betas.push_back(x);
            }
            for (const FieldElem& beta : betas)
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m / 2)); ++mask) {
                    std::vector<std::uint8_t> c(m / 2);
                    for (unsigned i = 0; i < m / 2; ++i) c[i] = (mask >> i) & 1;
                    const constructions::HuParams p{n, e, beta, c};
                    const bool actual =
                        is_bent(truth_table(constructions::construct_hu(f, p)), f);
                    ++checks;
                    if (constructions::hu_criterion(p, constructions::HuModulus::xm_plus_1) !=
                        actual)
                        ++default_mismatch;
                    if (constructions::hu_criterion(p, constructions::HuModulus::xn_plus_1) !=
                        actual)
                        ++strict_mismatch;
                }
        }
    }
    res.passed = default_mismatch == 0 || strict_mismatch == 0;
    res.detail = std::to_string(checks) + " instances; mismatches: x^m+1 reading " +
                 std::to_string(default_mismatch) + ", x^n+1 reading " +
                 std::to_string(strict_mismatch);
    return res;
}

inline CriterionResult c07_right_division(const Options& opt) {
    CriterionResult res{7, "right division: f = Q*g + R with R = 0 or deg R < deg g", false,
                        true, ""};
    std::size_t checks = 0, failures = 0;
    for (unsigned n : {2u, 4u, 6u, 8u}) {
        const Field f = make_field(n);
        auto rng = seeded_rng(opt.seed, 700 + n);
        for (int i = 0; i < 10000; ++i) {
            const SkewPoly a = rand_skew(rng, f, 2 * n);
            SkewPoly b = rand_skew(rng, f, 2 * n);
            if (b.is_zero()) b = SkewPoly::one(f);
            const auto [q, r] = right_divide(a, b);
            ++checks;
            const bool identity = smul(q, b) + r == a;
            const bool degree_ok = r.is_zero() || *r.degree() < *b.degree();
            if (!identity || !degree_ok) {
                ++failures;
                res.passed = false;
            }
        }
    }
    res.detail = std::to_string(checks) + " random divisions, " + std::to_string(failures) +
                 " contract violations";
    return res;
}

inline CriterionResult c08_gcrd(const Options& opt) {
    CriterionResult res{8, "gcrd divides both inputs, matches GF(2) gcd, and p1 is coprime to x^n+1",
                        false, true, ""};
    std::size_t checks = 0, failures = 0;
    // (a) the gcrd right-divides both inputs
    for (unsigned n : {2u, 4u, 6u, 8u}) {
        const Field f = make_field(n);
        auto rng = seeded_rng(opt.seed, 800 + n);
        for (int i = 0; i < 2500; ++i) {
            const SkewPoly a = rand_skew(rng, f, 2 * n);
            SkewPoly b = rand_skew(rng, f, 2 * n);
            if (a.is_zero() && b.is_zero()) b = SkewPoly::one(f);
            const SkewPoly w = gcrd(a, b);
            ++checks;
            const bool div_a = a.is_zero() || rrem(a, w).is_zero();
            const bool div_b = b.is_zero() || rrem(b, w).is_zero();
            if (!div_a || !div_b) {
                ++failures;
                res.passed = false;
            }
        }
    }
    // (b) on GF(2)-coefficient inputs gcrd is the ordinary gcd
    for (unsigned n : {2u, 4u, 6u, 8u}) {
        const Field f = make_field(n);
        auto rng = seeded_rng(opt.seed, 850 + n);
        for (int i = 0; i < 250; ++i) {
            const std::uint64_t u = rng() & 0x1fff, v = rng() & 0x1fff;
            if (u == 0 && v == 0) continue;
            std::vector<FieldElem> ua, va;
            for (int j = 0; j <= 13; ++j) {
                ua.push_back((u >> j) & 1 ? f.one() : f.zero());
                va.push_back((v >> j) & 1 ? f.one() : f.zero());
            }
            const SkewPoly w = gcrd(SkewPoly(f, ua), SkewPoly(f, va));
            std::uint64_t wbits = 0;
            for (std::size_t j = 0; j < w.coeffs().size(); ++j)
                if (!w.coeff(j).is_zero()) wbits |= std::uint64_t{1} << j;
            ++checks;
            if (wbits != constructions::gcd_f2(u, v)) {
                ++failures;
                res.passed = false;
            }
        }
    }
    // (c) gcrd(p1, x^n + 1) = 1 across the (n, a) grid
    for (unsigned n : kGridN) {
        const Field f = make_field(n);
        for (const FieldElem& a : grid_noncubes(f, opt.seed)) {
            const SkewPoly g = gcrd(build_p1(f, a), SkewPoly::x_pow_n_plus_one(f));
            ++checks;
            if (!(g.degree() == std::optional<std::size_t>{0})) {
                ++failures;
                res.passed = false;
            }
        }
    }
    res.detail = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
    return res;
}

inline CriterionResult c09_instance_count(const Options&) {
    CriterionResult res{9, "family-new enumeration count is 2^(n/4) or 2^((n-2)/4)", false, true,
                        ""};
    std::ostringstream detail;
    for (unsigned n = 4; n <= 16; n += 2) {
        const Field f = make_field(n);
        const FieldElem a = noncubes(f).front();
        const std::size_t count = constructions::enumerate_new(f, a).size();
        const std::size_t expected =
            std::size_t{1} << (n % 4 == 0 ? n / 4 : (n - 2) / 4);
        if (count != expected) res.passed = false;
        detail << "n=" << n << ":" << count << (count == expected ? "" : "!") << " ";
    }
    res.detail = detail.str();
    return res;
}

inline CriterionResult c10_spectral_sanity(const Options& opt) {
    CriterionResult res{10, "Parseval holds and the fast Walsh matches the naive double sum",
                        false, true, ""};
    std::size_t checks = 0, failures = 0;
    // Parseval on random tables (the spectrum constructor re-derives it; the
    // explicit sum here keeps the check visible).
    for (unsigned n : {4u, 6u, 8u}) {
        const Field f = make_field(n);
        auto rng = seeded_rng(opt.seed, 1000 + n);
        for (int i = 0; i < 100; ++i) {
            BooleanFunction fn(n);
            for (std::uint64_t x = 0; x < fn.size(); ++x)
                fn.set_bit(x, static_cast<int>(rng() & 1));
            const WalshSpectrum s = walsh_spectrum(fn, f);
            std::uint64_t energy = 0;
            for (const std::int64_t v : s.values())
                energy += static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(v);
            ++checks;
            if (energy != (std::uint64_t{1} << (2 * n))) {
                ++failures;
                res.passed = false;
            }
        }
    }
    // fast == naive: exhaustive for n <= 3, randomized for n in {4,5,6}
    for (unsigned n : {1u, 2u, 3u}) {
        const Field f = make_field(n);
        for (std::uint64_t tt = 0; tt < (std::uint64_t{1} << (1u << n)); ++tt) {
            BooleanFunction fn(n);
            for (std::uint64_t x = 0; x < fn.size(); ++x)
                fn.set_bit(x, static_cast<int>((tt >> x) & 1));
            ++checks;
            if (walsh_spectrum(fn, f).values() != naive_walsh(fn, f)) {
                ++failures;
                res.passed = false;
            }
        }
    }
    for (unsigned n : {4u, 5u, 6u}) {
        const Field f = make_field(n);
        auto rng = seeded_rng(opt.seed, 1100 + n);
        for (int i = 0; i < 100; ++i) {
            BooleanFunction fn(n);
            for (std::uint64_t x = 0; x < fn.size(); ++x)
                fn.set_bit(x, static_cast<int>(rng() & 1));
            ++checks;
            if (walsh_spectrum(fn, f).values() != naive_walsh(fn, f)) {
                ++failures;
                res.passed = false;
            }
        }
    }
    res.detail = std::to_string(checks) + " spectra, " + std::to_string(failures) + " failures";
    return res;
}

inline CriterionResult c11_degree(const Options& opt) {
    CriterionResult res{11, "every constructed (nonzero) family instance has degree 2", false,
                        true, ""};
    std::size_t checks = 0, failures = 0, zero_skipped = 0;
    const auto check = [&](const TraceRepr& repr) {
        const BooleanFunction tt = truth_table(repr);
        const auto deg = algebraic_degree(tt);
        if (!deg) {
            ++zero_skipped;  // only the empty hu parameter set lands here
            return;
        }
        ++checks;
        if (*deg != 2) {
            ++failures;
            res.passed = false;
        }
    };
    for (unsigned n : {4u, 6u, 8u, 10u}) {
        const Field f = make_field(n);
        const unsigned len = n / 2 - 1;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            std::vector<std::uint8_t> c(len);
            for (unsigned i = 0; i < len; ++i) c[i] = (mask >> i) & 1;
            check(constructions::construct_ma(f, {n, c}));
        }
        for (unsigned k = 1; k <= n - 1; ++k)
            for (unsigned t = 1; t <= 5; ++t)
                check(constructions::construct_li(f, {n, k, t}));
    }
    for (unsigned n : {4u, 8u, 12u}) {
        const Field f = make_field(n);
        for (unsigned e = 1; e <= n; ++e) {
            if (n % e != 0 || (n / e) % 2 != 0) continue;
            const unsigned m = n / e;
            for (std::uint64_t b = 1; b < f.size(); ++b) {
                const FieldElem beta = f.element(b);
                if (frobenius(beta, e) != beta) continue;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m / 2)); ++mask) {
                    std::vector<std::uint8_t> c(m / 2);
                    for (unsigned i = 0; i < m / 2; ++i) c[i] = (mask >> i) & 1;
                    check(constructions::construct_hu(f, {n, e, beta, c}));
                }
            }
        }
    }
    for (unsigned n : kGridN) {
        const Field f = make_field(n);
        for (const FieldElem& a : grid_noncubes(f, opt.seed))
            for (const auto& [I, repr] : constructions::enumerate_new(f, a)) check(repr);
    }
    res.detail = std::to_string(checks) + " instances of degree 2 expected, " +
                 std::to_string(failures) + " failures, " + std::to_string(zero_skipped) +
                 " zero functions skipped";
    return res;
}

inline CriterionResult c12_novelty_probe(const Options&) {
    CriterionResult res{12, "novelty probe: family-new truth tables vs ma/li at n in {6,8}",
                        true, true, ""};
    std::ostringstream detail;
    for (unsigned n : {6u, 8u}) {
        const Field f = make_field(n);
        std::set<std::vector<std::uint8_t>> known;
        const unsigned len = n / 2 - 1;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            std::vector<std::uint8_t> c(len);
            for (unsigned i = 0; i < len; ++i) c[i] = (mask >> i) & 1;
            known.insert(truth_table(constructions::construct_ma(f, {n, c})).packed());
        }
        for (unsigned k = 1; k <= n - 1; ++k)
            for (unsigned t = 1; t <= 5; ++t)
                known.insert(truth_table(constructions::construct_li(f, {n, k, t})).packed());
        std::set<std::vector<std::uint8_t>> fresh;
        for (const FieldElem& a : noncubes(f))
            for (const auto& [I, repr] : constructions::enumerate_new(f, a))
                fresh.insert(truth_table(repr).packed());
        std::size_t overlap = 0;
        for (const auto& t : fresh)
            if (known.count(t)) ++overlap;
        detail << "n=" << n << ": " << fresh.size() << " new vs " << known.size()
               << " known, overlap " << overlap << "; ";
    }
    res.detail = detail.str();
    return res;
}

// ---- runner --------------------------------------------------------------------

inline std::vector<CriterionResult> run_all(const Options& opt = {}) {
    return {
        c01_new_family_bent(opt), c02_perm_tests(opt),    c03_rank_equivalence(opt),
        c04_ma_criterion(opt),    c05_li_criterion(opt),  c06_hu_criterion(opt),
        c07_right_division(opt),  c08_gcrd(opt),          c09_instance_count(opt),
        c10_spectral_sanity(opt), c11_degree(opt),        c12_novelty_probe(opt),
    };
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.informational || r.passed; });
}

inline void print_results(const std::vector<CriterionResult>& results, std::ostream& os) {
    for (const auto& r : results) {
        os << "[" << std::setw(2) << r.id << "/12] "
           << (r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL")) << "  " << r.name
           << ": " << r.detail << "\n";
    }
}

}  // namespace qbent::selftest

#endif  // QBENT_SELFTEST_HPP_
