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
#ifndef QBENT_GF2POLY_HPP_
#define QBENT_GF2POLY_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

// Polynomials over GF(2) packed into unsigned integers, bit i = coefficient
// of x^i.  This is the commutative workhorse underneath field construction
// (irreducibility scans) and the ordinary-gcd bentness criteria.
namespace qbent::gf2poly {

/// Degree of a packed polynomial; -1 for the zero polynomial.
constexpr int degree(std::uint64_t p) noexcept {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

/// Carry-less product.  Caller keeps deg a + deg b < 64.
constexpr std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t r = 0;
    while (b) {
        r ^= a << std::countr_zero(b);
        b &= b - 1;
    }
    return r;
}

/// a mod p for p != 0.
constexpr std::uint64_t mod(std::uint64_t a, std::uint64_t p) noexcept {
    const int dp = degree(p);
    for (int da = degree(a); da >= dp; da = degree(a)) a ^= p << (da - dp);
    return a;
}

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                               std::uint64_t p) noexcept {
    return mod(mul(mod(a, p), mod(b, p)), p);
}

/// Euclidean gcd; over GF(2) the result is automatically monic.
constexpr std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    while (b) {
        const std::uint64_t t = mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

/// x^(2^k) mod p by repeated squaring.
constexpr std::uint64_t x_pow_2k_mod(std::uint64_t p, unsigned k) noexcept {
    std::uint64_t r = mod(2u, p);
    for (unsigned i = 0; i < k; ++i) r = mulmod(r, r, p);
    return r;
}

inline std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> fs;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

/// Irreducibility over GF(2): x^(2^n) = x mod p, and x^(2^(n/q)) - x is
/// coprime to p for every prime q | n.
inline bool is_irreducible(std::uint64_t p) {
    const int n = degree(p);
    if (n < 1) return false;
    if (n == 1) return true;
    if ((p & 1) == 0) return false;  // divisible by x
    if (mod(x_pow_2k_mod(p, static_cast<unsigned>(n)) ^ 2u, p) != 0) return false;
    for (unsigned q : prime_factors(static_cast<unsigned>(n))) {
        const std::uint64_t fixed = x_pow_2k_mod(p, static_cast<unsigned>(n) / q) ^ 2u;
        if (degree(gcd(fixed, p)) != 0) return false;
    }
    return true;
}

/// Smallest irreducible of degree n, "smallest" meaning the packed-integer
/// encoding (equivalently lexicographic on coefficient vectors read from
/// x^n down).  Constant term is 1 for every n >= 1.
inline std::uint64_t smallest_irreducible(unsigned n) {
    if (n < 1 || n > 32) throw std::out_of_range("gf2poly: degree out of range [1,32]");
    for (std::uint64_t low = 1; low < (std::uint64_t{1} << n); low += 2) {
        const std::uint64_t p = (std::uint64_t{1} << n) | low;
        if (is_irreducible(p)) return p;
    }
    throw std::logic_error("gf2poly: no irreducible found");  // unreachable
}

// Generated by smallest_irreducible(n) for n = 1..32; index 0 unused.
// Kept as a table so field construction is trivially deterministic.
inline constexpr std::array<std::uint64_t, 33> kBuiltinModulus = {
    0x0,
    0x3,         0x7,         0xb,        0x13,       0x25,
    0x43,        0x83,        0x11b,      0x203,      0x409,
    0x805,       0x1009,      0x201b,     0x4021,     0x8003,
    0x1002b,     0x20009,     0x40009,    0x80027,    0x100009,
    0x200005,    0x400003,    0x800021,   0x100001b,  0x2000009,
    0x400001b,   0x8000027,   0x10000003, 0x20000005, 0x40000003,
    0x80000009,  0x10000008dULL,
};

}  // namespace qbent::gf2poly

#endif  // QBENT_GF2POLY_HPP_
