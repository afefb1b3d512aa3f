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

// Walks the full pipeline once at n = 4: pick a non-cube a, build the
// permutation polynomial P and its twisted companion p1, run the right
// Euclid algorithm against x^n + 1 step by step, then construct the bent
// function attached to a and inspect its spectrum.

#include <iostream>

#include "qbent/qbent.hpp"

using namespace qbent;

int main() {
    const Field f = make_field(4);
    std::cout << "GF(2^4), modulus " << to_hex(f.modulus()) << "\n";

    const FieldElem a = noncubes(f).front();
    std::cout << "smallest non-cube a = " << a << "\n\n";

    const SkewPoly p1 = build_p1(f, a);
    const SkewPoly xn1 = SkewPoly::x_pow_n_plus_one(f);
    std::cout << "p1      = " << p1.to_string() << "\n";
    std::cout << "x^4 + 1 = " << xn1.to_string() << "\n";

    SkewPoly u = xn1, v = p1;
    while (!v.is_zero()) {
        const auto [q, r] = right_divide(u, v);
        std::cout << "  " << u.to_string() << " = (" << q.to_string() << ") * ("
                  << v.to_string() << ") + " << r.to_string() << "\n";
        u = v;
        v = r;
    }
    std::cout << "gcrd(p1, x^4+1) = " << gcrd(p1, xn1).to_string() << "\n\n";

    const LinearizedPoly P = build_P(f, a);
    std::cout << "P = " << P.to_string() << "\n";
    std::cout << "permutation (gcrd/dickson/bruteforce): "
              << is_permutation(P, PermMethod::gcrd) << "/"
              << is_permutation(P, PermMethod::dickson) << "/"
              << is_permutation(P, PermMethod::bruteforce) << "\n\n";

    for (const auto& [I, repr] : constructions::enumerate_new(f, a)) {
        const BooleanFunction tt = truth_table(repr);
        std::cout << "f = " << repr.to_string() << "\n";
        std::cout << "  bent=" << is_bent(tt, f) << " rank=" << rank(tt, f)
                  << " degree=" << *algebraic_degree(tt) << " walsh:";
        const WalshSpectrum s = walsh_spectrum(tt, f);
        for (std::uint64_t i = 0; i < s.values().size(); ++i)
            std::cout << " " << s.at(i);
        std::cout << "\n";
    }
    return 0;
}
