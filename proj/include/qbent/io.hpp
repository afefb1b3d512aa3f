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
#ifndef QBENT_IO_HPP_
#define QBENT_IO_HPP_

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbent/boolfun.hpp"
#include "qbent/gf2n.hpp"
#include "qbent/linpoly.hpp"
#include "qbent/skewpoly.hpp"

// Wire formats: JSON for the polynomial types ({"n": int, "coeffs": [hex]}
// with index = degree for twisted polynomials and index i = x^(2^i) for
// linearized ones), the packed truth-table file, and the spectrum CSV.
namespace qbent::io {

using nlohmann::json;

inline json to_json(const SkewPoly& p) {
    json j;
    j["n"] = p.field().n();
    json coeffs = json::array();
    const std::size_t len = p.is_zero() ? 0 : *p.degree() + 1;
    for (std::size_t i = 0; i < len; ++i) coeffs.push_back(to_hex(p.coeff(i)));
    j["coeffs"] = coeffs;
    return j;
}

inline SkewPoly skew_from_json(const Field& f, const json& j) {
    if (j.at("n").get<unsigned>() != f.n())
        throw std::invalid_argument("io: JSON degree does not match field");
    std::vector<FieldElem> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(f.from_hex(c.get<std::string>()));
    return SkewPoly(f, std::move(coeffs));
}

inline json to_json(const LinearizedPoly& L) {
    json j;
    j["n"] = L.field().n();
    json coeffs = json::array();
    for (const auto& c : L.coeffs()) coeffs.push_back(to_hex(c));
    j["coeffs"] = coeffs;
    return j;
}

inline LinearizedPoly linpoly_from_json(const Field& f, const json& j) {
    if (j.at("n").get<unsigned>() != f.n())
        throw std::invalid_argument("io: JSON degree does not match field");
    std::vector<FieldElem> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(f.from_hex(c.get<std::string>()));
    return LinearizedPoly(f, std::move(coeffs));
}

inline json to_json(const TraceRepr& r) {
    json terms = json::array();
    for (const auto& t : r.terms())
        terms.push_back({{"subfield", t.subfield_degree},
                         {"beta", to_hex(t.beta)},
                         {"r", t.exponent}});
    return json{{"n", r.field().n()}, {"terms", terms}};
}

// ---- truth-table file ---------------------------------------------------------
// One header line "n=<int>", then the packed table as lowercase hex
// (little-endian bits within bytes, bytes in index order); whitespace in the
// hex body is ignored on read.

inline void write_truth_table(std::ostream& os, const BooleanFunction& f) {
    os << "n=" << f.n() << "\n";
    static const char* digits = "0123456789abcdef";
    std::string line;
    for (std::size_t i = 0; i < f.packed().size(); ++i) {
        line += digits[f.packed()[i] >> 4];
        line += digits[f.packed()[i] & 0xf];
        if (line.size() >= 128) {
            os << line << "\n";
            line.clear();
        }
    }
    if (!line.empty()) os << line << "\n";
}

inline BooleanFunction read_truth_table(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("n=", 0) != 0)
        throw std::invalid_argument("io: truth-table file must start with 'n=<int>'");
    const unsigned n = static_cast<unsigned>(std::stoul(header.substr(2)));
    std::vector<std::uint8_t> bytes;
    int hi = -1;
    char ch;
    while (is.get(ch)) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else
            throw std::invalid_argument("io: invalid hex in truth-table file");
        if (hi < 0)
            hi = v;
        else {
            bytes.push_back(static_cast<std::uint8_t>(hi << 4 | v));
            hi = -1;
        }
    }
    if (hi >= 0) throw std::invalid_argument("io: odd number of hex digits");
    return BooleanFunction(n, std::move(bytes));
}

inline void write_truth_table_file(const std::string& path, const BooleanFunction& f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("io: cannot open '" + path + "' for writing");
    write_truth_table(os, f);
}

inline BooleanFunction read_truth_table_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("io: cannot open '" + path + "'");
    return read_truth_table(is);
}

// ---- spectrum CSV --------------------------------------------------------------

inline void write_spectrum_csv(std::ostream& os, const WalshSpectrum& s) {
    os << "a_hex,value\n";
    for (std::uint64_t a = 0; a < s.values().size(); ++a)
        os << to_hex(a) << "," << s.at(a) << "\n";
}

inline ModulusOverrides load_overrides_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("io: cannot open override file '" + path + "'");
    return ModulusOverrides::parse(is);
}

}  // namespace qbent::io

#endif  // QBENT_IO_HPP_
