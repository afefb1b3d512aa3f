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
#ifndef QBENT_REPORT_HPP_
#define QBENT_REPORT_HPP_

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qbent/boolfun.hpp"
#include "qbent/gf2n.hpp"

// Per-instance report rows shared by the CLI's verify/enumerate commands:
// family, n, the parameters in hex, the criterion's prediction, the Walsh
// verdict, rank, algebraic degree, and an FNV-1a 64 digest of the packed
// truth table.
namespace qbent::report {

struct Row {
    std::string family;
    unsigned n = 0;
    std::vector<std::pair<std::string, std::string>> params;
    bool predicted = false;
    bool verified = false;
    unsigned rank = 0;
    std::optional<unsigned> degree;
    std::uint64_t digest = 0;
};

/// Fill in the measured half of a row (Walsh verdict, rank, degree, digest).
inline Row evaluate(std::string family, const Field& f,
                    std::vector<std::pair<std::string, std::string>> params,
                    const TraceRepr& repr, bool predicted) {
    Row row;
    row.family = std::move(family);
    row.n = f.n();
    row.params = std::move(params);
    row.predicted = predicted;
    const BooleanFunction tt = truth_table(repr);
    row.verified = is_bent(tt, f);
    row.rank = rank(tt, f);
    row.degree = algebraic_degree(tt);
    row.digest = tt_digest(tt);
    return row;
}

inline std::string digest_hex(std::uint64_t d) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << d;
    return os.str();
}

inline std::string params_compact(const Row& r) {
    std::string s;
    for (const auto& [k, v] : r.params) {
        if (!s.empty()) s += ";";
        s += k + "=" + v;
    }
    return s;
}

inline std::string csv_header() {
    return "family,n,params,predicted,verified,rank,degree,digest";
}

inline std::string to_csv(const Row& r) {
    std::ostringstream os;
    os << r.family << "," << r.n << "," << params_compact(r) << ","
       << (r.predicted ? "true" : "false") << "," << (r.verified ? "true" : "false") << ","
       << r.rank << "," << (r.degree ? std::to_string(*r.degree) : "-") << ","
       << digest_hex(r.digest);
    return os.str();
}

inline nlohmann::json to_json(const Row& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    nlohmann::json j{{"family", r.family}, {"n", r.n},           {"params", params},
                     {"predicted", r.predicted}, {"verified", r.verified}, {"rank", r.rank},
                     {"digest", digest_hex(r.digest)}};
    if (r.degree)
        j["degree"] = *r.degree;
    else
        j["degree"] = nullptr;
    return j;
}

inline std::string to_text(const Row& r) {
    std::ostringstream os;
    os << r.family << " n=" << r.n << " " << params_compact(r)
       << " predicted=" << (r.predicted ? "true" : "false")
       << " verified=" << (r.verified ? "true" : "false") << " rank=" << r.rank
       << " degree=" << (r.degree ? std::to_string(*r.degree) : "-")
       << " digest=" << digest_hex(r.digest);
    return os.str();
}

}  // namespace qbent::report

#endif  // QBENT_REPORT_HPP_
