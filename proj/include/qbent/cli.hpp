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
#ifndef QBENT_CLI_HPP_
#define QBENT_CLI_HPP_

#include <cstdlib>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbent/constructions.hpp"
#include "qbent/io.hpp"
#include "qbent/report.hpp"
#include "qbent/selftest.hpp"

// Batch front end.  Exit codes: 0 = success with all verdicts consistent,
// 1 = usage or precondition error, 2 = a genuine criterion/verification
// disagreement (the falsification signal).  Output is deterministic for a
// fixed invocation: rows are always emitted in grid order, --jobs only
// parallelizes the computation behind that order.
namespace qbent::cli {

struct RunConfig {
    std::string format = "text";  // text | csv | json (json rows are NDJSON)
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    bool sorted = false;  // accepted for compatibility; output is always ordered
    ModulusOverrides overrides;
};

namespace detail {

inline std::vector<std::uint8_t> parse_bits(const std::string& s) {
    std::vector<std::uint8_t> out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("cli: bit string must consist of 0/1 characters");
        out.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return out;
}

inline std::vector<unsigned> parse_index_list(const std::string& s) {
    std::vector<unsigned> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) throw std::invalid_argument("cli: empty entry in index list");
        out.push_back(static_cast<unsigned>(std::stoul(tok)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::vector<FieldElem> parse_coeff_list(const Field& f, const std::string& s) {
    std::vector<FieldElem> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        out.push_back(f.from_hex(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::string join_indices(const std::vector<unsigned>& v) {
    std::string s;
    for (unsigned i : v) {
        if (!s.empty()) s += ",";
        s += std::to_string(i);
    }
    return s;
}

inline std::string bits_string(const std::vector<std::uint8_t>& c) {
    std::string s;
    for (auto b : c) s += b ? '1' : '0';
    return s;
}

class RowSink {
  public:
    RowSink(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    void emit(const report::Row& row) {
        if (cfg_.format == "csv") {
            if (!header_done_) {
                out_ << report::csv_header() << "\n";
                header_done_ = true;
            }
            out_ << report::to_csv(row) << "\n";
        } else if (cfg_.format == "json") {
            out_ << report::to_json(row).dump() << "\n";
        } else {
            out_ << report::to_text(row) << "\n";
        }
        if (row.predicted != row.verified) mismatch_ = true;
    }

    bool mismatch() const { return mismatch_; }

  private:
    const RunConfig& cfg_;
    std::ostream& out_;
    bool header_done_ = false;
    bool mismatch_ = false;
};

// Ordered parallel map: evaluates work items in `jobs` chunks, emits results
// in input order.
template <typename Item, typename Fn>
inline void ordered_map(const std::vector<Item>& items, unsigned jobs, Fn&& fn,
                        RowSink& sink) {
    if (jobs <= 1 || items.size() <= 1) {
        for (const auto& it : items) sink.emit(fn(it));
        return;
    }
    const std::size_t chunk = (items.size() + jobs - 1) / jobs;
    std::vector<std::future<std::vector<report::Row>>> futures;
    for (std::size_t begin = 0; begin < items.size(); begin += chunk) {
        const std::size_t end = std::min(items.size(), begin + chunk);
        futures.push_back(std::async(std::launch::async, [&, begin, end] {
            std::vector<report::Row> rows;
            rows.reserve(end - begin);
            for (std::size_t i = begin; i < end; ++i) rows.push_back(fn(items[i]));
            return rows;
        }));
    }
    for (auto& fu : futures)
        for (const auto& row : fu.get()) sink.emit(row);
}

struct FamilyArgs {
    std::string family;
    unsigned n = 0;
    std::string c_bits;
    unsigned e = 1;
    std::string beta_hex;
    unsigned k = 1, t = 1;
    std::string a_hex = "first";
    std::string I_list;
};

inline void add_family_options(CLI::App* sub, FamilyArgs& a) {
    sub->add_option("--family", a.family, "family: ma | hu | li | new")->required();
    sub->add_option("--n", a.n, "even extension degree")->required();
    sub->add_option("--c", a.c_bits, "coefficient bits c_1.. (ma: n/2-1 bits, hu: m/2 bits)");
    sub->add_option("--e", a.e, "hu: subfield degree e with n/e even");
    sub->add_option("--beta", a.beta_hex, "hu: nonzero element of F_{2^e}, hex");
    sub->add_option("--k", a.k, "li: stride k >= 1");
    sub->add_option("--t", a.t, "li: number of extra Gold terms");
    sub->add_option("--a", a.a_hex, "new: non-cube element (hex) or 'first'");
    sub->add_option("--I", a.I_list, "new: comma-separated subset of T (default empty)");
}

struct BuiltInstance {
    TraceRepr repr;
    bool predicted = false;
    std::vector<std::pair<std::string, std::string>> params;
};

inline FieldElem resolve_a(const Field& f, const std::string& a_hex) {
    if (a_hex == "first") {
        const auto nc = noncubes(f);
        if (nc.empty()) throw std::invalid_argument("cli: no non-cube exists");
        return nc.front();
    }
    return f.from_hex(a_hex);
}

inline BuiltInstance build_instance(const Field& f, const FamilyArgs& a) {
    if (a.family == "ma") {
        const constructions::MaParams p{a.n, parse_bits(a.c_bits)};
        return {constructions::construct_ma(f, p), constructions::ma_criterion(p),
                {{"c", a.c_bits}}};
    }
    if (a.family == "hu") {
        if (a.beta_hex.empty())
            throw std::invalid_argument("cli: family hu requires --beta");
        const constructions::HuParams p{a.n, a.e, f.from_hex(a.beta_hex), parse_bits(a.c_bits)};
        return {constructions::construct_hu(f, p), constructions::hu_criterion(p),
                {{"e", std::to_string(a.e)}, {"beta", a.beta_hex}, {"c", a.c_bits}}};
    }
    if (a.family == "li") {
        const constructions::LiParams p{a.n, a.k, a.t};
        return {constructions::construct_li(f, p), constructions::li_criterion(p),
                {{"k", std::to_string(a.k)}, {"t", std::to_string(a.t)}}};
    }
    if (a.family == "new") {
        const FieldElem ae = resolve_a(f, a.a_hex);
        const constructions::NewParams p{ae, parse_index_list(a.I_list)};
        return {constructions::construct_new(f, p), true,
                {{"a", to_hex(ae)}, {"I", join_indices(p.I)}}};
    }
    throw std::invalid_argument("cli: unknown family '" + a.family + "'");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qbent: construct and verify quadratic bent functions over GF(2^n)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string override_path;
    if (const char* env = std::getenv("QBENT_MODULUS_OVERRIDE")) override_path = env;
    app.add_option("--format", cfg.format, "output format: text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--modulus-override", override_path,
                   "path to a modulus override file (lines 'n,hex')");
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps (selftest)");
    app.add_option("--jobs", cfg.jobs, "worker threads for grid sweeps");
    app.add_flag("--sorted", cfg.sorted, "force ordered output (already the default order)");

    detail::FamilyArgs con_args, ver_args;
    auto* construct = app.add_subcommand("construct", "emit a trace form and its criterion verdict");
    detail::add_family_options(construct, con_args);
    auto* verify = app.add_subcommand(
        "verify", "criterion verdict plus Walsh verdict, rank and degree for one instance");
    detail::add_family_options(verify, ver_args);

    std::string enum_family = "new", enum_a_mode = "first";
    unsigned enum_n = 0;
    auto* enumerate = app.add_subcommand("enumerate", "sweep family new over all subsets of T");
    enumerate->add_option("--family", enum_family, "only 'new' is enumerable")
        ->check(CLI::IsMember({"new"}));
    enumerate->add_option("--n", enum_n, "even extension degree")->required();
    enumerate->add_option("--a", enum_a_mode, "a mode: first | all | sample:<k> | <hex>");

    unsigned gcrd_n = 0;
    std::string gcrd_f, gcrd_g;
    auto* gcrd_cmd = app.add_subcommand("gcrd", "greatest common right divisor in F_{2^n}[x;sigma]");
    gcrd_cmd->add_option("--n", gcrd_n, "extension degree")->required();
    gcrd_cmd->add_option("--f", gcrd_f, "comma-separated hex coefficients, degree ascending")
        ->required();
    gcrd_cmd->add_option("--g", gcrd_g, "comma-separated hex coefficients, degree ascending")
        ->required();

    unsigned pc_n = 0;
    std::string pc_coeffs, pc_a;
    bool pc_P = false;
    auto* perm = app.add_subcommand("perm-check",
                                    "run all three linearized-permutation tests and compare");
    perm->add_option("--n", pc_n, "extension degree")->required();
    perm->add_option("--coeffs", pc_coeffs, "linearized coefficients a_i (hex, i = 0..)");
    perm->add_flag("--P", pc_P, "test the built-in permutation family");
    perm->add_option("--a", pc_a, "non-cube parameter for --P (hex or 'first')");

    std::string spec_tt;
    auto* spectrum = app.add_subcommand("spectrum", "Walsh spectrum of a truth-table file as CSV");
    spectrum->add_option("--tt", spec_tt, "truth-table file (header 'n=<int>', packed hex)")
        ->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the full verification suite");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qbent");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // Collapse CLI11's varied parse-error codes onto the documented
        // usage-error status 1 (help/version stay 0).
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!override_path.empty()) cfg.overrides = io::load_overrides_file(override_path);
        const auto field_for = [&](unsigned n) { return make_field(n, cfg.overrides); };

        if (*construct) {
            const Field f = field_for(con_args.n);
            const auto inst = detail::build_instance(f, con_args);
            if (cfg.format == "json") {
                nlohmann::json params = nlohmann::json::object();
                for (const auto& [k, v] : inst.params) params[k] = v;
                out << nlohmann::json{{"family", con_args.family},
                                      {"n", con_args.n},
                                      {"params", params},
                                      {"repr", io::to_json(inst.repr)},
                                      {"predicted", inst.predicted}}
                           .dump()
                    << "\n";
            } else if (cfg.format == "csv") {
                out << "family,n,params,predicted,repr\n"
                    << con_args.family << "," << con_args.n << ",";
                for (std::size_t i = 0; i < inst.params.size(); ++i)
                    out << (i ? ";" : "") << inst.params[i].first << "="
                        << inst.params[i].second;
                out << "," << (inst.predicted ? "true" : "false") << ","
                    << inst.repr.to_string() << "\n";
            } else {
                out << "f = " << inst.repr.to_string() << "\n";
                out << "predicted=" << (inst.predicted ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (*verify) {
            const Field f = field_for(ver_args.n);
            const auto inst = detail::build_instance(f, ver_args);
            detail::RowSink sink(cfg, out);
            sink.emit(report::evaluate(ver_args.family, f, inst.params, inst.repr,
                                       inst.predicted));
            return sink.mismatch() ? 2 : 0;
        }

        if (*enumerate) {
            const Field f = field_for(enum_n);
            std::vector<FieldElem> as;
            if (enum_a_mode == "first") {
                as.push_back(detail::resolve_a(f, "first"));
            } else if (enum_a_mode == "all") {
                as = noncubes(f);
            } else if (enum_a_mode.rfind("sample:", 0) == 0) {
                const auto count = static_cast<std::size_t>(std::stoul(enum_a_mode.substr(7)));
                if (count < 1) throw std::invalid_argument("cli: sample count must be >= 1");
                auto rng = selftest::seeded_rng(cfg.seed, f.n());
                std::set<std::uint64_t> seen;
                while (as.size() < count && seen.size() < f.order()) {
                    const std::uint64_t b = selftest::rand_bits(rng, f.n());
                    if (b == 0 || seen.count(b)) continue;
                    seen.insert(b);
                    const FieldElem e = f.element(b);
                    if (!is_cube(e)) as.push_back(e);
                }
            } else {
                as.push_back(f.from_hex(enum_a_mode));
            }

            const std::size_t per_a =
                std::size_t{1} << constructions::index_set_T(f.n()).size();
            const std::size_t expected = per_a * as.size();
            std::size_t produced = 0;

            detail::RowSink sink(cfg, out);
            if (cfg.jobs <= 1) {
                // Streamed: one row at a time, nothing proportional to the
                // grid is held in memory.
                for (const FieldElem& a : as)
                    for (const auto& [I, repr] : constructions::enumerate_new(f, a)) {
                        sink.emit(report::evaluate(
                            "new", f,
                            {{"a", to_hex(a)}, {"I", detail::join_indices(I)}}, repr,
                            true));
                        ++produced;
                    }
            } else {
                struct Item {
                    FieldElem a;
                    std::vector<unsigned> I;
                    TraceRepr repr;
                };
                std::vector<Item> items;
                for (const FieldElem& a : as)
                    for (auto& [I, repr] : constructions::enumerate_new(f, a))
                        items.push_back({a, I, repr});
                detail::ordered_map(
                    items, cfg.jobs,
                    [&](const Item& it) {
                        return report::evaluate("new", f,
                                                {{"a", to_hex(it.a)},
                                                 {"I", detail::join_indices(it.I)}},
                                                it.repr, true);
                    },
                    sink);
                produced = items.size();
            }
            if (cfg.format == "text")
                out << "count=" << produced << " expected=" << expected << "\n";
            if (produced != expected) {
                err << "error: enumeration count mismatch\n";
                return 2;
            }
            return sink.mismatch() ? 2 : 0;
        }

        if (*gcrd_cmd) {
            const Field f = field_for(gcrd_n);
            const SkewPoly a(f, detail::parse_coeff_list(f, gcrd_f));
            const SkewPoly b(f, detail::parse_coeff_list(f, gcrd_g));
            const SkewPoly w = gcrd(a, b);
            if (cfg.format == "json")
                out << io::to_json(w).dump() << "\n";
            else
                out << "gcrd = " << w.to_string() << "\n";
            return 0;
        }

        if (*perm) {
            const Field f = field_for(pc_n);
            std::optional<LinearizedPoly> L;
            if (pc_P) {
                if (pc_a.empty())
                    throw std::invalid_argument("cli: perm-check --P requires --a");
                L = build_P(f, detail::resolve_a(f, pc_a));
            } else if (!pc_coeffs.empty()) {
                L = LinearizedPoly(f, detail::parse_coeff_list(f, pc_coeffs));
            } else {
                throw std::invalid_argument("cli: perm-check needs --coeffs or --P --a");
            }
            const bool g = is_permutation(*L, PermMethod::gcrd);
            const bool d = is_permutation(*L, PermMethod::dickson);
            const bool b = is_permutation(*L, PermMethod::bruteforce);
            const bool agree = g == d && d == b;
            if (cfg.format == "json")
                out << nlohmann::json{{"n", pc_n},
                                      {"L", io::to_json(*L)},
                                      {"gcrd", g},
                                      {"dickson", d},
                                      {"bruteforce", b},
                                      {"agree", agree}}
                           .dump()
                    << "\n";
            else
                out << "gcrd=" << (g ? "true" : "false") << " dickson=" << (d ? "true" : "false")
                    << " bruteforce=" << (b ? "true" : "false")
                    << " agree=" << (agree ? "true" : "false") << "\n";
            return agree ? 0 : 2;
        }

        if (*spectrum) {
            const BooleanFunction fn = io::read_truth_table_file(spec_tt);
            const Field f = field_for(fn.n());
            io::write_spectrum_csv(out, walsh_spectrum(fn, f));
            return 0;
        }

        if (*selftest_cmd) {
            const auto results = selftest::run_all({cfg.seed});
            selftest::print_results(results, out);
            return selftest::all_passed(results) ? 0 : 2;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;  // unreachable with require_subcommand(1)
}

}  // namespace qbent::cli

#endif  // QBENT_CLI_HPP_
