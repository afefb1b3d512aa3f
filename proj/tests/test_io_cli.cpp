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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qbent/cli.hpp"
#include "qbent/io.hpp"
#include "test_helpers.hpp"

using namespace qbent;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/qbent_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("JSON forms") {
    const Field f = make_field(4);
    SECTION("skew polynomial round trip") {
        auto r = testing::rng(71);
        for (int i = 0; i < 50; ++i) {
            const SkewPoly p = testing::rand_skew(r, f, 6);
            const auto j = io::to_json(p);
            CHECK(j.at("n") == 4);
            CHECK(io::skew_from_json(f, j) == p);
        }
        const auto j = io::to_json(build_p1(f, f.element(2)));
        CHECK(j.at("coeffs") == nlohmann::json::array({"0", "9", "0", "f"}));
    }
    SECTION("linearized polynomial round trip") {
        auto r = testing::rng(72);
        for (int i = 0; i < 50; ++i) {
            const LinearizedPoly L = testing::rand_linpoly(r, f);
            CHECK(io::linpoly_from_json(f, io::to_json(L)) == L);
        }
    }
    SECTION("degree mismatch is rejected") {
        const auto j = io::to_json(SkewPoly::one(f));
        CHECK_THROWS_AS(io::skew_from_json(make_field(2), j), std::invalid_argument);
    }
    SECTION("trace representation export") {
        const auto j = io::to_json(constructions::construct_new(f, {f.element(2), {1}}));
        CHECK(j.at("n") == 4);
        REQUIRE(j.at("terms").size() == 1);
        CHECK(j.at("terms")[0].at("beta") == "3");
        CHECK(j.at("terms")[0].at("r") == 3);
        CHECK(j.at("terms")[0].at("subfield") == 4);
    }
}

TEST_CASE("truth-table file format") {
    SECTION("round trip at several sizes") {
        auto r = testing::rng(73);
        for (unsigned n : {1u, 2u, 4u, 10u}) {
            BooleanFunction fn(n);
            for (std::uint64_t x = 0; x < fn.size(); ++x)
                fn.set_bit(x, static_cast<int>(r() & 1));
            std::stringstream buf;
            io::write_truth_table(buf, fn);
            const BooleanFunction back = io::read_truth_table(buf);
            CHECK(back == fn);
        }
    }
    SECTION("header and body validation") {
        std::istringstream bad_header("m=4\nffff\n");
        CHECK_THROWS_AS(io::read_truth_table(bad_header), std::invalid_argument);
        std::istringstream bad_hex("n=4\nzz\n");
        CHECK_THROWS_AS(io::read_truth_table(bad_hex), std::invalid_argument);
        std::istringstream odd_digits("n=4\nfff\n");
        CHECK_THROWS_AS(io::read_truth_table(odd_digits), std::invalid_argument);
        std::istringstream wrong_len("n=4\nff\n");
        CHECK_THROWS_AS(io::read_truth_table(wrong_len), std::invalid_argument);
        // whitespace inside the hex body is fine
        std::istringstream spaced("n=4\nff 00\n");
        CHECK(io::read_truth_table(spaced).weight() == 8);
    }
}

TEST_CASE("spectrum CSV") {
    const Field f = make_field(2);
    std::ostringstream os;
    io::write_spectrum_csv(os, walsh_spectrum(BooleanFunction(2), f));
    CHECK(os.str() == "a_hex,value\n0,4\n1,0\n2,0\n3,0\n");
}

TEST_CASE("cli construct") {
    const auto r = run_cli({"construct", "--family", "ma", "--n", "4", "--c", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Tr_1^2(1 x^5)") != std::string::npos);
    CHECK(r.out.find("predicted=true") != std::string::npos);

    const auto j = run_cli({"--format", "json", "construct", "--family", "new", "--n", "4",
                            "--a", "first"});
    CHECK(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.at("predicted") == true);
    CHECK(parsed.at("repr").at("terms").size() == 1);
}

TEST_CASE("cli verify") {
    SECTION("li n=6 k=2 t=1: predicted = verified = false, exit 0") {
        const auto r = run_cli({"verify", "--family", "li", "--n", "6", "--k", "2", "--t", "1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("predicted=false") != std::string::npos);
        CHECK(r.out.find("verified=false") != std::string::npos);
    }
    SECTION("new n=4: verified bent with rank 4 and degree 2") {
        const auto r = run_cli({"verify", "--family", "new", "--n", "4", "--a", "first",
                                "--I", "1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("verified=true") != std::string::npos);
        CHECK(r.out.find("rank=4") != std::string::npos);
        CHECK(r.out.find("degree=2") != std::string::npos);
    }
    SECTION("hu instance in csv format") {
        const auto r = run_cli({"--format", "csv", "verify", "--family", "hu", "--n", "8",
                                "--e", "2", "--beta", "1", "--c", "01"});
        CHECK(r.code == 0);
        CHECK(r.out.find("family,n,params,predicted,verified,rank,degree,digest") == 0);
        CHECK(r.out.find("hu,8,e=2;beta=1;c=01,true,true,8,2,") != std::string::npos);
    }
}

TEST_CASE("cli enumerate") {
    SECTION("n=8 first: four rows, all verified, count line") {
        const auto r = run_cli({"enumerate", "--family", "new", "--n", "8", "--a", "first"});
        CHECK(r.code == 0);
        CHECK(count_lines(r.out) == 5);  // 4 rows + count
        CHECK(r.out.find("count=4 expected=4") != std::string::npos);
        CHECK(r.out.find("verified=false") == std::string::npos);
    }
    SECTION("json rows parse and --jobs preserves order") {
        const auto seq = run_cli({"--format", "json", "enumerate", "--family", "new", "--n",
                                  "6", "--a", "all"});
        CHECK(seq.code == 0);
        CHECK(count_lines(seq.out) == 42 * 2);
        const auto par = run_cli({"--format", "json", "--jobs", "4", "enumerate", "--family",
                                  "new", "--n", "6", "--a", "all"});
        CHECK(par.out == seq.out);
        std::istringstream lines(seq.out);
        std::string line;
        while (std::getline(lines, line)) {
            const auto j = nlohmann::json::parse(line);
            CHECK(j.at("verified") == true);
            CHECK(j.at("degree") == 2);
        }
    }
    SECTION("sample mode") {
        const auto r = run_cli({"enumerate", "--family", "new", "--n", "12", "--a", "sample:3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("count=24 expected=24") != std::string::npos);
    }
    SECTION("explicit hex a") {
        const auto r = run_cli({"enumerate", "--family", "new", "--n", "4", "--a", "2"});
        CHECK(r.code == 0);
        CHECK(r.out.find("count=2 expected=2") != std::string::npos);
    }
}

TEST_CASE("cli gcrd") {
    const auto r = run_cli({"gcrd", "--n", "4", "--f", "1,0,0,0,1", "--g", "0,9,0,f"});
    CHECK(r.code == 0);
    CHECK(r.out == "gcrd = 1\n");
    const auto j = run_cli({"--format", "json", "gcrd", "--n", "4", "--f", "1,0,0,0,1",
                            "--g", "0,9,0,f"});
    CHECK(nlohmann::json::parse(j.out).at("coeffs") == nlohmann::json::array({"1"}));
}

TEST_CASE("cli perm-check") {
    SECTION("built-in family with a non-cube") {
        const auto r = run_cli({"perm-check", "--n", "4", "--P", "--a", "2"});
        CHECK(r.code == 0);
        CHECK(r.out == "gcrd=true dickson=true bruteforce=true agree=true\n");
    }
    SECTION("explicit singular coefficients still agree (exit 0)") {
        const auto r = run_cli({"perm-check", "--n", "2", "--coeffs", "1,1"});
        CHECK(r.code == 0);
        CHECK(r.out == "gcrd=false dickson=false bruteforce=false agree=true\n");
    }
    SECTION("cube parameter is a precondition error") {
        const auto r = run_cli({"perm-check", "--n", "4", "--P", "--a", "8"});
        CHECK(r.code == 1);
        CHECK(r.err.find("non-cube") != std::string::npos);
    }
}

TEST_CASE("cli spectrum") {
    const Field f = make_field(4);
    TraceRepr half(f);
    half.add_term(TraceTerm{2, f.one(), 5});
    const BooleanFunction tt = truth_table(half);
    TempFile tf("spectrum.tt");
    io::write_truth_table_file(tf.path, tt);

    const auto r = run_cli({"spectrum", "--tt", tf.path});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "a_hex,value");
    const WalshSpectrum expected = walsh_spectrum(tt, f);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(is, line)) {
        const auto comma = line.find(',');
        const std::uint64_t a = parse_hex_u64(line.substr(0, comma));
        CHECK(std::stoll(line.substr(comma + 1)) == expected.at(a));
        ++rows;
    }
    CHECK(rows == 16);
}

TEST_CASE("cli modulus override") {
    TempFile tf("override.txt");
    {
        std::ofstream os(tf.path);
        os << "4,19\n";  // x^4 + x^3 + 1
    }
    const auto r = run_cli({"--modulus-override", tf.path, "verify", "--family", "ma", "--n",
                            "4", "--c", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verified=true") != std::string::npos);
    // different basis, different table digest
    const auto base = run_cli({"verify", "--family", "ma", "--n", "4", "--c", "0"});
    const auto digest_of = [](const std::string& s) {
        return s.substr(s.find("digest="));
    };
    CHECK(digest_of(r.out) != digest_of(base.out));

    const auto bad = run_cli({"--modulus-override", "/nonexistent/overrides", "verify",
                              "--family", "ma", "--n", "4", "--c", "0"});
    CHECK(bad.code == 1);
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"construct", "--family", "nosuch", "--n", "4"}).code == 1);
    CHECK(run_cli({"construct", "--family", "ma", "--n", "4", "--c", "2"}).code == 1);
    CHECK(run_cli({"verify", "--family", "ma", "--n", "4", "--c", "01"}).code == 1);
    CHECK(run_cli({"verify", "--family", "new", "--n", "4", "--a", "xyz"}).code == 1);
    CHECK(run_cli({"gcrd", "--n", "4", "--f", "0", "--g", "0"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"spectrum", "--tt", "/nonexistent/table"}).code == 1);
}
