/*
 * Copyright 2026 The GPC Codes Authors
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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gpc/cli.hpp"
#include "gpc/io.hpp"
#include "test_support.hpp"

using namespace gpc;
using gpc::test::data_path;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const std::string path = std::string(GPC_TEST_BINARY_DIR) + "/" + name;
    std::ofstream(path) << contents;
    return path;
}

// Fixture as gpctool would print it (the files carry a comment header).
std::string canonical(const std::string& name) {
    const ArrayFile a = load_array(data_path(name));
    return format_array(a.array, a.width);
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("code spec parsing") {
    const CodeSpec spec = load_code_spec(data_path("c7_4_11344.json"));
    CHECK(spec.kind == CodeKind::gpc);
    REQUIRE(spec.params);
    CHECK(spec.params->notation() == "C(7;4,(1,1,3,4,4,4))");
    CHECK(spec.field() == test::gf8());

    const CodeSpec g1 = load_code_spec(data_path("g1_4_1_5_1.json"));
    CHECK(g1.kind == CodeKind::epc_g1);
    CHECK(g1.params->notation() == "C(5;3,(1,1,2,2))");
    CHECK(g1.shape->g == 1);

    const CodeSpec h3 = load_code_spec(data_path("h3_3x4_m13.json"));
    CHECK_FALSE(h3.is_array_code());
    CHECK(h3.field().alpha_order() == 13);
    CHECK(h3.shape->g == 3);

    // field defaults to the smallest that fits
    const CodeSpec dflt = parse_code_spec(nlohmann::json::parse(R"({"kind":"epc-h3","m":3,"n":3})"));
    CHECK(dflt.field().alpha_order() == 11);
}

TEST_CASE("code spec errors") {
    auto bad = [](const char* text) {
        CHECK_THROWS_AS(parse_code_spec(nlohmann::json::parse(text)), SpecError);
    };
    bad(R"({"kind":"rs","m":3,"n":3})");
    bad(R"({"kind":"gpc","m":3,"n":3})");
    bad(R"({"kind":"gpc","m":3,"n":3,"k":2,"s":[3],"u":["1"]})");
    bad(R"({"kind":"gpc","m":3,"n":3,"k":2,"s":[3],"u":[1],"field":{"w":3,"modulus_hex":"zz"}})");
    bad(R"({"kind":"gpc","m":3,"n":3,"k":2,"s":[3],"u":[1],"field":{"w":3,"modulus_hex":"9"}})");
    bad(R"({"kind":"epc-g1","m":3,"v":1,"n":2,"h":1})");
    bad(R"({"kind":"epc-h2","m":2,"n":3})");
    bad(R"([1, 2])");
    CHECK_THROWS_AS(load_code_spec(data_path("bad_u.json")), SpecError);
    CHECK_THROWS_AS(load_code_spec(data_path("missing.json")), SpecError);
}

TEST_CASE("field json round trip") {
    for (const Field& f : {test::gf8(), test::gf16(), Field::mp_field(13)}) {
        CHECK(field_from_json(field_to_json(f)) == f);
    }
    CHECK(field_from_json(nlohmann::json::parse(R"({"w":4,"modulus_hex":"0x13"})")) == test::gf16());
}

TEST_CASE("array text format") {
    std::istringstream in("# comment\n2 3 4\n1 a ?\n? 0 f  # trailing\n");
    const ArrayFile a = parse_array(in);
    CHECK(a.width == 4);
    CHECK(a.array.rows() == 2);
    CHECK(a.array.value(0, 1) == 10);
    CHECK(a.array.erased(0, 2));
    CHECK(a.array.erased(1, 0));
    CHECK(format_array(a.array, a.width) == "2 3 4\n1 a ?\n? 0 f\n");
    std::istringstream again(format_array(a.array, a.width));
    CHECK(parse_array(again).array == a.array);

    auto bad = [](const char* text, const char* needle) {
        std::istringstream s(text);
        try {
            parse_array(s);
            FAIL("no error for " << text);
        } catch (const std::invalid_argument& e) {
            CHECK(contains(e.what(), needle));
        }
    };
    bad("2 2 3\n1 2\n3\n", "line 3");
    bad("2 2 3\n1 2\n3 8\n", "line 3");
    bad("2 2 3\n1 2\n", "2 rows");
    bad("2 2\n", "line 1");
    bad("2 2 3\n1 x\n1 1\n", "line 2");

    std::istringstream syms("# data\n1 2 # two\nff\n");
    CHECK(parse_symbols(syms) == std::vector<Element>{1, 2, 255});
}

TEST_CASE("cli info") {
    const Run r = run({"info", data_path("c7_4_11344.json")});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "N=42 K=19 d=10"));
    CHECK(contains(r.out, "transpose: C(6;6,(2,2,2,3,4,4,4))"));
    CHECK(contains(r.out, "  P P P P P P P\n"));

    const std::string full_k = temp_file("k_eq_m.json", R"({"kind":"gpc","m":4,"n":6,"k":4,"s":[2,2],"u":[1,3]})");
    const Run k_eq_m = run({"info", full_k});
    CHECK(contains(k_eq_m.out, "transpose: none"));

    const Run h3 = run({"info", data_path("h3_3x3_m11.json")});
    CHECK(contains(h3.out, "N=9 K=1 rank(H)=8"));
    CHECK(contains(h3.out, "d=9 (exhaustive)"));
    CHECK(contains(h3.out, "bound: 9"));
}

TEST_CASE("cli bound") {
    const Run r = run({"bound", "7", "2", "8", "3", "3"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "a=1: 24\na=2: 20\na=3: 22\na=4: 21\nbound: 20\n");
    CHECK(run({"bound", "3", "3", "3", "1", "1"}).code == cli::kSpecError);
    CHECK(run({"bound", "3", "1", "3"}).code == cli::kSpecError);
}

TEST_CASE("cli encode and decode") {
    const Run enc = run({"encode", data_path("c7_4_11344.json"), data_path("c7_4_11344_data.txt")});
    CHECK(enc.code == cli::kOk);
    CHECK(enc.out == canonical("c7_4_11344_codeword.txt"));

    const Run dec = run({"decode", data_path("c7_4_11344.json"), data_path("c7_4_11344_erased.txt")});
    CHECK(dec.code == cli::kOk);
    CHECK(dec.out == enc.out);

    // no erasures: output is byte-identical
    const Run same = run({"decode", data_path("c7_4_11344.json"), data_path("c7_4_11344_codeword.txt")});
    CHECK(same.out == enc.out);

    const Run stair = run({"decode", data_path("c7_5_113355.json"), data_path("c7_5_113355_staircase.txt")});
    CHECK(stair.code == cli::kOk);
    CHECK(stair.out == canonical("c7_5_113355_codeword.txt"));

    const std::string zeros = temp_file("zeros.txt", "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n");
    const Run z = run({"encode", data_path("c7_4_11344.json"), zeros});
    CHECK(z.out == "6 7 3\n0 0 0 0 0 0 0\n0 0 0 0 0 0 0\n0 0 0 0 0 0 0\n0 0 0 0 0 0 0\n0 0 0 0 0 0 0\n0 0 0 0 0 0 0\n");

    const std::string out_path = std::string(GPC_TEST_BINARY_DIR) + "/encoded.txt";
    CHECK(run({"encode", data_path("c7_4_11344.json"), data_path("c7_4_11344_data.txt"), "-o", out_path}).out.empty());
    CHECK(slurp(out_path) == enc.out);
    std::remove(out_path.c_str());
}

TEST_CASE("cli decode failures") {
    const Run rect = run({"decode", data_path("ep_7_2_8_3_3.json"), data_path("ep_7_2_8_3_3_rectangle.txt")});
    CHECK(rect.code == cli::kUncorrectable);
    CHECK(contains(rect.err, "uncorrectable: 20 erasures remain"));

    const std::string wrong_shape = temp_file("shape.txt", "2 2 3\n1 2\n3 4\n");
    CHECK(run({"decode", data_path("c7_4_11344.json"), wrong_shape}).code == cli::kSpecError);
    const std::string short_data = temp_file("short.txt", "1 2 3\n");
    CHECK(run({"encode", data_path("c7_4_11344.json"), short_data}).code == cli::kSpecError);
    CHECK(run({"decode", data_path("c7_4_11344.json"), data_path("nope.txt")}).code == cli::kSpecError);
}

TEST_CASE("cli verify") {
    const Run v = run({"verify", data_path("c5_3_1122.json")});
    CHECK(v.code == cli::kOk);
    CHECK(contains(v.out, "d_bruteforce=6 d_formula=6 OK"));

    const Run g1 = run({"verify", data_path("g1_4_1_5_1.json")});
    CHECK(g1.code == cli::kOk);
    CHECK(contains(g1.out, "d_bound=6 OK"));

    const Run rnd = run({"verify", data_path("c7_4_11344.json"), "--random", "200", "--seed", "9"});
    CHECK(rnd.code == cli::kOk);
    CHECK(contains(rnd.out, "seed=9 trials=200"));
    CHECK(contains(rnd.out, "mismatches=0"));

    const Run h3 = run({"verify", data_path("h3_3x4_m13.json")});
    CHECK(contains(h3.out, "d_bruteforce=9 condition35=ok d_bound=9 OK"));

    const Run lrnd = run({"verify", data_path("h2_3x3.json"), "--random", "50", "--seed", "1"});
    CHECK(lrnd.code == cli::kOk);
    CHECK(contains(lrnd.out, "failures=0"));

    CHECK(run({"verify", data_path("c7_4_11344.json"), "--budget", "10"}).code == cli::kBudgetExceeded);
}

TEST_CASE("cli find-prime and usage errors") {
    const Run p = run({"find-prime", "12"});
    CHECK(p.code == cli::kOk);
    CHECK(p.out.rfind("13\n", 0) == 0);
    CHECK(run({"find-prime", "60"}).out.rfind("61\n", 0) == 0);
    CHECK(run({"find-prime", "61"}).code == cli::kSpecError);
    CHECK(run({}).code == cli::kSpecError);
    CHECK(run({"frobnicate"}).code == cli::kSpecError);
    CHECK(run({"--help"}).code == cli::kOk);
    CHECK(run({"info", data_path("bad_u.json")}).code == cli::kSpecError);
    CHECK(contains(run({"info", data_path("bad_u.json")}).err, "u must be strictly increasing"));
}
