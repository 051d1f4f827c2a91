#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tilecoh/report.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    std::string tmp = "cli_out.tmp";
    std::string cmd = std::string(TILECOH_BIN) + " " + args + " > " + tmp + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(tmp);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    std::remove(tmp.c_str());
    return r;
}

std::string fx(const std::string& name) {
    return std::string(TILECOH_FIXTURES) + "/" + name;
}

json parse(const RunResult& r) { return json::parse(r.output); }

} // namespace

TEST_CASE("analyze reports the doubling invariants") {
    RunResult r = run("analyze " + fx("thue_morse.sub"));
    REQUIRE(r.exit_code == 0);
    json j = parse(r);
    CHECK(j["command"] == "analyze");
    CHECK(j["cohomology"]["rank"] == 2);
    CHECK(j["cohomology"]["reduced_resultant"] == "3");
    CHECK(j["cohomology"]["q"] == json({"-2", "1"}));
    CHECK(j["cohomology"]["r"] == json({"1", "1"}));
    bool found_ab = false;
    for (const auto& f : j["frequencies"]) {
        if (f["patch"] == "a b") {
            found_ab = true;
            CHECK(f["frequency"]["coords"] == json({"1/3"}));
        }
    }
    CHECK(found_ab);
    // Required report sections are present (schema shape).
    for (const char* key : {"seed", "substitution", "perron", "cohomology",
                            "regularity", "frequencies", "convergence"})
        CHECK(j.contains(key));
}

TEST_CASE("analyze reports the quadratic invariants") {
    RunResult r = run("analyze " + fx("fib_variant.sub"));
    REQUIRE(r.exit_code == 0);
    json j = parse(r);
    CHECK(j["cohomology"]["rank"] == 3);
    CHECK(j["perron"]["minpoly"] == json({"-1", "-4", "1"}));
    CHECK(j["perron"]["lambda"]["approx"].get<std::string>().substr(0, 7) ==
          "4.23606");  // 2 + sqrt(5)
}

TEST_CASE("analyze output is deterministic") {
    RunResult r1 = run("analyze " + fx("thue_morse.sub") + " --seed 7");
    RunResult r2 = run("analyze " + fx("thue_morse.sub") + " --seed 7");
    CHECK(r1.output == r2.output);
}

TEST_CASE("malformed input exits 2 with position info") {
    RunResult r = run("analyze " + fx("bad_syntax.sub"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 2") != std::string::npos);
}

TEST_CASE("non-primitive input exits 3") {
    RunResult r = run("analyze " + fx("nonprimitive.sub"));
    CHECK(r.exit_code == 3);
}

TEST_CASE("regularity certificate via the command line") {
    RunResult r = run("regularity " + fx("thue_morse.sub") +
                      " --patch aababb --controls ab aa");
    REQUIRE(r.exit_code == 0);
    json j = parse(r);
    CHECK(j["coefficients"] == json({"1/2", "-1/2"}));
    CHECK(j["exact_on_supertiles"] == true);
    CHECK(j["certificate"]["bounded"] == true);
    CHECK(j["certificate"]["boundary_determined"] == true);
}

TEST_CASE("regularity of a control patch is a unit vector") {
    RunResult r = run("regularity " + fx("thue_morse.sub") +
                      " --patch ab --controls ab aa");
    REQUIRE(r.exit_code == 0);
    json j = parse(r);
    CHECK(j["coefficients"] == json({"1", "0"}));
    CHECK(j["certificate"]["error_bound"] == "0");
}

TEST_CASE("illegal patch exits 5") {
    RunResult r = run("regularity " + fx("thue_morse.sub") + " --patch aaa");
    CHECK(r.exit_code == 5);
}

TEST_CASE("matrix mode") {
    RunResult r = run("matrix-mode " + fx("doubling_matrix.json") +
                      " --q -2,1 --r 1,1");
    REQUIRE(r.exit_code == 0);
    json j = parse(r);
    CHECK(j["primitive"] == true);
    CHECK(j["lambda"]["coords"] == json({"2"}));
    CHECK(j["resultant"] == "3");
    CHECK(j["reduced_resultant"] == "3");

    json k = parse(run("matrix-mode " + fx("sixteen_matrix.json")));
    CHECK(k["lambda"]["coords"] == json({"16"}));
    CHECK(k["right_eigenvector"][0]["coords"] == json({"7/15"}));
    CHECK(k["right_eigenvector"][1]["coords"] == json({"8/15"}));

    json id = parse(run("matrix-mode " + fx("identity_matrix.json")));
    CHECK(id["primitive"] == false);
}

TEST_CASE("convergence command") {
    RunResult bad = run("convergence " + fx("thue_morse.sub") +
                        " --patch ab --scales 100");
    CHECK(bad.exit_code == 2);

    RunResult r = run("convergence " + fx("thue_morse.sub") +
                      " --patch ab --scales 200 400 800 1600 3200 6400 12800 "
                      "25600 --csv cli_conv.csv");
    REQUIRE(r.exit_code == 0);
    json j = parse(r);
    double fit = std::stod(j["report"]["fitted_exponent"].get<std::string>());
    CHECK(fit > 0.6);
    std::ifstream csv("cli_conv.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "V,sup_deviation");
    int rows = 0;
    for (std::string line; std::getline(csv, line);) ++rows;
    CHECK(rows == 8);
    std::remove("cli_conv.csv");
}

TEST_CASE("exact values round-trip through the JSON encoding") {
    using tilecoh::AlgebraicNumber;
    using tilecoh::PerronData;
    using tilecoh::Substitution;
    using tilecoh::algebraic_from_json;
    using tilecoh::algebraic_json;
    using tilecoh::parse_substitution;
    using tilecoh::perron_data;
    RunResult r = run("analyze " + fx("fib_variant.sub"));
    REQUIRE(r.exit_code == 0);
    json j = parse(r);
    Substitution s = parse_substitution(
        "a -> b a a a b\n"
        "b -> a b a\n");
    PerronData pd = perron_data(s);
    for (const auto& f : j["frequencies"]) {
        AlgebraicNumber back = algebraic_from_json(f["frequency"], pd.field);
        json again = algebraic_json(back);
        CHECK(again["coords"] == f["frequency"]["coords"]);
    }
    // Letter frequencies re-parse to the exact library values.
    AlgebraicNumber fa =
        algebraic_from_json(j["perron"]["letter_frequencies"]["a"], pd.field);
    CHECK(fa == pd.letter_freqs[0]);
}
