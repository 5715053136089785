#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bfre/oracle.hpp"
#include "bfre/result.hpp"
#include "support.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace support;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// runs the tool with stderr folded into stdout
Run run_tool(const std::string& args) {
    const std::string cmd = std::string(BFRE_TOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string("\"") + BFRE_FIXTURE_DIR + "/" + name + "\"";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

} // namespace

TEST_CASE("check reports solvability through the exit code" * doctest::test_suite("cli")) {
    const Run yes = run_tool("check " + fixture("motor.json"));
    CHECK(yes.code == 0);
    const auto doc = bfre::ResultDocument::from_json(yes.out);
    CHECK(doc.solvable);
    CHECK_FALSE(doc.feasible_pairs.has_value());
    CHECK_FALSE(doc.greatest.has_value());

    const Run no = run_tool("check " + fixture("unsolvable.json"));
    CHECK(no.code == 1);
    CHECK_FALSE(bfre::ResultDocument::from_json(no.out).solvable);
}

TEST_CASE("bad input exits with code 2 and a located message" * doctest::test_suite("cli")) {
    const Run missing = run_tool("check no_such_file.json");
    CHECK(missing.code == 2);
    CHECK(missing.out.find("error:") != std::string::npos);
    CHECK(missing.out.find("cannot open") != std::string::npos);

    const Run garbled = run_tool("check " + fixture("malformed.json"));
    CHECK(garbled.code == 2);
    CHECK(garbled.out.find("malformed JSON") != std::string::npos);

    const Run range = run_tool("solve " + fixture("badvalue.json"));
    CHECK(range.code == 2);
    CHECK(range.out.find("a_plus[1][2]") != std::string::npos);
    CHECK(range.out.find("outside [0,1]") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2" * doctest::test_suite("cli")) {
    CHECK(run_tool("").code == 2);
    CHECK(run_tool("frobnicate").code == 2);
    CHECK(run_tool("solve " + fixture("motor.json") + " --frobnicate").code == 2);
    CHECK(run_tool("gen cli_scratch_nogen.json -m 3").code == 2);  // missing -n
    CHECK(run_tool("gen cli_scratch_nogen.json -m 0 -n 2").code == 2);
    CHECK(run_tool("--help").code == 0);
    CHECK(run_tool("solve --help").code == 0);
}

TEST_CASE("solve emits the full document by default" * doctest::test_suite("cli")) {
    const Run r = run_tool("solve " + fixture("motor.json"));
    CHECK(r.code == 0);
    const auto doc = bfre::ResultDocument::from_json(r.out);

    CHECK(doc.solvable);
    REQUIRE(doc.feasible_pairs.has_value());
    REQUIRE(doc.feasible_pairs->size() == 2);
    CHECK((*doc.feasible_pairs)[0] == bfre::FeasiblePair{{1}, {2, 3}});
    CHECK((*doc.feasible_pairs)[1] == bfre::FeasiblePair{{1, 2}, {3}});
    REQUIRE(doc.greatest.has_value());
    REQUIRE(doc.greatest->has_value());
    CHECK(**doc.greatest == tuple({"0.75", "1", "0"}));
    REQUIRE(doc.maximal.has_value());
    CHECK(*doc.maximal == std::vector<bfre::Assignment>{tuple({"0.75", "1", "0"})});
    REQUIRE(doc.lower.has_value());
    CHECK(doc.lower->kind == bfre::LowerDescription::Kind::finite_minimals);
    CHECK(doc.lower->tuples == std::vector<bfre::Assignment>{tuple({"0.75", "0", "0"})});
    CHECK(doc.diagnostics.empty());

    CHECK(r.out.find("\"0.75\"") != std::string::npos);
    CHECK(r.out == run_tool("solve --all " + fixture("motor.json")).out);
}

TEST_CASE("field flags narrow the document" * doctest::test_suite("cli")) {
    const Run top = run_tool("solve --greatest " + fixture("motor.json"));
    CHECK(top.code == 0);
    const auto doc = bfre::ResultDocument::from_json(top.out);
    CHECK(doc.greatest.has_value());
    CHECK_FALSE(doc.feasible_pairs.has_value());
    CHECK_FALSE(doc.maximal.has_value());
    CHECK_FALSE(doc.lower.has_value());

    const Run minimal = run_tool("solve --minimal " + fixture("motor.json"));
    const Run least = run_tool("solve --least " + fixture("motor.json"));
    CHECK(minimal.out == least.out);
    const auto low = bfre::ResultDocument::from_json(minimal.out);
    CHECK(low.lower.has_value());
    CHECK_FALSE(low.greatest.has_value());

    const Run pair_max = run_tool("solve --pairs --maximal " + fixture("motor.json"));
    const auto pm = bfre::ResultDocument::from_json(pair_max.out);
    CHECK(pm.feasible_pairs.has_value());
    CHECK(pm.maximal.has_value());
    CHECK_FALSE(pm.greatest.has_value());
    CHECK_FALSE(pm.lower.has_value());
}

TEST_CASE("solve output is byte-stable across runs and workers" *
          doctest::test_suite("cli")) {
    const Run a = run_tool("solve --threads 1 " + fixture("motor.json"));
    const Run b = run_tool("solve --threads 4 " + fixture("motor.json"));
    const Run c = run_tool("solve --threads 1 " + fixture("motor.json"));
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("solve propagates unsolvability" * doctest::test_suite("cli")) {
    const Run r = run_tool("solve --all " + fixture("unsolvable.json"));
    CHECK(r.code == 1);
    const auto doc = bfre::ResultDocument::from_json(r.out);
    CHECK_FALSE(doc.solvable);
    REQUIRE(doc.feasible_pairs.has_value());
    CHECK(doc.feasible_pairs->empty());
    CHECK_FALSE(doc.greatest.has_value());
    CHECK_FALSE(doc.maximal.has_value());
    CHECK_FALSE(doc.lower.has_value());
}

TEST_CASE("the width cap trips exit code 3" * doctest::test_suite("cli")) {
    const Run r = run_tool("solve --cap 2 " + fixture("motor.json"));
    CHECK(r.code == 3);
    CHECK(r.out.find("error:") != std::string::npos);
    CHECK(r.out.find("cap") != std::string::npos);
}

TEST_CASE("gen writes a deterministic solvable instance" * doctest::test_suite("cli")) {
    const Run first = run_tool("gen cli_scratch_gen.json --seed 9 -m 4 -n 2 --q 10");
    CHECK(first.code == 0);
    CHECK(first.out.find("wrote cli_scratch_gen.json and cli_scratch_gen.planted.json") !=
          std::string::npos);

    const std::string instance_text = slurp("cli_scratch_gen.json");
    const std::string sidecar_text = slurp("cli_scratch_gen.planted.json");

    const auto sys = bfre::parse_system(instance_text);
    CHECK(sys.rows() == 2);
    CHECK(sys.cols() == 4);

    const auto side = nlohmann::json::parse(sidecar_text);
    CHECK(side.at("seed").get<std::uint64_t>() == 9);
    CHECK(side.at("m").get<std::size_t>() == 4);
    CHECK(side.at("n").get<std::size_t>() == 2);
    CHECK(side.at("q").get<unsigned>() == 10);
    bfre::Assignment planted;
    for (const auto& v : side.at("planted")) planted.push_back(S(v.get<std::string>().c_str()));
    CHECK(is_solution(sys, planted));

    const Run second = run_tool("gen cli_scratch_gen.json --seed 9 -m 4 -n 2 --q 10");
    CHECK(second.code == 0);
    CHECK(slurp("cli_scratch_gen.json") == instance_text);
    CHECK(slurp("cli_scratch_gen.planted.json") == sidecar_text);

    // the generated instance is solvable end to end
    CHECK(run_tool("check cli_scratch_gen.json").code == 0);
}

TEST_CASE("verify accepts the solver's own answer" * doctest::test_suite("cli")) {
    const Run solved = run_tool("solve " + fixture("motor.json"));
    REQUIRE(solved.code == 0);
    spill("cli_scratch_motor_result.json", solved.out);

    const Run ok = run_tool("verify " + fixture("motor.json") + " cli_scratch_motor_result.json");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("ok") != std::string::npos);
    CHECK(ok.out.find("violation") == std::string::npos);

    const Run coarse = run_tool("verify --q 10 " + fixture("motor.json") +
                                " cli_scratch_motor_result.json");
    CHECK(coarse.code == 0);
}

TEST_CASE("verify flags false claims with exit code 4" * doctest::test_suite("cli")) {
    SUBCASE("claimed greatest is not a solution") {
        spill("cli_scratch_bogus1.json",
              R"({"solvable": true, "greatest": ["1", "1", "1"]})" "\n");
        const Run r = run_tool("verify " + fixture("motor.json") + " cli_scratch_bogus1.json");
        CHECK(r.code == 4);
        CHECK(r.out.find("violation:") != std::string::npos);
        CHECK(r.out.find("not a solution") != std::string::npos);
    }

    SUBCASE("claimed greatest is dominated by a real solution") {
        spill("cli_scratch_bogus2.json",
              R"({"solvable": true, "greatest": ["0.75", "0", "0"]})" "\n");
        const Run r = run_tool("verify " + fixture("motor.json") + " cli_scratch_bogus2.json");
        CHECK(r.code == 4);
        CHECK(r.out.find("strictly above") != std::string::npos);
    }

    SUBCASE("claimed minimal has a solution below it") {
        spill("cli_scratch_bogus3.json",
              R"({"solvable": true, "lower": {"kind": "finite_minimals",)"
              R"( "tuples": [["0.75", "0.05", "0"]]}})" "\n");
        const Run r = run_tool("verify " + fixture("motor.json") + " cli_scratch_bogus3.json");
        CHECK(r.code == 4);
        CHECK(r.out.find("strictly below") != std::string::npos);
    }

    SUBCASE("claimed pair is not feasible") {
        spill("cli_scratch_bogus4.json",
              R"({"solvable": true, "feasible_pairs": [{"j_plus": [3], "j_minus": [1, 2]}]})" "\n");
        const Run r = run_tool("verify " + fixture("motor.json") + " cli_scratch_bogus4.json");
        CHECK(r.code == 4);
        CHECK(r.out.find("not feasible") != std::string::npos);
    }

    SUBCASE("out-of-range pair index is a violation, not a crash") {
        spill("cli_scratch_bogus5.json",
              R"({"solvable": true, "feasible_pairs": [{"j_plus": [9], "j_minus": [1, 2]}]})" "\n");
        const Run r = run_tool("verify " + fixture("motor.json") + " cli_scratch_bogus5.json");
        CHECK(r.code == 4);
        CHECK(r.out.find("outside 1..3") != std::string::npos);
    }

    SUBCASE("garbled result document is an input error") {
        spill("cli_scratch_bogus6.json", "{\"solvable\": \"maybe\"}\n");
        const Run r = run_tool("verify " + fixture("motor.json") + " cli_scratch_bogus6.json");
        CHECK(r.code == 2);
    }
}

TEST_CASE("result documents round-trip" * doctest::test_suite("cli")) {
    const auto sys = make_system({{"0.4", "0.2", "0.5"}, {"0", "0", "0.4"}},
                                 {{"0.7", "0.1", "0.2"}, {"0.9", "0", "0"}}, {"0.3", "0"});
    const auto doc = bfre::make_result(bfre::summarize(sys), {});
    const auto back = bfre::ResultDocument::from_json(doc.to_json());
    CHECK(back.solvable == doc.solvable);
    CHECK(back.feasible_pairs == doc.feasible_pairs);
    CHECK(back.greatest == doc.greatest);
    CHECK(back.maximal == doc.maximal);
    CHECK(back.lower == doc.lower);
    CHECK(back.diagnostics == doc.diagnostics);
    CHECK(bfre::ResultDocument::from_json(doc.to_json()).to_json() == doc.to_json());

    SUBCASE("a null greatest survives the trip") {
        const auto duo = make_system({{"0.1", "0.2"}}, {{"0.5", "0.5"}}, {"0.5"});
        const auto two = bfre::make_result(bfre::summarize(duo), {});
        REQUIRE(two.greatest.has_value());
        CHECK_FALSE(two.greatest->has_value()); // no greatest solution exists
        CHECK(two.to_json().find("\"greatest\": null") != std::string::npos);
        const auto again = bfre::ResultDocument::from_json(two.to_json());
        REQUIRE(again.greatest.has_value());
        CHECK_FALSE(again.greatest->has_value());
    }
}
