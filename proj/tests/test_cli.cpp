#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef CANALGEO_CLI_PATH
#error "CANALGEO_CLI_PATH must point at the canalgeo binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CANALGEO_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
    const int st = pclose(pipe);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cheeger subcommand on builtins") {
    const RunResult square = run("cheeger --body builtin:unit-square");
    CHECK(square.exit_code == 0);
    CHECK(contains(square.output, "0.26507945"));

    const RunResult disc = run("cheeger --body builtin:disc --m 64 --format json");
    CHECK(disc.exit_code == 0);
    CHECK(contains(disc.output, "\"t_star\""));
    const auto pos = disc.output.find("\"t_star\": 0.49");
    CHECK(pos != std::string::npos);
}

TEST_CASE("cheeger subcommand error paths") {
    CHECK(run("cheeger --body /does/not/exist.json").exit_code == 2);

    std::ofstream("/tmp/canalgeo_collinear.json")
        << R"({"type":"polygon","vertices":[[0,0],[1,0],[2,0]]})";
    CHECK(run("cheeger --body /tmp/canalgeo_collinear.json").exit_code == 3);

    std::ofstream("/tmp/canalgeo_bad.json") << "{nope";
    CHECK(run("cheeger --body /tmp/canalgeo_bad.json").exit_code == 2);

    CHECK(run("nonsense-subcommand").exit_code == 2);
}

TEST_CASE("canal-bounds reports the square verdict") {
    const RunResult r = run("canal-bounds --body builtin:unit-square");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "cylinder_limit    0.25"));
    CHECK(contains(r.output, "verdict_q1        no"));
    CHECK(contains(r.output, "join-body"));

    const RunResult disc = run("canal-bounds --body builtin:disc --m 64");
    CHECK(disc.exit_code == 0);
    CHECK(contains(disc.output, "verdict_q1        yes"));
}

TEST_CASE("canal-bounds accepts witness files") {
    std::ofstream("/tmp/canalgeo_cube.json") << R"({"type":"polytope3","vertices":[
        [0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1],[0,1,1],[1,1,1]]})";
    const RunResult r =
        run("canal-bounds --body builtin:unit-square --witness /tmp/canalgeo_cube.json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "/tmp/canalgeo_cube.json"));

    std::ofstream("/tmp/canalgeo_moved.json") << R"({"type":"polytope3","vertices":[
        [5,0,0],[6,0,0],[5,1,0],[6,1,0],[5,0,1],[6,0,1],[5,1,1],[6,1,1]]})";
    const RunResult bad =
        run("canal-bounds --body builtin:unit-square --witness /tmp/canalgeo_moved.json");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("reproduce targets pass in their proved directions") {
    const RunResult ah = run("reproduce prop-AH --n 3 --h-range 80:86");
    CHECK(ah.exit_code == 0);
    CHECK(contains(ah.output, "PASS"));
    CHECK(contains(ah.output, "82.5454"));

    const RunResult dil = run("reproduce lemma-dilation --body builtin:cube --lambdas 1,2,10,100");
    CHECK(dil.exit_code == 0);
    CHECK(contains(dil.output, "0.248756218905"));
    CHECK(contains(dil.output, "PASS"));

    const RunResult eq = run("reproduce prop-eq18 --h 100");
    CHECK(eq.exit_code == 0);
    CHECK(contains(eq.output, "PASS"));

    const RunResult pyr = run("reproduce lemma-pyramid --h 100");
    CHECK(pyr.exit_code == 0);
    CHECK(contains(pyr.output, "PASS"));
}

TEST_CASE("search emits jsonl and is byte-deterministic per seed") {
    const std::string args = "search --check ghp --trials 40 --seed 7";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "\"summary\":true"));
    CHECK(contains(a.output, "\"violations\":0"));
    // one record per line plus the summary
    const long lines = std::count(a.output.begin(), a.output.end(), '\n');
    CHECK(lines == 41);
}

TEST_CASE("search proj-ratio violations coexist with a non-calibrable base") {
    const RunResult r =
        run("search --check proj-ratio --projection builtin:unit-square --trials 120 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"check\":\"projection-ratio\""));
}

TEST_CASE("csv output for the dilation table has the documented columns") {
    const RunResult r =
        run("reproduce lemma-dilation --body builtin:cube --lambdas 1,2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "lambda,volume,surface,ratio"));
}
