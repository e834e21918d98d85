#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "divlab/constructions.hpp"
#include "divlab/json_io.hpp"

using nlohmann::json;
using namespace divlab;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_file = "") {
    std::string cmd = std::string(DIVLAB_CLI_PATH) + " " + args;
    if (!stdin_file.empty()) cmd += " < " + stdin_file;
    cmd += " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(p);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/divlab_test_" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("analyze a family file") {
    const std::string path = write_temp("t0.json", family_to_json(t0()).dump());
    const RunResult r = run_cli("analyze " + path);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("size") == 10);
    CHECK(j.at("gamma").at("1") == 5);
    CHECK(j.at("gamma").at("2") == 2);
    CHECK(j.at("tau") == 3);
    CHECK(j.at("intersecting") == true);
    CHECK(j.at("saturated") == true);
}

TEST_CASE("analyze reads stdin and rejects malformed edges") {
    const std::string good = write_temp("good.json", R"({"n":4,"k":2,"edges":[[1,2],[2,3]]})");
    CHECK(run_cli("analyze -", good).exit_code == 0);
    const std::string bad = write_temp("bad.json", R"({"n":4,"k":2,"edges":[[1,9]]})");
    CHECK(run_cli("analyze -", bad).exit_code == 1);
    const std::string dup = write_temp("dup.json", R"({"n":4,"k":2,"edges":[[2,2]]})");
    CHECK(run_cli("analyze -", dup).exit_code == 1);
    const std::string wrong = write_temp("wrong.json", R"({"n":4,"k":2,"edges":[[1,2,3]]})");
    CHECK(run_cli("analyze -", wrong).exit_code == 1);
}

TEST_CASE("construct then analyze round-trips the documented stats") {
    const RunResult c = run_cli("construct fano");
    REQUIRE(c.exit_code == 0);
    const json fam = json::parse(c.out);
    CHECK(fam.at("n") == 7);
    CHECK(fam.at("edges").size() == 7);
    const std::string path = write_temp("fano.json", c.out);
    const json st = json::parse(run_cli("analyze " + path).out);
    CHECK(st.at("size") == 7);
    CHECK(st.at("gamma").at("1") == 4);
    CHECK(st.at("gamma").at("2") == 2);
    CHECK(st.at("tau") == 3);
    // emitted JSON is exactly what the library produces
    CHECK(fam == family_to_json(fano()));
}

TEST_CASE("construct generated emits generators without edges") {
    const RunResult r = run_cli("construct generated --base t0 --n 100 --k 5");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("n") == 100);
    CHECK(j.at("k") == 5);
    CHECK(j.at("generators").size() == 10);
    CHECK_FALSE(j.contains("edges"));
}

TEST_CASE("construct wreath") {
    const RunResult r = run_cli("construct wreath --a triangle --b triangle");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("edges").size() == 27);
}

TEST_CASE("bound evaluators through the CLI") {
    const RunResult r = run_cli("bound main --ell 2 --k 3 --n 117 --m 2");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("bound_name") == "main");
    CHECK(j.at("value") == "2");
    CHECK(j.at("parameters").at("hypothesis_met") == true);
    const RunResult t = run_cli("bound triple --k 4 --n 1136");
    CHECK(json::parse(t.out).at("value") == "3");
}

TEST_CASE("branching subcommand") {
    const std::string path = write_temp("fano2.json", family_to_json(fano()).dump());
    const RunResult r = run_cli("branching " + path + " --ell 2");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("holds") == true);
    CHECK(j.at("bound") == "12");
    CHECK(j.at("weighted_sum") == "2");
    const RunResult tr = run_cli("branching " + path + " --ell 2 --debug-trace");
    REQUIRE(tr.exit_code == 0);
    CHECK(json::parse(tr.out).at("trace").at("weight_at_most_one") == true);
    // the pair rule gates on covering number 4
    const std::string t0path = write_temp("t0b.json", family_to_json(t0()).dump());
    const RunResult na = run_cli("branching " + t0path + " --lemma 3.3");
    REQUIRE(na.exit_code == 0);
    CHECK(json::parse(na.out).at("applicable") == false);
    // non-saturated input is an input error
    const std::string ns = write_temp("ns.json", R"({"n":8,"k":3,"edges":[[1,2,3]]})");
    CHECK(run_cli("branching " + ns + " --ell 1").exit_code == 1);
}

TEST_CASE("search subcommand and exit codes") {
    const RunResult r = run_cli("search --k 3 --ell 2 --n-max 6 --tau-min 3");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("optimum") == "2");
    CHECK(j.at("exhausted") == true);
    CHECK(j.at("witnesses").size() == 1);
    // budget exhaustion surfaces as exit code 3
    const RunResult b = run_cli("search --k 3 --ell 2 --n-max 7 --tau-min 3 --budget-nodes 5");
    CHECK(b.exit_code == 3);
    CHECK(json::parse(b.out).at("exhausted") == false);
}

TEST_CASE("certify dispatch") {
    const RunResult bad = run_cli("certify nonsense");
    CHECK(bad.exit_code == 1);
    const RunResult wt = run_cli("certify wreath-tau --seed 5");
    REQUIRE(wt.exit_code == 0);
    const json j = json::parse(wt.out);
    CHECK(j.at("certified") == true);
    CHECK(j.at("trials") == 50);
}

TEST_CASE("reports are byte-identical across repeated runs") {
    const RunResult a = run_cli("search --k 3 --ell 2 --n-max 6 --tau-min 3 --jobs 2");
    const RunResult b = run_cli("search --k 3 --ell 2 --n-max 6 --tau-min 3 --jobs 1");
    CHECK(a.out == b.out);
    const RunResult c = run_cli("certify wreath-tau --seed 9");
    const RunResult d = run_cli("certify wreath-tau --seed 9");
    // runtime differs; compare everything else
    json jc = json::parse(c.out), jd = json::parse(d.out);
    jc.erase("runtime_seconds");
    jd.erase("runtime_seconds");
    CHECK(jc == jd);
}
