#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout, plus stderr when redirected
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + FFJ_CLI_PATH + "\" " + args;
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("gen prints the generating set in rank order", "[cli]") {
    const auto res = run_cli("gen --n 4 --set prime");
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.output == "(1,2)(3,4)\n(1,2,3)\n(1,3,2)\n(1,3)\n");

    const auto full = run_cli("gen --n 4");
    REQUIRE(full.exit_code == 0);
    // Default set is the full one: (4^2+4-6)/2 = 7 lines.
    REQUIRE(std::count(full.output.begin(), full.output.end(), '\n') == 7);
}

TEST_CASE("gen requires an order", "[cli]") {
    const auto res = run_cli("gen 2>&1");
    REQUIRE(res.exit_code == 2);
    REQUIRE(res.output.find("requires --n") != std::string::npos);
}

TEST_CASE("out-of-range verification order reports a usage error", "[cli]") {
    const auto res = run_cli("verify aldous --n 9 2>&1");
    REQUIRE(res.exit_code == 2);
    REQUIRE(res.output.find("n out of implemented brute-force range") != std::string::npos);
}

TEST_CASE("unknown suite reports a usage error", "[cli]") {
    const auto res = run_cli("verify nosuchsuite 2>&1");
    REQUIRE(res.exit_code == 2);
    REQUIRE(res.output.find("unknown suite") != std::string::npos);
}

TEST_CASE("verification output is reproducible without timestamps", "[cli]") {
    const std::string args = "verify aldous --n 4 --no-timestamp";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.output == b.output);

    const auto doc = nlohmann::json::parse(a.output);
    REQUIRE(doc["version"] == "1.0.0");
    REQUIRE(doc["config"]["command"] == "verify");
    REQUIRE(doc["config"]["suite"] == "aldous");
    REQUIRE_FALSE(doc["config"].contains("timestamp"));
    REQUIRE(doc["reports"].size() == 2);  // both variants at one order
    for (const auto& rep : doc["reports"]) {
        REQUIRE(rep["status"] == "pass");
        REQUIRE(rep["n"] == 4);
        REQUIRE(rep["runtime_ms"] == 0.0);
        REQUIRE(rep["margins"].contains("deviation"));
    }
}

TEST_CASE("timestamped output carries a UTC stamp", "[cli]") {
    const auto res = run_cli("verify decomposition --n 5");
    REQUIRE(res.exit_code == 0);
    const auto doc = nlohmann::json::parse(res.output);
    const std::string ts = doc["config"]["timestamp"];
    REQUIRE(ts.size() == 20);
    REQUIRE(ts.back() == 'Z');
}

TEST_CASE("suite aliases reach the same suites", "[cli]") {
    const auto a = run_cli("verify theorem2 --n-min 5 --n-max 8 --no-timestamp");
    REQUIRE(a.exit_code == 0);
    const auto doc = nlohmann::json::parse(a.output);
    REQUIRE(doc["config"]["suite"] == "gap-recursion");
    REQUIRE(doc["reports"].size() == 4);
    for (const auto& rep : doc["reports"])
        REQUIRE(rep["suite"] == "gap-recursion");

    const auto b = run_cli("verify corollary1 --n 10 --no-timestamp");
    REQUIRE(b.exit_code == 0);
    REQUIRE(nlohmann::json::parse(b.output)["reports"][0]["suite"] == "fiedler-shape");

    const auto c = run_cli("verify lemma7 --n 12 --no-timestamp");
    REQUIRE(c.exit_code == 0);
    REQUIRE(nlohmann::json::parse(c.output)["reports"][0]["suite"] == "fiedler-form");
}

TEST_CASE("a forced tolerance of zero turns agreement into failure", "[cli]") {
    const auto res = run_cli("verify aldous --n 4 --set plain --tol 0 --no-timestamp");
    REQUIRE(res.exit_code == 1);
    const auto doc = nlohmann::json::parse(res.output);
    REQUIRE(doc["reports"][0]["status"] == "fail");
}

TEST_CASE("margins export as CSV", "[cli]") {
    const auto res = run_cli("verify monotone --set prime --n-min 5 --n-max 8 --format csv");
    REQUIRE(res.exit_code == 0);
    std::istringstream is(res.output);
    std::string header;
    std::getline(is, header);
    REQUIRE(header == "suite,n,status,margin,value");
    REQUIRE(res.output.find("monotone-prime,6,pass,drop,") != std::string::npos);
}

TEST_CASE("quotient matrices export as integer CSV", "[cli]") {
    const auto res = run_cli("quotient --n 5 --set prime --format csv");
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.output == "0,3,2,0,0\n3,1,1,0,0\n2,1,1,1,0\n0,0,1,3,1\n0,0,0,1,4\n");
}

TEST_CASE("quotient JSON cross-checks small orders", "[cli]") {
    const auto res = run_cli("quotient --n 5 --no-timestamp");
    REQUIRE(res.exit_code == 0);
    const auto doc = nlohmann::json::parse(res.output);
    REQUIRE(doc["agreement"] == "cross-checked");
    REQUIRE(doc["quotient"][0][0] == 7);
    REQUIRE(doc["quotient"][2][2] == 2);

    const auto big = run_cli("quotient --n 40 --no-timestamp");
    REQUIRE(big.exit_code == 0);
    REQUIRE(nlohmann::json::parse(big.output)["agreement"] == "closed-form");
}

TEST_CASE("spectrum export carries values and residuals", "[cli]") {
    const auto res = run_cli("spectrum quotient --n 4 --set prime --format csv");
    REQUIRE(res.exit_code == 0);
    std::istringstream is(res.output);
    std::string header;
    std::getline(is, header);
    REQUIRE(header == "index,eigenvalue,residual");
    int rows = 0;
    for (std::string line; std::getline(is, line);) ++rows;
    REQUIRE(rows == 4);

    const auto lap = run_cli("spectrum laplacian --n 6 --no-timestamp");
    REQUIRE(lap.exit_code == 0);
    const auto doc = nlohmann::json::parse(lap.output);
    REQUIRE(doc["values"].size() == 6);
    REQUIRE(std::abs(doc["values"][0].get<double>()) < 1e-9);  // Laplacian kernel

    const auto bad = run_cli("spectrum nosuchtarget --n 4 2>&1");
    REQUIRE(bad.exit_code == 2);
}

TEST_CASE("graph stats and edge export", "[cli]") {
    const auto dir = std::filesystem::temp_directory_path() / "ffj_cli_test";
    std::filesystem::create_directories(dir);
    const auto edge_path = (dir / "g.edges").string();

    const auto res = run_cli("graph --n 4 --set prime --out " + edge_path);
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.output.find("vertices 24\n") != std::string::npos);
    REQUIRE(res.output.find("degree 4\n") != std::string::npos);
    REQUIRE(res.output.find("connected true\n") != std::string::npos);

    std::ifstream ef(edge_path);
    std::string first;
    std::getline(ef, first);
    REQUIRE(first == "p 24 48");

    std::ifstream lf(edge_path + ".labels");
    std::string l0;
    std::getline(lf, l0);
    REQUIRE(l0 == "0 ()");

    std::filesystem::remove_all(dir);
}

TEST_CASE("reports can be written to a file", "[cli]") {
    const auto dir = std::filesystem::temp_directory_path() / "ffj_cli_out";
    std::filesystem::create_directories(dir);
    const auto out_path = (dir / "rep.json").string();

    const auto res = run_cli("verify psd --n 6 --no-timestamp --out " + out_path);
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.output.empty());
    std::ifstream f(out_path);
    REQUIRE(f.good());
    nlohmann::json doc;
    f >> doc;
    REQUIRE(doc["reports"][0]["suite"] == "psd-shift");

    std::filesystem::remove_all(dir);
}
