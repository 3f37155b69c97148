#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CPG_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("analyze emits the JSON schema") {
    RunResult r = run_cli("analyze --word \"x0 x2 x1^-1\" --n 12 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["betti"] == 2);
    CHECK(j["gamma"] == "1");
    CHECK(j["free_abelian"] == true);
    CHECK(j["perfect"] == false);
    CHECK(j["torsion"].is_array());
    CHECK(j["representer"] == nlohmann::json({"1", "-1", "1"}));
    CHECK(j["word"] == "x0 x2 x1^-1");
}

TEST_CASE("analyze --dump-matrix includes the circulant") {
    RunResult r = run_cli("analyze --word \"x0 x1\" --n 2 --format json --dump-matrix");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["matrix"] == nlohmann::json::parse(R"([["1","1"],["1","1"]])"));
}

TEST_CASE("family reports") {
    RunResult hrns = run_cli("family hrns --r 2 --n 6 --s 4 --format json");
    REQUIRE(hrns.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(hrns.output);
    CHECK(j["gamma"] == "16");
    CHECK(j["free_abelian"] == false);
    CHECK(j["verdict"] == "not_log");

    RunResult pri = run_cli("family prishchepov --r 4 --n 10 --k 3 --s 2 --q 7 --format json");
    REQUIRE(pri.exit_code == 0);
    nlohmann::json pj = nlohmann::json::parse(pri.output);
    CHECK(pj["infinite_cyclic_ab"] == true);
    CHECK(pj["z_check_passes"] == true);

    RunResult gh = run_cli("family gilbert-howie --n 12 --m 2 --format json");
    REQUIRE(gh.exit_code == 0);
    CHECK(nlohmann::json::parse(gh.output)["verdict"] == "log_sieradski");
}

TEST_CASE("scans, formats, and exit codes") {
    RunResult conj = run_cli("scan conjecture53 --max-n 36");
    CHECK(conj.exit_code == 0);

    RunResult csv = run_cli("scan free-abelian --word \"x0 x2 x1^-1\" --max-n 6 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output.rfind("n,betti,gamma_or_digits,hit\n", 0) == 0);
    CHECK(csv.output.find("6,2,1,1") != std::string::npos);

    RunResult json_scan =
        run_cli("scan perfect --word \"x0 x2 x1^-1\" --max-n 12 --format json");
    REQUIRE(json_scan.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(json_scan.output);
    CHECK(j["hits"] == nlohmann::json({1, 5, 7, 11}));
}

TEST_CASE("sieradski-log emits DOT and JSON") {
    RunResult dot = run_cli("sieradski-log --l 2");
    REQUIRE(dot.exit_code == 0);
    CHECK(dot.output.find("digraph log {") != std::string::npos);
    CHECK(dot.output.find("\"a0\" -> \"a1\" [label=\"b0\"];") != std::string::npos);

    RunResult j = run_cli("sieradski-log --l 1 --format json");
    REQUIRE(j.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["components"] == 2);
    CHECK(parsed["log"]["vertices"].size() == 4);
    CHECK(parsed["log"]["edges"].size() == 4);
}

TEST_CASE("mahler subcommand") {
    RunResult r = run_cli("mahler --poly \"t^2 - t - 1\" --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(std::abs(j["measure"].get<double>() - 1.6180339887) < 1e-8);
}

TEST_CASE("verify dispatch") {
    CHECK(run_cli("verify growth").exit_code == 0);
    CHECK(run_cli("verify nonsense").exit_code == 1);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli("analyze --word \"x0\"").exit_code == 1);       // missing --n
    CHECK(run_cli("analyze --word \"y0\" --n 3").exit_code == 1); // bad word
    CHECK(run_cli("bogus").exit_code == 1);
    CHECK(run_cli("mahler --poly \"7\"").exit_code == 1);         // constant polynomial
}
