#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef _WIN32
#include <sys/wait.h>
#endif

#ifndef HLOC_CLI_PATH
#error "HLOC_CLI_PATH must be defined"
#endif
#ifndef HLOC_DATA_DIR
#error "HLOC_DATA_DIR must be defined"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string capture = "cli_capture_tmp.txt";
    const std::string cmd =
        std::string(HLOC_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult res;
#ifdef _WIN32
    res.code = raw;
#else
    res.code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
#endif
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    res.output = ss.str();
    std::remove(capture.c_str());
    return res;
}

std::string data(const char* name) {
    return std::string(HLOC_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("profile prints row statistics") {
    const RunResult r = run("profile " + data("A1.json"));
    CHECK(r.code == 0);
    CHECK(r.output.find("row") != std::string::npos);
    CHECK(r.output.find("15") != std::string::npos);  // r_1 of the first worked tensor
    CHECK(r.output.find("17") != std::string::npos);  // r_2
}

TEST_CASE("classify reports the expected classes") {
    const RunResult r = run("classify " + data("counterexample.json") + " --json");
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["dsdd"]["value"] == true);
    CHECK(j["qdsdd"]["value"] == true);
    CHECK(j["double_b"]["value"] == false);
    CHECK(j["double_b_bar"]["value"] == true);
    CHECK(j["quasi_double_b_bar"]["value"] == true);
    CHECK(j["z_tensor"] == true);
    CHECK(j["symmetric"] == true);

    const RunResult paper = run("classify " + data("A1.json") + " --quasi-def paper");
    CHECK(paper.code == 0);
}

TEST_CASE("intervals --hull matches the tabulated endpoints") {
    const RunResult r = run("intervals " + data("A1.json") + " --json");
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    const auto& omega = j["brauer"]["hull"][0];
    CHECK(std::abs(omega["lo"].get<double>() - 3.0) <= 1e-3);
    CHECK(std::abs(omega["hi"].get<double>() - 36.6119) <= 1e-3);
    const auto& psi = j["quasi-double-b-bar"]["hull"][0];
    CHECK(std::abs(psi["lo"].get<double>() - 9.0) <= 1e-3);
    CHECK(std::abs(psi["hi"].get<double>() - 36.6119) <= 1e-3);

    const RunResult text = run("intervals " + data("A1.json") + " --hull --set gersh");
    CHECK(text.code == 0);
    CHECK(text.output.find("gersh") != std::string::npos);
    CHECK(text.output.find("[3, 37]") != std::string::npos);

    const RunResult literal =
        run("intervals " + data("A1.json") + " --tilde literal --set double-b-bar");
    CHECK(literal.code == 0);
}

TEST_CASE("eigs prints the exact spectrum") {
    const RunResult r = run("eigs " + data("A2.json") + " --method exact2 --json");
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    bool low = false, high = false;
    for (const auto& p : j) {
        const double lam = p["lambda"].get<double>();
        if (std::abs(lam - (-20.2289)) <= 1e-3) low = true;
        if (std::abs(lam - 16.0666) <= 1e-3) high = true;
        CHECK(p["residual"].get<double>() <= 1e-8);
    }
    CHECK(low);
    CHECK(high);

    const RunResult s = run("eigs " + data("A1.json") + " --method sshopm --starts 8 --seed 3");
    CHECK(s.code == 0);
    CHECK(s.output.find("lambda") != std::string::npos);
}

TEST_CASE("certify") {
    const RunResult pd = run("certify " + data("A1.json") + " --json");
    CHECK(pd.code == 0);
    CHECK(nlohmann::json::parse(pd.output)["verdict"] == "Certified");

    const RunResult unk = run("certify " + data("counterexample.json") + " --json");
    CHECK(unk.code == 0);
    CHECK(nlohmann::json::parse(unk.output)["verdict"] == "Unknown");
}

TEST_CASE("check exits 0 when all eigenvalues are contained") {
    for (const char* f : {"A1.json", "A2.json", "counterexample.json"}) {
        const RunResult r = run("check " + data(f) + " --json");
        CHECK(r.code == 0);
        CHECK(nlohmann::json::parse(r.output)["all_contained"] == true);
    }
}

TEST_CASE("error exit codes") {
    // missing file -> input error
    CHECK(run("classify no_such_file.json").code == 1);

    // exact2 on dimension != 2 -> infeasible
    const std::string tmp = "cli_dim3_tmp.json";
    {
        std::ofstream out(tmp);
        out << R"({"order": 2, "dim": 3, "format": "dense",)"
            << R"( "dense": [4, 0, 0, 0, 4, 0, 0, 0, 4]})";
    }
    CHECK(run("eigs " + tmp + " --method exact2").code == 2);
    std::remove(tmp.c_str());

    // malformed JSON -> input error
    const std::string bad = "cli_bad_tmp.json";
    {
        std::ofstream out(bad);
        out << "{ not json";
    }
    CHECK(run("classify " + bad).code == 1);
    std::remove(bad.c_str());
}
