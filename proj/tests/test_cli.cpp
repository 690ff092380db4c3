#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fapx/instance.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FAPX_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 512> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string data(const std::string& name) {
    return std::string(FAPX_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("cli exact", "[cli]") {
    auto res = run_cli("exact --file " + data("inst_311.txt"));
    CHECK(res.exit_code == 0);
    CHECK(res.output == "optint=2 optfrac=5/2\n");

    res = run_cli("exact --file " + data("inst_311.txt") + " --witness");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "optint=2 optfrac=5/2\nwitness=0 1 1\n");

    res = run_cli("exact --file " + data("inst_empty.txt"));
    CHECK(res.exit_code == 0);
    CHECK(res.output == "optint=0 optfrac=0\n");

    res = run_cli("exact --file " + data("inst_44.txt"));
    CHECK(res.exit_code == 0);
    CHECK(res.output == "optint=4 optfrac=4\n");

    // --k overrides the file's bin count
    res = run_cli("exact --file " + data("inst_44.txt") + " --k 4");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "optint=0 optfrac=2\n");
}

TEST_CASE("cli ffptas and fptas", "[cli]") {
    auto res = run_cli("ffptas --file " + data("inst_311.txt") + " --t 1/5");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "Value 2\n");

    res = run_cli("ffptas --file " + data("inst_311.txt") + " --t 1/5 --witness");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "Value 2\nwitness=1 0 0\n");

    res = run_cli("ffptas --file " + data("inst_311.txt") + " --t 1/10");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "None\n");

    res = run_cli("fptas --file " + data("inst_311.txt") + " --eps 1/4");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "2\n");
}

TEST_CASE("cli kway and subset-sum", "[cli]") {
    auto res = run_cli("kway --file " + data("inst_311.txt") + " --eps 1/100");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "2\n");

    res = run_cli("subset-sum --file " + data("inst_311.txt") + " --cap 3 --eps 1/10");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "3\n");

    res = run_cli("subset-sum --file " + data("inst_311.txt") +
                  " --cap 3 --eps 1/10 --witness");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "3\nitems=0\n");

    res = run_cli("subset-sum --file " + data("inst_311.txt") + " --cap 1/2 --eps 1/10");
    CHECK(res.exit_code == 2);
}

TEST_CASE("cli reduce", "[cli]") {
    const std::string prefix = std::string(FAPX_TEST_DATA_DIR) + "/../tmp_reduce_out";
    auto res = run_cli("reduce --file " + data("ecp_1122.txt") + " --out " + prefix);
    CHECK(res.exit_code == 0);
    CHECK(res.output == "t=1/11\n");
    CHECK(slurp(prefix + ".x2") == "k 2\n14 14 16 16\n");
    CHECK(slurp(prefix + ".x4") == "k 4\n14 14 16 16 12 12 12 12 12 12\n");

    // the produced 4-way instance feeds straight back into the oracle
    res = run_cli("exact --file " + prefix + ".x4");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "optint=30 optfrac=33\n");

    std::remove((prefix + ".x2").c_str());
    std::remove((prefix + ".x4").c_str());

    res = run_cli("reduce --file " + data("ecp_odd.txt") + " --out " + prefix);
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("error:") == 0);
}

TEST_CASE("cli claim4", "[cli]") {
    const auto res = run_cli("claim4 --max-m 2 --max-value 3");
    CHECK(res.exit_code == 0);
    std::istringstream in(res.output);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "instance,ecp,fourway,ffptas_sim,equivalent");
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(line.substr(line.size() - 5) == ",true");
        ++rows;
    }
    CHECK(rows == 12);
}

TEST_CASE("cli motzkin", "[cli]") {
    const auto res = run_cli("motzkin --file " + data("graph_k4.txt"));
    CHECK(res.exit_code == 0);
    std::istringstream in(res.output);
    std::string header, row;
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, row));
    CHECK(header == "n,edges,omega,formula_value,replicator_value,gap");
    CHECK(row.rfind("4,6,4,3/8,0.375", 0) == 0);
}

TEST_CASE("cli bench determinism", "[cli]") {
    const std::string args =
        "bench --seed 7 --count 5 --max-m 6 --max-size 30 --t 1/4 --eps 1/4 --eps 1/10";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.rfind("# generator=mt19937_64 seed=7\n", 0) == 0);
}

TEST_CASE("cli error taxonomy", "[cli]") {
    CHECK(run_cli("exact --file /nonexistent/missing.txt").exit_code == 2);
    CHECK(run_cli("exact --file " + data("inst_bad.txt")).exit_code == 2);
    CHECK(run_cli("ffptas --file " + data("inst_311.txt") + " --t 0").exit_code == 2);
    CHECK(run_cli("fptas --file " + data("inst_311.txt") + " --eps 7/4").exit_code == 2);
    CHECK(run_cli("exact --file " + data("inst_guard.txt")).exit_code == 3);
    CHECK(run_cli("exact").exit_code == 2);          // missing required flag
    CHECK(run_cli("").exit_code == 2);               // missing subcommand
    CHECK(run_cli("frobnicate").exit_code == 2);     // unknown subcommand
    CHECK(run_cli("exact --bogus 1").exit_code == 2);

    const auto guard_msg = run_cli("exact --file " + data("inst_guard.txt"));
    CHECK(guard_msg.output.find("error:") == 0);
}

TEST_CASE("cli help exits cleanly", "[cli]") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("bench --help").exit_code == 0);
}
