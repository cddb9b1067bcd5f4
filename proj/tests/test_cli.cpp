// End-to-end checks of the command-line tool (spawned as a subprocess).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fdpc/codespec.hpp"
#include "fdpc/sparse.hpp"

namespace {

struct RunResult {
    int exitCode;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string outFile = "cli_stdout.txt";
    std::string cmd = std::string(FDPC_CLI_PATH) + " " + args + " > " + outFile + " 2> cli_stderr.txt";
    int rc = std::system(cmd.c_str());
    std::ifstream f(outFile);
    std::stringstream ss;
    ss << f.rdbuf();
    int exitCode = rc == -1 ? -1 : WEXITSTATUS(rc);
    return {exitCode, ss.str()};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("construct: t=2 base code") {
    auto r = run_cli("construct --t 2 --s 1 --out cli_t2");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("n=16 k=9") != std::string::npos);
    auto spec = fdpc::load_spec("cli_t2.spec");
    CHECK(spec.t == 2);
    auto m = fdpc::load_matrix("cli_t2.pcm");
    CHECK(m.rows == 8);
    CHECK(m.cols == 16);
}

TEST_CASE("construct: usage errors exit with 2") {
    CHECK(run_cli("construct --t 1").exitCode == 2);
    CHECK(run_cli("construct").exitCode == 2);
    CHECK(run_cli("bogus-subcommand").exitCode == 2);
}

TEST_CASE("construct: shortened (1023,898) code") {
    auto r = run_cli("construct --t 16 --s 2 --seed 7 --shorten-w4 1 --out cli_t16");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("n=1023 k=898") != std::string::npos);

    // an instance with exactly one weight-4 codeword comes out weight-4-free
    auto r2 = run_cli("construct --t 16 --s 2 --seed 2 --shorten-w4 1 --out cli_t16b");
    CHECK(r2.exitCode == 0);
    CHECK(r2.out.find("n=1023 k=898") != std::string::npos);
    CHECK(r2.out.find("no_weight4_codeword") != std::string::npos);
}

TEST_CASE("bound: bec curve has 11 rows for the 0.10:0.01:0.20 grid") {
    REQUIRE(run_cli("construct --t 8 --s 2 --seed 3 --out cli_t8").exitCode == 0);
    auto r = run_cli("bound --spec cli_t8.spec --channel bec --grid 0.10:0.01:0.20 --alpha4 1");
    CHECK(r.exitCode == 0);
    CHECK(count_lines(r.out) == 12);  // header + 11 points
    CHECK(r.out.rfind("channel_param,bound_value\n", 0) == 0);

    // values increase with eps
    std::istringstream ss(r.out);
    std::string line;
    std::getline(ss, line);
    double prev = -1;
    while (std::getline(ss, line)) {
        double v = std::stod(line.substr(line.find(',') + 1));
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("bound: awgn curve decreases with SNR") {
    auto r = run_cli("bound --spec cli_t8.spec --channel awgn --grid 4.0,4.5,5.0,5.5 --alpha4 1");
    CHECK(r.exitCode == 0);
    std::istringstream ss(r.out);
    std::string line;
    std::getline(ss, line);
    double prev = 1e9;
    while (std::getline(ss, line)) {
        double v = std::stod(line.substr(line.find(',') + 1));
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("bound: gamma >= 1 diagnostic at n=256 with alpha4=0") {
    auto r = run_cli("bound --spec cli_t8.spec --channel bec --grid 0.1 --alpha4 0");
    CHECK(r.exitCode == 1);

    // n=64 with alpha4=0 still has gamma < 1
    REQUIRE(run_cli("construct --t 4 --s 2 --seed 3 --out cli_t4").exitCode == 0);
    auto ok = run_cli("bound --spec cli_t4.spec --channel bec --grid 0.1 --alpha4 0");
    CHECK(ok.exitCode == 0);
}

TEST_CASE("analyze and oracle") {
    REQUIRE(run_cli("construct --t 2 --s 1 --out cli_small").exitCode == 0);
    auto oracle = run_cli("oracle --spec cli_small.spec");
    CHECK(oracle.exitCode == 0);
    CHECK(oracle.out.find("4,36,exact") != std::string::npos);
    CHECK(oracle.out.find("6,96,exact") != std::string::npos);

    auto bound = run_cli("analyze --spec cli_small.spec --mode bound --wmax 8");
    CHECK(bound.exitCode == 0);
    CHECK(bound.out.find("8,702,upper_bound") != std::string::npos);

    REQUIRE(run_cli("construct --t 16 --s 2 --seed 5 --out cli_big").exitCode == 0);
    auto ens = run_cli("analyze --spec cli_big.spec --mode ensemble --wmax 6");
    CHECK(ens.exitCode == 0);
    CHECK(ens.out.find("4,1.32887985") != std::string::npos);
    CHECK(ens.out.find("6,13.8081380") != std::string::npos);

    // oversized oracle request fails cleanly with a usage error
    auto big = run_cli("oracle --spec cli_big.spec");
    CHECK(big.exitCode == 2);
}

TEST_CASE("simulate: smoke run and usage validation") {
    auto r = run_cli(
        "simulate --spec cli_t4.spec --channel bec --grid 0.1,0.2 --decoder mppl "
        "--trials 500 --seed 9 --max-list 64 --stop-early 0");
    CHECK(r.exitCode == 0);
    CHECK(count_lines(r.out) == 3);
    CHECK(r.out.rfind("param,trials,block_errors,bler,ber,undetected,not_unique,avg_iters,"
                      "avg_list,seconds\n", 0) == 0);

    CHECK(run_cli("simulate --spec cli_t4.spec --channel bec --grid 0.1 --trials 0").exitCode == 2);
    CHECK(run_cli("simulate --spec cli_t4.spec --channel nope --grid 0.1").exitCode == 2);
}
