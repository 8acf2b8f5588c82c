// End-to-end checks of the command-line tool: exit-code contract
// (0 pass, 1 verification failure, 2 usage/config error) and output shapes.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef QZX_CLI_PATH
#error "QZX_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(QZX_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("derive prints the grade-2 exponent") {
    const auto r = run("derive --variant escalating --order 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(-q/(1+q))*AB") != std::string::npos);
    CHECK(r.output.find("(1/(1+q))*BA") != std::string::npos);
    CHECK(r.output.find("grade 4 (base q^4)") != std::string::npos);
}

TEST_CASE("uniform grade-2 equals the escalating one") {
    const auto esc = run("derive --variant escalating --order 2");
    const auto uni = run("derive --variant uniform --order 2");
    CHECK(esc.exit_code == 0);
    CHECK(uni.exit_code == 0);
    const auto tail = [](const std::string& s) {
        return s.substr(s.find("grade 2") + 19); // skip the base label
    };
    CHECK(tail(esc.output) == tail(uni.output));
}

TEST_CASE("order cap produces a usage error naming the cap") {
    const auto r = run("derive --order 99");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("[2, 10]") != std::string::npos);
}

TEST_CASE("unknown flags are usage errors") {
    CHECK(run("derive --nonsense").exit_code == 2);
    CHECK(run("").exit_code == 2);
}

TEST_CASE("symbolic verification passes") {
    const auto r = run("verify --symbolic --order 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all symbolic checks passed") != std::string::npos);
    CHECK(r.output.find("normal-order annihilation") != std::string::npos);
    // the grade-4 uniform comparison reports its discrepancy without failing
    CHECK(r.output.find("DISCREPANCY") != std::string::npos);
}

TEST_CASE("numeric verification passes and reports slopes") {
    const auto r = run("verify --numeric --order 4 --q 0.7 --seed 42");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("slope") != std::string::npos);
    CHECK(r.output.find("all numeric checks passed") != std::string::npos);
}

TEST_CASE("q = 1 is rejected as configuration") {
    const auto r = run("verify --numeric --q 1.0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("export round trip through the limit subcommand") {
    const std::string path = "/tmp/qzx_cli_test_doc.json";
    std::remove(path.c_str());
    const auto d = run("derive --variant escalating --order 4 --format json --output " + path);
    CHECK(d.exit_code == 0);
    {
        std::ifstream in(path);
        REQUIRE(in.good());
        std::string line;
        std::getline(in, line);
        CHECK(line == "{");
    }
    const auto l = run("limit --input " + path);
    CHECK(l.exit_code == 0);
    CHECK(l.output.find("classical") != std::string::npos);
    CHECK(l.output.find("(-1/2)*AB") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("limit without input derives first") {
    const auto r = run("limit --variant qbch --order 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(1/2)*AB") != std::string::npos);
    CHECK(r.output.find("(1/12)") != std::string::npos);
}
