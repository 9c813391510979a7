#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "isobaric/json_io.hpp"
#include "isobaric/weights.hpp"

using namespace isobaric;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_file = "") {
    std::string cmd = std::string(ISOBARIC_CLI_PATH) + " " + args + " 2>/dev/null";
    if (!stdin_file.empty()) cmd += " < " + stdin_file;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("gen renders latex and json") {
    RunResult latex = run_cli("gen --seq F --n 4 --k 4 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(latex.out == "t_1^4 + 3t_1^2t_2 + t_2^2 + 2t_1t_3 + t_4\n");

    RunResult custom = run_cli("gen --seq custom --omega 1,2 --n 2 --k 2");
    CHECK(custom.exit_code == 0);
    Polynomial p = polynomial_from_json(json::parse(custom.out));
    CHECK(p == Polynomial(2, 2,
                          {{ExponentVector({2, 0}), Rational(1)},
                           {ExponentVector({0, 1}), Rational(2)}}));

    // hook r=0 is the unit weight, byte for byte
    RunResult hook = run_cli("gen --seq hook --r 0 --n 5 --k 5");
    RunResult fib = run_cli("gen --seq F --n 5 --k 5");
    CHECK(hook.exit_code == 0);
    CHECK(hook.out == fib.out);

    // determinism
    CHECK(run_cli("gen --seq G --n 6 --k 4").out == run_cli("gen --seq G --n 6 --k 4").out);
}

TEST_CASE("gen rejects inconsistent flags") {
    CHECK(run_cli("gen --seq F --n 4 --k 4 --r 1").exit_code == 2);
    CHECK(run_cli("gen --seq hook --n 4 --k 4").exit_code == 2);
    CHECK(run_cli("gen --seq custom --n 4 --k 4").exit_code == 2);
    CHECK(run_cli("gen --seq hook --r 5 --n 4 --k 4").exit_code == 2);
    CHECK(run_cli("gen --seq Q --n 4 --k 4").exit_code == 2);
    CHECK(run_cli("gen --n 4 --k 4").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("apply reports kernel membership through the exit code") {
    CHECK(run_cli("apply --m 2 --seq F --n 6 --k 4 --check-zero").exit_code == 0);
    CHECK(run_cli("apply --m 1 --seq F --n 6 --k 4 --check-zero").exit_code == 1);
    CHECK(run_cli("apply --m 3 --seq G --n 5 --k 5 --check-zero").exit_code == 1);
    CHECK(run_cli("apply --m 1 --seq G --n 8 --k 5 --check-zero").exit_code == 0);
}

TEST_CASE("apply reads json from a file or stdin") {
    std::string path = "cli_test_input.json";
    {
        std::ofstream f(path);
        f << to_json(fibonacci_poly(5, 3)).dump();
    }
    RunResult from_file = run_cli("apply --m 2 --in " + path);
    CHECK(from_file.exit_code == 0);
    CHECK(polynomial_from_json(json::parse(from_file.out)).is_zero());

    RunResult from_stdin = run_cli("apply --m 2 --check-zero", path);
    CHECK(from_stdin.exit_code == 0);

    // custom coefficient list of the wrong length is a usage error
    CHECK(run_cli("apply --m 2 --a 1,1 --in " + path).exit_code == 2);

    {
        std::ofstream f(path);
        f << "{not json";
    }
    CHECK(run_cli("apply --m 2 --in " + path).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("strings command lists the weighted strings") {
    RunResult r = run_cli("strings --seq F --n 4 --k 4");
    CHECK(r.exit_code == 0);
    json arr = json::parse(r.out);
    REQUIRE(arr.size() == 3);
    CHECK(arr[0].at("generator") == json::array({1, 0, 1, 0}));
    CHECK(arr[1].at("generator") == json::array({0, 2, 0, 0}));
    CHECK(arr[1].at("elements").size() == 3);
    CHECK(arr[2].at("generator") == json::array({0, 0, 0, 1}));
}

TEST_CASE("lattice command emits nodes, dot and intersections") {
    RunResult inter = run_cli("lattice --monomial 0,2,1 --intersections");
    CHECK(inter.exit_code == 0);
    CHECK(json::parse(inter.out) ==
          json::array({json::array({2, 0, 1}), json::array({0, 1, 1})}));

    // a non-generator monomial resolves through its string generator
    RunResult inter2 = run_cli("lattice --monomial 2,1,1 --intersections");
    CHECK(json::parse(inter2.out) == json::parse(inter.out));

    RunResult lat = run_cli("lattice --monomial 0,2,0");
    CHECK(lat.exit_code == 0);
    json j = json::parse(lat.out);
    CHECK(j.at("root") == json::array({0, 2, 0}));
    CHECK(j.at("nodes").size() == 2);

    RunResult dot = run_cli("lattice --monomial 0,2,0 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph lattice {") == 0);

    CHECK(run_cli("lattice --monomial 0,0,0").exit_code == 2);
}

TEST_CASE("scan command reports the nontrivial grid points") {
    RunResult r = run_cli("scan --a-grid 0,1 --m-grid 1,2,3 --k 3 --N 8");
    CHECK(r.exit_code == 0);
    json arr = json::parse(r.out);
    REQUIRE(arr.size() == 2);
    CHECK(arr[0].at("spec").at("a") == json::array({"1", "1", "1"}));
    CHECK(arr[0].at("spec").at("m") == "1");
    CHECK(arr[0].at("class") == "codim1");
    CHECK(arr[1].at("spec").at("m") == "2");
    CHECK(arr[1].at("class") == "line");
}

TEST_CASE("verify command runs the named suites") {
    RunResult r = run_cli("verify --suite thm31 --n-max 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);

    CHECK(run_cli("verify --suite thm22 --n-max 6").exit_code == 0);
    CHECK(run_cli("verify --suite lattice --n-max 6").exit_code == 0);
    CHECK(run_cli("verify --suite nonsense").exit_code == 2);
}
