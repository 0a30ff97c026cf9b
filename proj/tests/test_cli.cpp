#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "classnum/corpus.hpp"

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = {}) {
    std::string cmd = env_prefix + g_cli_path + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("classify: n = 59 row") {
    auto r = run("classify --degree 58 --class-factors 3,59,233 --quad-disc -59 "
                 "--quad-h 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("prime 3") != std::string::npos);
    CHECK(r.out.find("confirmed") != std::string::npos);
    CHECK(r.out.find("prime 59") != std::string::npos);
    CHECK(r.out.find("29") != std::string::npos);

    auto m = run("classify --degree 58 --class-factors 3,2.29+1,2^3.29+1 "
                 "--quad-disc -59 --quad-h 3 --machine");
    CHECK(m.exit_code == 0);
    auto j = nlohmann::json::parse(m.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["prime"] == "3");
    CHECK(j[0]["quadratic"] == "confirmed");
    CHECK(j[1]["prime"] == "59");
    CHECK(j[1]["witnesses"][0] == "29");
}

TEST_CASE("classify: contradiction exits 1") {
    // g = 5, h = 2^4: no admissible case
    auto r = run("classify --degree 5 --class-factors 2^4");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("inferred_noncyclic") != std::string::npos);
}

TEST_CASE("classify: gamma violation is an input error") {
    auto r = run("classify --degree 12 --class-factors 5");
    CHECK(r.exit_code == 2);
}

TEST_CASE("feasible") {
    auto r = run("feasible --g 3 --hi 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2 4") != std::string::npos);

    auto empty = run("feasible --g 5 --hi 7");
    CHECK(empty.exit_code == 1);

    auto m = run("feasible --g 3 --hi 7 --machine");
    auto j = nlohmann::json::parse(m.out);
    REQUIRE(j["feasible"].size() == 2);
    CHECK(j["feasible"][0]["alpha"] == 2);
    CHECK(j["feasible"][0]["case"] == "vandiver_odd");
}

TEST_CASE("cyclo") {
    auto r = run("cyclo --p 5 --a 2 --b 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n = p*t1 = 55") != std::string::npos);
    CHECK(r.out.find("5 | h(55)") != std::string::npos);

    auto m = run("cyclo --p 5 --a 2 --b 1 --machine");
    auto j = nlohmann::json::parse(m.out);
    CHECK(j["t1"] == "11");
    CHECK(j["n"] == "55");
    CHECK(j["phi_n"] == "40");

    auto bad = run("cyclo --p 5 --a 2 --b 3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify-corpus") {
    auto r = run("verify-corpus");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0 disagreements") != std::string::npos);

    auto m = run("verify-corpus --machine");
    CHECK(m.exit_code == 0);
    auto parsed = classnum::corpus::parse_report_machine(m.out);
    CHECK(parsed.disagreements == 0);
    CHECK(parsed.entries >= 75);

    auto missing = run("verify-corpus /nonexistent/corpus.txt");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("bounds") {
    auto r = run("bounds --degree 2 --r2 0 --disc 1000000 --machine");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["applicable"] == true);
    double b = j["minkowski_bound"].get<double>();
    CHECK(b >= 500.0);
    CHECK(b < 500.0000001);
}

TEST_CASE("factor") {
    auto r = run("factor 41241");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3 * 59 * 233") != std::string::npos);

    auto m = run("factor 41241 --machine");
    auto j = nlohmann::json::parse(m.out);
    REQUIRE(j["factors"].size() == 3);
    CHECK(j["factors"][2]["prime"] == "233");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("classify").exit_code == 2);
    CHECK(run("no-such-subcommand").exit_code == 2);
    CHECK(run("feasible --g 3").exit_code == 2);
}

TEST_CASE("factorization budget exhaustion exits 3") {
    auto r = run("factor "
                 "1246203667817187840658350446081065904348203746516788057548187888832"
                 "89666801188210855036039570272508747509864768438458621054865537970253"
                 "930571891217684318286362846948405301614416430468066875699415246993185"
                 "704183030512549594371372159029236099",
                 "CLASSNUM_FACTOR_BUDGET_MS=50 ");
    CHECK(r.exit_code == 3);
}

TEST_CASE("determinism: identical argv, identical bytes") {
    auto a = run("verify-corpus --machine");
    auto b = run("verify-corpus --machine");
    CHECK(a.out == b.out);
}

int main(int argc, char** argv) {
    // argv[1] is the path to the classnum binary (supplied by CTest).
    if (argc > 1) g_cli_path = argv[1];
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-classnum>\n");
        return 1;
    }
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
