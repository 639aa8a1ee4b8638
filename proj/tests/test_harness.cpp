#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "qhopf/harness.hpp"

using namespace qhopf;

namespace {

RunConfig config(int n, std::vector<int> e, std::vector<std::string> checks = {}) {
    RunConfig c;
    c.n = n;
    c.q_exponents = std::move(e);
    c.checks = std::move(checks);
    return normalize(c, 5);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(config(1, {1}), InvalidArgument);
    CHECK_THROWS_AS(config(3, {3}), InvalidArgument);
    CHECK_THROWS_AS(config(3, {9}), InvalidArgument);
    CHECK_THROWS_AS(config(2, {1}, {"pentagon", "nonsense"}), InvalidArgument);
    RunConfig big;
    big.n = 6;
    CHECK_THROWS_AS(normalize(big, 5), InvalidArgument);
    CHECK_NOTHROW(normalize(big, 6));

    const RunConfig all = config(3, {});
    CHECK(all.q_exponents == std::vector<int>{1, 2, 4, 5, 7, 8});
    CHECK(all.checks.size() == exponent_check_names().size() + family_check_names().size());
    // order follows the registry, not the request
    CHECK(config(2, {3, 1, 3}, {"pentagon", "taft_dimension"}).checks == std::vector<std::string>{"taft_dimension", "pentagon"});
    CHECK(config(2, {3, 1, 3}).q_exponents == std::vector<int>{1, 3});
}

TEST_CASE("single check") {
    const auto report = run_suite(config(2, {1}, {"pentagon"}));
    REQUIRE(report.runs.size() == 1);
    REQUIRE(report.runs[0].checks.size() == 1);
    CHECK(report.runs[0].checks[0].name == "pentagon");
    CHECK(report.all_passed());
    CHECK(report.family.empty());
    const std::string json = to_json(report);
    CHECK(json.find("\"elapsed_ms\"") == std::string::npos);
    CHECK(json.find("\"conductor\": 4") != std::string::npos);
}

TEST_CASE("full n = 2 run") {
    const auto report = run_suite(config(2, {}));
    CHECK(report.runs.size() == 2);
    CHECK(report.passed + report.failed == 2 * exponent_check_names().size() + 2);
    std::vector<std::string> failed;
    for (const auto& run : report.runs)
        for (const auto& c : run.checks)
            if (!c.passed) failed.push_back(c.name);
    for (const auto& c : report.family) CHECK(c.passed);
    // only the textbook closed form for V_q disagrees with A[1] at n = 2
    CHECK(failed == std::vector<std::string>{"vq_module", "vq_module"});
}

TEST_CASE("determinism") {
    RunConfig c = config(3, {}, {"quasi_coassoc", "antipode", "eta_xi_spectrum", "bq_semisimple", "nonisomorphism"});
    c.seed = 11;
    const std::string a = to_json(run_suite(c));
    const std::string b = to_json(run_suite(c));
    c.jobs = 3;
    const std::string parallel = to_json(run_suite(c));
    CHECK(a == b);
    CHECK(a == parallel);
    c.timing = true;
    CHECK(to_json(run_suite(c)).find("\"elapsed_ms\"") != std::string::npos);
}

#ifdef QHF_CLI
namespace {

int run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + " " + std::string(QHF_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("command line exit codes") {
    CHECK(run("--n 2 --q-exp 1 --checks pentagon") == 0);
    CHECK(run("--n 3 --q-exp 3") == 2);
    CHECK(run("--n 3 --q-exp 1 --checks bq_relations") == 1);
    CHECK(run("--n 3 --q-exp 1 --checks bq_relations_inverse_form") == 0);
    CHECK(run("--n 2 --checks nonsense") == 2);
    CHECK(run("--n 2 --q-exp x") == 2);
    CHECK(run("--bogus") == 2);
    CHECK(run("--q-exp 1") == 2);
    CHECK(run("--help") == 0);
    CHECK(run("--list") == 0);
    CHECK(run("--n 6 --q-exp 1 --checks taft_dimension") == 2);
    CHECK(run("--n 4 --q-exp 1 --checks taft_dimension") == 0);
    CHECK(run("--n 4 --q-exp 1 --checks taft_dimension", "QHF_MAX_N=3") == 2);
    CHECK(run("--n 3 --q-exp 1 --checks taft_dimension", "QHF_MAX_N=3") == 0);
    CHECK(run("--n 2 --q-exp 1 --checks taft_dimension", "QHF_MAX_N=lots") == 2);
    CHECK(run("--n 2 --q-exp 1 --dump phi") == 0);
    CHECK(run("--n 2 --dump phi") == 2);
    CHECK(run("--n 2 --q-exp 1 --dump nothing") == 2);
}

TEST_CASE("command line reports are byte-identical") {
    const std::string a = "qhf_report_a.json";
    const std::string b = "qhf_report_b.json";
    const std::string args = "--n 3 --q-exp 1,2 --checks pentagon,eta_xi_spectrum,nonisomorphism --seed 5 --out ";
    REQUIRE(run(args + a) == 0);
    REQUIRE(run(args + b) == 0);
    const std::string ra = read_file(a);
    CHECK_FALSE(ra.empty());
    CHECK(ra == read_file(b));
    std::remove(a.c_str());
    std::remove(b.c_str());
}
#endif
