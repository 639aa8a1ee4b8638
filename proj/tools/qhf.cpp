// qhf: verify the quasi-Hopf algebras A(q) and dump their structure elements.
//
// Exit status: 0 when every check passes, 1 when one fails, 2 on bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhopf/errors.hpp"
#include "qhopf/harness.hpp"

namespace {

constexpr int exit_fail = 1;
constexpr int exit_invalid = 2;

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

int max_n_from_env() {
    const char* raw = std::getenv("QHF_MAX_N");
    if (!raw || !*raw) return 5;
    try {
        std::size_t used = 0;
        const int v = std::stoi(raw, &used);
        if (used != std::string(raw).size() || v < 2) throw qhopf::InvalidArgument("");
        return v;
    } catch (const std::exception&) {
        throw qhopf::InvalidArgument(std::string("QHF_MAX_N must be an integer >= 2, got '") + raw + "'");
    }
}

std::vector<int> parse_exponents(const std::string& text) {
    if (text == "all") return {};
    std::vector<int> out;
    for (const auto& item : split_csv(text)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || used == 0) throw qhopf::InvalidArgument("bad q exponent '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw qhopf::InvalidArgument("--q-exp is empty");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the basic quasi-Hopf algebras A(q)"};
    int n = 2;
    std::string q_exp = "all";
    std::string checks = "all";
    std::string out_path;
    std::uint64_t seed = 0;
    std::string dump;
    unsigned jobs = 1;
    bool timing = false;
    bool list = false;

    auto* n_opt = app.add_option("--n", n, "n >= 2; A(q) has dimension n^3");
    app.add_option("--q-exp", q_exp, "exponents e of q = zeta_{n^2}^e, comma separated, or 'all'");
    app.add_option("--checks", checks, "check names, comma separated, or 'all' (see --list)");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--seed", seed, "seed for sampled checks");
    app.add_option("--dump", dump, "print J, phi, delta_x, alpha, beta or sx for the single exponent in --q-exp");
    app.add_option("--jobs", jobs, "exponents verified in parallel")->check(CLI::Range(1u, 256u));
    app.add_flag("--timing", timing, "include elapsed_ms (the report is then not reproducible)");
    app.add_flag("--list", list, "print the check names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_invalid;
    }

    if (list) {
        for (const auto& name : qhopf::exponent_check_names()) std::cout << name << "\n";
        for (const auto& name : qhopf::family_check_names()) std::cout << name << "\n";
        return 0;
    }

    try {
        if (n_opt->count() == 0) throw qhopf::InvalidArgument("--n is required");
        const int max_n = max_n_from_env();
        qhopf::RunConfig config;
        config.n = n;
        config.q_exponents = parse_exponents(q_exp);
        if (checks != "all") {
            config.checks = split_csv(checks);
            if (config.checks.empty()) throw qhopf::InvalidArgument("--checks is empty");
        }
        config.seed = seed;
        config.timing = timing;
        config.jobs = jobs;
        config = qhopf::normalize(config, max_n);

        std::string text;
        bool ok = true;
        if (!dump.empty()) {
            if (config.q_exponents.size() != 1) throw qhopf::InvalidArgument("--dump needs exactly one exponent in --q-exp");
            text = qhopf::dump_structure(config.n, config.q_exponents.front(), dump);
        } else {
            const auto report = qhopf::run_suite(config);
            text = qhopf::to_json(report);
            ok = report.all_passed();
        }

        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw qhopf::InvalidArgument("cannot write " + out_path);
            out << text;
        }
        return ok ? 0 : exit_fail;
    } catch (const qhopf::InvalidArgument& e) {
        std::cerr << "qhf: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "qhf: " << e.what() << "\n";
        return exit_fail;
    }
}
