// Acceptance run: one PASS/FAIL line per criterion for n = 2..5.
//
//   acceptance [--max-n N] [--expect-fail 8,9]
//
// Exit status is 0 when the set of failing criteria equals the --expect-fail
// set, 1 otherwise.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corruptions.hpp"
#include "qhopf/bq_rep.hpp"
#include "qhopf/harness.hpp"

using namespace qhopf;

namespace {

struct NRun {
    int n;
    VerificationReport report;
    double wall_ms;
};

struct Verdict {
    bool passed;
    std::string detail;
};

// Every listed check passes for every (n, e).
Verdict all_pass(const std::vector<NRun>& runs, const std::vector<std::string>& names, const std::string& summary) {
    for (const auto& r : runs)
        for (const auto& run : r.report.runs)
            for (const auto& c : run.checks)
                if (!c.passed && std::find(names.begin(), names.end(), c.name) != names.end())
                    return {false, "n=" + std::to_string(r.n) + " e=" + std::to_string(run.q_exponent) + " " + c.name +
                                       ": " + c.witness};
    return {true, summary};
}

std::set<int> failing_n(const std::vector<NRun>& runs, const std::string& name) {
    std::set<int> out;
    for (const auto& r : runs)
        for (const auto& run : r.report.runs)
            for (const auto& c : run.checks)
                if (c.name == name && !c.passed) out.insert(r.n);
    return out;
}

std::string join(const std::set<int>& s) {
    std::string out;
    for (int v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
}

const CheckResult* find_check(const ExponentRun& run, const std::string& name) {
    for (const auto& c : run.checks)
        if (c.name == name) return &c;
    return nullptr;
}

Verdict taft_sanity(const std::vector<NRun>& runs) {
    Verdict v = all_pass(runs, {"taft_dimension", "taft_coassoc", "taft_counit", "taft_antipode"}, "");
    if (!v.passed) return v;
    std::ostringstream detail;
    detail << "dim H = n^4, Hopf axioms exact; slowest (n,e) Taft suite:";
    for (const auto& r : runs) {
        double worst = 0;
        for (const auto& run : r.report.runs) {
            double t = 0;
            for (const char* name : {"taft_dimension", "taft_coassoc", "taft_counit", "taft_antipode"})
                if (const auto* c = find_check(run, name)) t += c->elapsed_ms;
            worst = std::max(worst, t);
        }
        const double limit = r.n <= 3 ? 5000 : 120000;
        if (worst > limit) return {false, "n=" + std::to_string(r.n) + " Taft suite took " + std::to_string(worst) + " ms"};
        detail << " n=" << r.n << " " << static_cast<long>(worst) << " ms";
    }
    return {true, detail.str()};
}

Verdict alpha_criterion(const std::vector<NRun>& runs) {
    Verdict v = all_pass(runs, {"antipode_J_x", "alpha_beta_J", "antipode"}, "");
    if (!v.passed) return v;
    std::string detail = "S_J(x) closed form holds, antipode axioms pass with the computed alpha;";
    for (const auto& r : runs) {
        const auto* c = find_check(r.report.runs.front(), "alpha_beta_J");
        detail += " n=" + std::to_string(r.n) + ": " + (c ? c->note : "?") + ";";
    }
    detail.pop_back();
    return {true, detail};
}

Verdict operator_suite(const std::vector<NRun>& runs) {
    Verdict others = all_pass(runs, {"xi_eta_invariance", "xi_eta_commutation", "bq_relations_inverse_form", "eta_xi_spectrum"}, "");
    if (!others.passed) return others;
    const std::set<int> bad = failing_n(runs, "bq_relations");
    std::size_t failures = 0, total = 0;
    for (const auto& r : runs)
        for (const auto& run : r.report.runs)
            if (const auto* c = find_check(run, "bq_relations")) {
                ++total;
                if (!c->passed) ++failures;
            }
    if (bad.empty())
        return {true, "xi^n = Q^-1, eta^n = Q, xi a = Q a xi, eta a = Q a eta, xi eta = E_0^-1 E_-1 eta xi; spectrum {q x(n-1), Qq}"};
    return {false, "xi eta = E_0^-1 E_-1 eta xi fails for n=" + join(bad) + " (" + std::to_string(failures) + " of " +
                       std::to_string(total) + " (n,e)); xi eta = E_0 E_-1^-1 eta xi holds for all n; xi^n = Q^-1, eta^n = Q, "
                       "xi a = Q a xi, eta a = Q a eta and the spectrum {q x(n-1), Qq} hold"};
}

Verdict semisimplicity(const std::vector<NRun>& runs) {
    for (const auto& r : runs)
        for (const auto& c : r.report.family)
            if (c.name == "bq_semisimple" && !c.passed) return {false, "n=" + std::to_string(r.n) + ": " + c.witness};
    Verdict same = all_pass(runs, {"vq_module_shifted"}, "");
    if (!same.passed) return same;

    // The criterion asks for pairwise distinct ηξ^{-1} spectra as multisets.
    std::set<int> coincide;
    for (const auto& r : runs) {
        const int n = r.n;
        for (int cls = 1; cls < n; ++cls) {
            if (std::gcd(cls, n) != 1) continue;
            std::vector<std::vector<CycNumber>> spectra;
            for (int t = 0; t < n; ++t) spectra.push_back(spectrum_eta_xi_inv(vq_module(n, cls + n * t, 1)));
            for (std::size_t i = 0; i < spectra.size(); ++i)
                for (std::size_t j = i + 1; j < spectra.size(); ++j)
                    if (spectra[i] == spectra[j]) coincide.insert(n);
        }
    }
    const std::string base = "rank n^3 and 1-dimensional commutants for every n and Q";
    if (coincide.empty()) return {true, base + "; eta xi^-1 spectra pairwise distinct"};
    return {false, base + ", but the eta xi^-1 spectra coincide as multisets for n=" + join(coincide) +
                       " ({q, -q} for both q); the joint (a, eta xi^-1) spectra differ"};
}

Verdict nonisomorphism(const std::vector<NRun>& runs) {
    std::string detail;
    for (const auto& r : runs)
        for (const auto& c : r.report.family)
            if (c.name == "nonisomorphism") {
                if (!c.passed) return {false, "n=" + std::to_string(r.n) + ": " + c.witness};
                detail += (detail.empty() ? "" : "; ") + ("n=" + std::to_string(r.n) + " " + c.note);
            }
    return {true, detail};
}

Verdict negative_controls() {
    std::set<std::string> caught;
    std::size_t cases = 0;
    for (int n = 2; n <= 3; ++n) {
        const TwistData d = TwistData::create(n, 1);
        const QuasiHopfStructure A = build_Aq(d);
        for (const auto& bad : testing::corruptions(d.sub, A)) {
            ++cases;
            for (const auto& r : {check_quasi_coassoc(bad.structure), check_pentagon(bad.structure),
                                  check_counit(bad.structure), check_antipode(bad.structure)}) {
                if (r.passed) continue;
                if (r.witness.empty()) return {false, r.name + " failed without a witness on " + bad.what};
                caught.insert(r.name);
            }
        }
        const auto omega_check = check_3cocycle(testing::corrupted_omega(n, d.taft.q()));
        if (omega_check.passed || omega_check.witness.empty()) return {false, "corrupted omega passes the cocycle check"};
        caught.insert("3cocycle");
    }
    const std::set<std::string> wanted = {"quasi_coassoc", "pentagon", "counit", "antipode", "3cocycle"};
    if (caught != wanted) return {false, "not every axiom check was tripped"};
    return {true, std::to_string(cases) + " corrupted structures plus corrupted omega; each axiom check fails with a witness"};
}

Verdict determinism() {
    RunConfig c;
    c.n = 3;
    c.seed = 1;
    c = normalize(c, 5);
    const std::string a = to_json(run_suite(c));
    const std::string b = to_json(run_suite(c));
    c.jobs = 4;
    const std::string p = to_json(run_suite(c));
    if (a != b) return {false, "two sequential runs differ"};
    if (a != p) return {false, "parallel run differs from sequential run"};
    return {true, "n=3 full report identical across 3 runs (" + std::to_string(a.size()) + " bytes, sequential and 4 jobs)"};
}

std::set<int> parse_set(const std::string& text) {
    std::set<int> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.insert(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    int max_n = 5;
    std::set<int> expected_failures;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--max-n") max_n = std::stoi(argv[i + 1]);
        else if (flag == "--expect-fail") expected_failures = parse_set(argv[i + 1]);
        else {
            std::cerr << "unknown flag " << flag << "\n";
            return 2;
        }
    }

    std::vector<NRun> runs;
    for (int n = 2; n <= max_n; ++n) {
        RunConfig c;
        c.n = n;
        c = normalize(c, max_n);
        const auto start = std::chrono::steady_clock::now();
        VerificationReport report = run_suite(c);
        const double wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        runs.push_back({n, std::move(report), wall});
    }

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"Taft sanity", [&] { return taft_sanity(runs); }},
        {"J invertible and counital", [&] { return all_pass(runs, {"twist_J"}, "J J^-1 = 1⊗1, (eps⊗id)J = (id⊗eps)J = 1"); }},
        {"Phi_J = Phi_-1", [&] { return all_pass(runs, {"associator_phi_J"}, "term for term, supported on e_i⊗e_j⊗e_k"); }},
        {"Delta_J(x) and closure", [&] {
             return all_pass(runs, {"delta_J_x", "delta_J_closure"}, "closed form exact; Delta_J(A) in A⊗A on every basis element");
         }},
        {"S_J(x), alpha_J beta_J", [&] { return alpha_criterion(runs); }},
        {"A(q) is basic quasi-Hopf", [&] {
             return all_pass(runs, {"quasi_coassoc", "pentagon", "counit", "antipode", "basic", "grading", "radical_ideal", "aq_dimension"},
                             "axioms exact; n characters, cyclic of order n; dim A = n^3");
         }},
        {"cocycle suite", [&] {
             return all_pass(runs, {"cocycle_omega", "cocycle_associator", "cocycle_coboundary_invariance"},
                             "n^4 quadruples; class Q^l != 1 for 1 <= l < n; invariant stable under 50 coboundaries");
         }},
        {"operator suite on A[1]", [&] { return operator_suite(runs); }},
        {"B(Q) semisimple", [&] { return semisimplicity(runs); }},
        {"non-isomorphism", [&] { return nonisomorphism(runs); }},
        {"negative controls", negative_controls},
        {"determinism", determinism},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v{false, ""};
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        const int id = static_cast<int>(i + 1);
        if (!v.passed) failed.insert(id);
        std::cout << "criterion " << id << " " << (v.passed ? "PASS" : "FAIL") << " [" << criteria[i].first << "] "
                  << v.detail << std::endl;
    }
    std::cout << "failing: {" << join(failed) << "}, expected: {" << join(expected_failures) << "}" << std::endl;
    return failed == expected_failures ? 0 : 1;
}
