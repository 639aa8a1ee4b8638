#pragma once

// Batch driver: builds H(q) and A(q) for the requested exponents, runs the
// selected checks in a fixed order and renders a deterministic JSON report.

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/verifier.hpp"

namespace qhopf {

/// Checks run once per exponent e, in report order.
const std::vector<std::string>& exponent_check_names();
/// Checks run once per n over all requested exponents, in report order.
const std::vector<std::string>& family_check_names();

struct RunConfig {
    int n = 2;
    std::vector<int> q_exponents;     // empty means every e coprime to n^2
    std::vector<std::string> checks;  // empty means every check
    std::uint64_t seed = 0;
    bool timing = false;              // record elapsed_ms (breaks byte-identical output)
    unsigned jobs = 1;                // exponents built in parallel
};

/// Validates n, the exponents and the check names; fills in the defaults and
/// sorts the exponents. Throws InvalidArgument.
RunConfig normalize(RunConfig c, int max_n);

struct ExponentRun {
    int q_exponent = 0;
    std::vector<CheckResult> checks;
};

struct VerificationReport {
    RunConfig config;
    std::vector<ExponentRun> runs;        // sorted by exponent
    std::vector<CheckResult> family;      // per-n checks
    std::size_t passed = 0;
    std::size_t failed = 0;
    double elapsed_ms = 0;

    bool all_passed() const noexcept { return failed == 0; }
};

/// Runs a normalized config. Construction failures become failed checks.
VerificationReport run_suite(const RunConfig& c);

/// Stable JSON rendering; timings appear only when config.timing is set.
std::string to_json(const VerificationReport& r);

/// Names accepted by dump_structure.
const std::vector<std::string>& dump_names();

/// J, phi (Φ_J), delta_x (Δ_J(x)), alpha (α of A(q)), beta (β_J) or sx (S_J(x)),
/// one term per line in key order, coefficients in z = ζ_{n^2}.
/// Throws InvalidArgument on an unknown name or invalid (n, e).
std::string dump_structure(int n, int e, const std::string& what);

std::string version();

}  // namespace qhopf
