#include "qhopf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qhopf/bq_rep.hpp"
#include "qhopf/cocycle.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/twist.hpp"

namespace qhopf {

namespace {

constexpr int coboundary_trials = 50;

std::string pow_label(long k) { return k == 0 ? "1" : k == 1 ? "z" : "z^" + std::to_string(k); }

// Everything one exponent needs, built on first use.
class Job {
public:
    Job(int n, int e, std::uint64_t seed) : n_(n), e_(e), seed_(seed) {}

    int n() const { return n_; }
    int e() const { return e_; }
    std::uint64_t seed() const { return seed_; }

    const TaftAlgebra& taft() {
        if (!taft_) taft_ = TaftAlgebra::create(n_, e_);
        return *taft_;
    }
    const QuasiHopfStructure& taft_structure() {
        if (!H_) H_ = taft_hopf_structure(taft());
        return *H_;
    }
    const TwistData& data() {
        if (!data_) data_ = std::make_unique<TwistData>(TwistData::create(n_, e_));
        return *data_;
    }
    const SubalgebraA& sub() { return data().sub; }
    const QuasiHopfStructure& A() {
        if (!A_) A_ = build_Aq(data());
        return *A_;
    }
    const DegreeOneModule& module() {
        if (!D_) D_ = degree_one_module(sub(), A());
        return *D_;
    }
    const NonisomorphismInvariant& invariant() {
        if (!inv_) inv_ = nonisomorphism_invariant(sub(), A());
        return *inv_;
    }
    bool has_invariant() const { return inv_.has_value(); }

private:
    int n_;
    int e_;
    std::uint64_t seed_;
    std::optional<TaftAlgebra> taft_;
    std::optional<QuasiHopfStructure> H_;
    std::unique_ptr<TwistData> data_;
    std::optional<QuasiHopfStructure> A_;
    std::optional<DegreeOneModule> D_;
    std::optional<NonisomorphismInvariant> inv_;
};

CheckResult expect_equal(const std::string& name, const std::string& what, const TensorElement& computed,
                         const TensorElement& expected, std::string note = {}) {
    if (auto diff = first_difference(computed, expected)) return CheckResult::fail(name, what + ": " + *diff, note);
    return CheckResult::pass(name, std::move(note));
}

CheckResult renamed(CheckResult r, const std::string& name) {
    r.name = name;
    return r;
}

CheckResult check_taft_dimension(Job& j) {
    const auto& T = j.taft();
    const int expected = j.n() * j.n() * j.n() * j.n();
    const int mono = T.monomial_basis()->dimension();
    const int idem = T.idempotent_basis()->dimension();
    if (mono != expected || idem != expected)
        return CheckResult::fail("taft_dimension", "bases of dimension " + std::to_string(mono) + " and " +
                                                       std::to_string(idem) + ", expected " + std::to_string(expected));
    return CheckResult::pass("taft_dimension", "dim H = " + std::to_string(expected));
}

CheckResult check_twist_J(Job& j) {
    const std::string name = "twist_J";
    const auto& d = j.data();
    const auto& H = d.taft.idempotent_basis();
    const TensorElement one2 = TensorElement::unit(H, 2);
    const TensorElement one1 = TensorElement::unit(H, 1);
    if (auto diff = first_difference(mul(d.J, d.J_inv), one2)) return CheckResult::fail(name, "J J^-1: " + *diff);
    if (auto diff = first_difference(mul(d.J_inv, d.J), one2)) return CheckResult::fail(name, "J^-1 J: " + *diff);
    const BasisMap eps = d.taft.epsilon_map(H);
    if (auto diff = first_difference(apply_on_factor(eps, 1, d.J), one1))
        return CheckResult::fail(name, "(eps⊗id)(J): " + *diff);
    if (auto diff = first_difference(apply_on_factor(eps, 2, d.J), one1))
        return CheckResult::fail(name, "(id⊗eps)(J): " + *diff);
    return CheckResult::pass(name, std::to_string(d.J.size()) + " terms");
}

CheckResult check_associator(Job& j) {
    const std::string name = "associator_phi_J";
    const auto& d = j.data();
    if (!d.sub.contains(d.phi_J)) return CheckResult::fail(name, "Phi_J has terms outside A⊗A⊗A");
    return expect_equal(name, "Phi_J vs Phi_-1", d.sub.restrict(d.phi_J), phi_l(d.sub, -1),
                        std::to_string(d.phi_J.size()) + " terms");
}

CheckResult check_delta_x(Job& j) {
    return expect_equal("delta_J_x", "Delta_J(x) vs closed form", j.A().delta(j.sub().x()),
                        delta_x_closed_form(j.sub()));
}

CheckResult check_closure(Job& j) {
    // build_Aq restricts every J Δ(b) J^-1 to A⊗A and throws on a stray term.
    const auto& A = j.A();
    return CheckResult::pass("delta_J_closure",
                             "Delta_J(b) in A⊗A for all " + std::to_string(A.coproduct.size()) + " basis elements");
}

CheckResult check_s_x(Job& j) {
    return expect_equal("antipode_J_x", "S_J(x) vs closed form", j.A().S(j.sub().x()), s_x_closed_form(j.sub()));
}

CheckResult check_alpha(Job& j) {
    const std::string name = "alpha_beta_J";
    const auto& d = j.data();
    if (auto diff = first_difference(d.beta_J, beta_J_closed_form(d.taft)))
        return CheckResult::fail(name, "beta_J vs closed form: " + *diff);
    if (auto diff = first_difference(d.alpha_J, alpha_J_closed_form(d.taft)))
        return CheckResult::fail(name, "alpha_J vs closed form: " + *diff);
    if (auto diff = first_difference(mul(d.alpha_J, d.beta_J), alpha_beta_product_closed_form(d.taft)))
        return CheckResult::fail(name, "alpha_J beta_J vs sum_z q^(nz) 1_z: " + *diff);
    const std::string id = identify_alpha(d.sub, j.A().alpha);
    if (id == "neither") return CheckResult::fail(name, "alpha is neither a nor a^-1");
    return CheckResult::pass(name, "alpha = " + id);
}

CheckResult check_aq_dimension(Job& j) {
    const int dim = j.A().carrier->dimension();
    const int expected = j.n() * j.n() * j.n();
    if (dim != expected)
        return CheckResult::fail("aq_dimension", "dim A = " + std::to_string(dim) + ", expected " + std::to_string(expected));
    return CheckResult::pass("aq_dimension", "dim A = " + std::to_string(dim));
}

CheckResult check_omega(Job& j) {
    const std::string name = "cocycle_omega";
    const auto& T = j.taft();
    for (int l = 0; l < j.n(); ++l) {
        const ThreeCochain w = omega(j.n(), T.q(), l);
        auto r = check_3cocycle(w);
        if (!r.passed) return CheckResult::fail(name, "omega_" + std::to_string(l) + ": " + r.witness);
        const CycNumber inv = class_invariant(w);
        if (!(inv == T.Q().pow(l)))
            return CheckResult::fail(name, "class of omega_" + std::to_string(l) + " is " + inv.to_string() +
                                               ", expected Q^" + std::to_string(l));
        if (l > 0 && inv.is_one()) return CheckResult::fail(name, "omega_" + std::to_string(l) + " has trivial class");
    }
    return CheckResult::pass(name, "omega_l cocycles with class Q^l for 0 <= l < " + std::to_string(j.n()));
}

CheckResult check_associator_class(Job& j) {
    const std::string name = "cocycle_associator";
    const ThreeCochain c = cochain_from_associator(j.sub(), j.A().associator);
    const auto& T = j.taft();
    if (!(c == omega(j.n(), T.q(), -1))) return CheckResult::fail(name, "associator cochain differs from omega_-1");
    const CycNumber inv = class_invariant(c);
    if (!(inv == T.Q().inverse())) return CheckResult::fail(name, "class " + inv.to_string() + ", expected Q^-1");
    return CheckResult::pass(name, "class " + inv.to_string());
}

CheckResult check_coboundary_invariance(Job& j) {
    const std::string name = "cocycle_coboundary_invariance";
    const auto& T = j.taft();
    const ThreeCochain w = omega(j.n(), T.q(), 1);
    const CycNumber expected = class_invariant(w);
    for (int t = 0; t < coboundary_trials; ++t) {
        const std::uint64_t s = j.seed() + static_cast<std::uint64_t>(t);
        const ThreeCochain db = random_coboundary(j.n(), s);
        if (!check_3cocycle(db).passed) return CheckResult::fail(name, "coboundary for seed " + std::to_string(s) + " is not a cocycle");
        const CycNumber inv = class_invariant(w * db);
        if (!(inv == expected)) return CheckResult::fail(name, "seed " + std::to_string(s) + " moves the class to " + inv.to_string());
    }
    return CheckResult::pass(name, std::to_string(coboundary_trials) + " random coboundaries");
}

CheckResult check_xi_eta_invariance(Job& j) {
    const std::string name = "xi_eta_invariance";
    try {
        for (int l = 1; l <= j.n(); ++l) (void)xi_eta_operators(j.sub(), j.A(), l);
    } catch (const ClosureError& err) {
        return CheckResult::fail(name, err.witness());
    }
    return CheckResult::pass(name, "A[1] invariant under xi_l, eta_l for 1 <= l <= n");
}

CheckResult check_spectrum(Job& j) {
    const std::string name = "eta_xi_spectrum";
    const auto& D = j.module();
    const auto spectrum = spectrum_eta_xi_inv(D);
    std::vector<CycNumber> expected(static_cast<std::size_t>(j.n() - 1), D.q);
    expected.push_back(D.Q * D.q);
    std::sort(expected.begin(), expected.end(), [](const CycNumber& a, const CycNumber& b) { return compare(a, b) < 0; });
    auto render = [](const std::vector<CycNumber>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
        return s + "}";
    };
    if (spectrum != expected) return CheckResult::fail(name, "spectrum " + render(spectrum) + ", expected " + render(expected));
    return CheckResult::pass(name, render(spectrum));
}

CheckResult module_agreement(const std::string& name, Job& j, int defect) {
    const DegreeOneModule computed = rescaled(j.module());
    const DegreeOneModule closed = rescaled(vq_module(j.n(), j.e(), defect));
    const auto d = diagonal_equivalence(computed, closed);
    if (!d) return CheckResult::fail(name, "no diagonal change of basis maps A[1] to the closed form");
    std::string note = "diag(";
    for (std::size_t i = 0; i < d->size(); ++i) note += (i ? ", " : "") + (*d)[i].to_string();
    return CheckResult::pass(name, note + ")");
}

CheckResult check_rescaling(Job& j) {
    const std::string name = "bq_rescaling";
    const auto& D = j.module();
    const auto [cx, ce] = rescaling_factors(D);
    const DegreeOneModule R = rescaled(D);
    const Matrix I = Matrix::identity(static_cast<std::size_t>(j.n()));
    if (!(R.xi.pow(static_cast<unsigned>(j.n())) == I)) return CheckResult::fail(name, "(c xi)^n != 1");
    if (!(R.eta.pow(static_cast<unsigned>(j.n())) == I)) return CheckResult::fail(name, "(c eta)^n != 1");
    return CheckResult::pass(name, "xi scaled by " + cx.to_string() + ", eta by " + ce.to_string());
}

using ExponentCheck = std::function<CheckResult(Job&)>;

const std::vector<std::pair<std::string, ExponentCheck>>& exponent_registry() {
    static const std::vector<std::pair<std::string, ExponentCheck>> registry = {
        {"taft_dimension", check_taft_dimension},
        {"taft_coassoc", [](Job& j) { return check_quasi_coassoc(j.taft_structure(), j.seed()); }},
        {"taft_counit", [](Job& j) { return check_counit(j.taft_structure(), j.seed()); }},
        {"taft_antipode", [](Job& j) { return check_antipode(j.taft_structure(), j.seed()); }},
        {"twist_J", check_twist_J},
        {"associator_phi_J", check_associator},
        {"delta_J_x", check_delta_x},
        {"delta_J_closure", check_closure},
        {"antipode_J_x", check_s_x},
        {"alpha_beta_J", check_alpha},
        {"aq_dimension", check_aq_dimension},
        {"quasi_coassoc", [](Job& j) { return check_quasi_coassoc(j.A(), j.seed()); }},
        {"pentagon", [](Job& j) { return check_pentagon(j.A()); }},
        {"counit", [](Job& j) { return check_counit(j.A(), j.seed()); }},
        {"antipode", [](Job& j) { return check_antipode(j.A(), j.seed()); }},
        {"basic", [](Job& j) { return check_basic(j.A()); }},
        {"grading", [](Job& j) { return check_grading(j.A()); }},
        {"radical_ideal", [](Job& j) { return check_radical_is_quasihopf_ideal(j.A()); }},
        {"cocycle_omega", check_omega},
        {"cocycle_associator", check_associator_class},
        {"cocycle_coboundary_invariance", check_coboundary_invariance},
        {"xi_eta_invariance", check_xi_eta_invariance},
        {"xi_eta_commutation", [](Job& j) { return check_xi_eta_commutation(j.sub(), j.A()); }},
        {"bq_relations", [](Job& j) { return check_bq_relations(j.module()); }},
        {"bq_relations_inverse_form", [](Job& j) { return check_bq_relations_inverse_form(j.module()); }},
        {"eta_xi_spectrum", check_spectrum},
        {"bq_rescaling", check_rescaling},
        {"vq_module", [](Job& j) { return module_agreement("vq_module", j, 0); }},
        {"vq_module_shifted", [](Job& j) { return module_agreement("vq_module_shifted", j, 1); }},
    };
    return registry;
}

CheckResult timed(const std::string& name, const std::function<CheckResult()>& f) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = renamed(f(), name);
    } catch (const ClosureError& err) {
        r = CheckResult::fail(name, "construction failed: " + err.witness());
    } catch (const Error& err) {
        r = CheckResult::fail(name, std::string("construction failed: ") + err.what());
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

bool selected(const RunConfig& c, const std::string& name) {
    return std::find(c.checks.begin(), c.checks.end(), name) != c.checks.end();
}

std::vector<CheckResult> semisimplicity(const RunConfig& c) {
    const int n = c.n;
    std::vector<int> classes;
    for (int e : c.q_exponents)
        if (std::find(classes.begin(), classes.end(), e % n) == classes.end()) classes.push_back(e % n);
    std::sort(classes.begin(), classes.end());
    std::vector<CheckResult> out;
    for (int r : classes) {
        out.push_back(timed("bq_semisimple", [&] {
            std::vector<DegreeOneModule> modules;
            for (int t = 0; t < n; ++t) modules.push_back(vq_module(n, r + n * t, 1));
            CheckResult res = check_bq_semisimple(modules);
            const std::string prefix = "Q = " + pow_label(static_cast<long>(n) * r);
            res.note = res.note.empty() ? prefix : prefix + ": " + res.note;
            return res;
        }));
    }
    return out;
}

CheckResult nonisomorphism(std::vector<std::unique_ptr<Job>>& jobs) {
    return timed("nonisomorphism", [&] {
        for (std::size_t a = 0; a < jobs.size(); ++a)
            for (std::size_t b = a + 1; b < jobs.size(); ++b)
                if (jobs[a]->invariant() == jobs[b]->invariant())
                    return CheckResult::fail("nonisomorphism", "e = " + std::to_string(jobs[a]->e()) + " and e = " +
                                                                   std::to_string(jobs[b]->e()) + " share " +
                                                                   jobs[a]->invariant().to_string());
        return CheckResult::pass("nonisomorphism", std::to_string(jobs.size()) + " exponents pairwise distinguished");
    });
}

void run_exponent(const RunConfig& c, Job& job, ExponentRun& out) {
    out.q_exponent = job.e();
    for (const auto& [name, f] : exponent_registry()) {
        if (!selected(c, name)) continue;
        out.checks.push_back(timed(name, [&] { return f(job); }));
    }
}

}  // namespace

const std::vector<std::string>& exponent_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& entry : exponent_registry()) v.push_back(entry.first);
        return v;
    }();
    return names;
}

const std::vector<std::string>& family_check_names() {
    static const std::vector<std::string> names = {"bq_semisimple", "nonisomorphism"};
    return names;
}

RunConfig normalize(RunConfig c, int max_n) {
    if (c.n < 2) throw InvalidArgument("n must be at least 2, got " + std::to_string(c.n));
    if (c.n > max_n)
        throw InvalidArgument("n = " + std::to_string(c.n) + " exceeds the cap " + std::to_string(max_n) +
                              " (raise QHF_MAX_N to allow it)");
    const int N = c.n * c.n;
    if (c.q_exponents.empty())
        for (int e = 1; e < N; ++e)
            if (std::gcd(e, N) == 1) c.q_exponents.push_back(e);
    for (int e : c.q_exponents) {
        if (e < 1 || e >= N) throw InvalidArgument("q exponent " + std::to_string(e) + " outside [1, " + std::to_string(N) + ")");
        if (std::gcd(e, N) != 1)
            throw InvalidArgument("q exponent " + std::to_string(e) + " is not coprime to n^2 = " + std::to_string(N));
    }
    std::sort(c.q_exponents.begin(), c.q_exponents.end());
    c.q_exponents.erase(std::unique(c.q_exponents.begin(), c.q_exponents.end()), c.q_exponents.end());

    std::vector<std::string> known = exponent_check_names();
    known.insert(known.end(), family_check_names().begin(), family_check_names().end());
    if (c.checks.empty()) c.checks = known;
    for (const auto& name : c.checks)
        if (std::find(known.begin(), known.end(), name) == known.end()) throw InvalidArgument("unknown check '" + name + "'");
    std::vector<std::string> ordered;
    for (const auto& name : known)
        if (selected(c, name)) ordered.push_back(name);
    c.checks = std::move(ordered);
    c.jobs = std::max(1u, c.jobs);
    return c;
}

VerificationReport run_suite(const RunConfig& c) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.config = c;

    std::vector<std::unique_ptr<Job>> jobs;
    for (int e : c.q_exponents) jobs.push_back(std::make_unique<Job>(c.n, e, c.seed));
    report.runs.resize(jobs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) run_exponent(c, *jobs[i], report.runs[i]);
    };
    const unsigned threads = std::min<unsigned>(c.jobs, static_cast<unsigned>(jobs.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (selected(c, "bq_semisimple")) {
        auto r = semisimplicity(c);
        report.family.insert(report.family.end(), r.begin(), r.end());
    }
    if (selected(c, "nonisomorphism")) report.family.push_back(nonisomorphism(jobs));

    auto tally = [&](const CheckResult& r) { (r.passed ? report.passed : report.failed) += 1; };
    for (const auto& run : report.runs) std::for_each(run.checks.begin(), run.checks.end(), tally);
    std::for_each(report.family.begin(), report.family.end(), tally);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

nlohmann::ordered_json check_json(const CheckResult& r, bool timing) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["status"] = r.passed ? "pass" : "fail";
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    if (timing) j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms);
    return j;
}

}  // namespace

std::string to_json(const VerificationReport& r) {
    const bool timing = r.config.timing;
    nlohmann::ordered_json j;
    j["tool"] = "qhf";
    j["version"] = version();
    j["config"] = {{"n", r.config.n}, {"q_exponents", r.config.q_exponents}, {"checks", r.config.checks},
                   {"seed", r.config.seed}};
    j["field"] = {{"conductor", r.config.n * r.config.n}, {"symbol", "z"}};
    auto runs = nlohmann::ordered_json::array();
    for (const auto& run : r.runs) {
        nlohmann::ordered_json entry;
        entry["n"] = r.config.n;
        entry["q_exponent"] = run.q_exponent;
        entry["q"] = pow_label(run.q_exponent);
        auto checks = nlohmann::ordered_json::array();
        for (const auto& c : run.checks) checks.push_back(check_json(c, timing));
        entry["checks"] = std::move(checks);
        runs.push_back(std::move(entry));
    }
    j["runs"] = std::move(runs);
    auto family = nlohmann::ordered_json::array();
    for (const auto& c : r.family) family.push_back(check_json(c, timing));
    j["family"] = std::move(family);
    j["summary"] = {{"checks", r.passed + r.failed}, {"passed", r.passed}, {"failed", r.failed},
                    {"status", r.all_passed() ? "pass" : "fail"}};
    if (timing) j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms);
    return j.dump(2) + "\n";
}

const std::vector<std::string>& dump_names() {
    static const std::vector<std::string> names = {"J", "phi", "delta_x", "alpha", "beta", "sx"};
    return names;
}

std::string dump_structure(int n, int e, const std::string& what) {
    const auto& names = dump_names();
    if (std::find(names.begin(), names.end(), what) == names.end()) throw InvalidArgument("unknown dump target '" + what + "'");
    const TwistData d = TwistData::create(n, e);
    const int N = n * n;

    TensorElement u = d.J;
    std::string extra;
    if (what == "phi") {
        u = d.sub.restrict(d.phi_J);
    } else if (what == "beta") {
        u = d.beta_J;
    } else if (what != "J") {
        const QuasiHopfStructure A = build_Aq(d);
        if (what == "delta_x") u = A.delta(d.sub.x());
        if (what == "sx") u = A.S(d.sub.x());
        if (what == "alpha") {
            u = A.alpha;
            extra = "# alpha = " + identify_alpha(d.sub, A.alpha) + "\n";
        }
    }

    std::ostringstream out;
    out << "# " << what << " n=" << n << " e=" << e << " conductor=" << N << " symbol=z terms=" << u.size() << "\n"
        << extra;
    for (const auto& t : u.terms()) {
        out << t.coeff.embed(N).to_string("z") << "\t";
        const auto tuple = u.tuple_of(t.key);
        for (std::size_t s = 0; s < tuple.size(); ++s) out << (s ? " ⊗ " : "") << u.parent()->label(tuple[s]);
        out << "\n";
    }
    return out.str();
}

std::string version() { return "0.1.0"; }

}  // namespace qhopf
