#include "qhopf/bq_rep.hpp"

#include <algorithm>
#include <sstream>

#include "qhopf/cocycle.hpp"

namespace qhopf {

namespace {

int mod(long a, int m) {
    long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Character χ_t on a basis index of A(q).
CycNumber chi(const SubalgebraA& sub, int t, int b) {
    const auto [s, j] = sub.labels(b);
    return CycNumber(j == 0 && s == mod(t, sub.n()) ? 1L : 0L);
}

// Coordinates of a rank-1 element that must lie in A[1]; column of a matrix.
std::vector<CycNumber> degree_one_coordinates(const SubalgebraA& sub, const AlgebraElement& u, const std::string& what) {
    const int n = sub.n();
    std::vector<CycNumber> col(static_cast<std::size_t>(n));
    for (const auto& t : u.terms()) {
        const auto [s, j] = sub.labels(static_cast<int>(t.key));
        if (j != 1) throw ClosureError(what + " leaves A[1]: term " + sub.descriptor()->label(static_cast<int>(t.key)));
        col[static_cast<std::size_t>(s)] = t.coeff;
    }
    return col;
}

Matrix from_columns(const std::vector<std::vector<CycNumber>>& cols) {
    const std::size_t n = cols.size();
    Matrix m(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
    return m;
}

std::optional<std::string> matrix_difference(const std::string& what, const Matrix& lhs, const Matrix& rhs) {
    for (std::size_t r = 0; r < lhs.rows(); ++r)
        for (std::size_t c = 0; c < lhs.cols(); ++c)
            if (!(lhs(r, c) == rhs(r, c)))
                return what + " differs at (" + std::to_string(r) + "," + std::to_string(c) + "): " +
                       lhs(r, c).to_string() + " vs " + rhs(r, c).to_string();
    return std::nullopt;
}

CheckResult relations(const DegreeOneModule& D, bool inverse_form, const std::string& name) {
    const auto n = static_cast<std::size_t>(D.n);
    const Matrix id = Matrix::identity(n);
    const Matrix& a = D.a;
    const Matrix& xi = D.xi;
    const Matrix& eta = D.eta;
    const CycNumber& Q = D.Q;
    const Matrix E0 = e_matrix(D.n, Q, 0);
    const Matrix Em1 = e_matrix(D.n, Q, -1);
    const Matrix factor = inverse_form ? E0 * inverse(Em1) : inverse(E0) * Em1;
    const std::string relation = inverse_form ? "ξη = E_0 E_{-1}^{-1} ηξ" : "ξη = E_0^{-1} E_{-1} ηξ";

    const std::vector<std::tuple<std::string, Matrix, Matrix>> checks = {
        {"a^n = 1", a.pow(static_cast<unsigned>(n)), id},
        {"ξ^n = Q^-1", xi.pow(static_cast<unsigned>(n)), Q.inverse() * id},
        {"η^n = Q", eta.pow(static_cast<unsigned>(n)), Q * id},
        {"ξa = Qaξ", xi * a, Q * (a * xi)},
        {"ηa = Qaη", eta * a, Q * (a * eta)},
        {relation, xi * eta, factor * (eta * xi)},
    };
    for (const auto& [what, lhs, rhs] : checks)
        if (auto diff = matrix_difference(what, lhs, rhs)) return CheckResult::fail(name, *diff);
    return CheckResult::pass(name, "a^n = 1, ξ^n = Q^-1, η^n = Q, ξa = Qaξ, ηa = Qaη, " + relation);
}

std::vector<CycNumber> sorted(std::vector<CycNumber> v) {
    std::sort(v.begin(), v.end(), [](const CycNumber& x, const CycNumber& y) { return compare(x, y) < 0; });
    return v;
}

}  // namespace

XiEta xi_eta_operators(const SubalgebraA& sub, const QuasiHopfStructure& A, int l) {
    const int n = sub.n();
    std::vector<std::vector<CycNumber>> xi_cols, eta_cols;
    for (int i = 0; i < n; ++i) {
        const TensorElement& d = A.coproduct[static_cast<std::size_t>(sub.index(i, 1))];
        const BasisMap left = [&](int b) { return TensorElement::scalar(A.carrier, chi(sub, l, b)); };
        const std::string where = "e_" + std::to_string(i) + " x";
        xi_cols.push_back(degree_one_coordinates(sub, apply_on_factor(left, 1, d), "ξ_" + std::to_string(l) + "(" + where + ")"));
        eta_cols.push_back(degree_one_coordinates(sub, apply_on_factor(left, 2, d), "η_" + std::to_string(l) + "(" + where + ")"));
    }
    return {from_columns(xi_cols), from_columns(eta_cols)};
}

DegreeOneModule degree_one_module(const SubalgebraA& sub, const QuasiHopfStructure& A) {
    const int n = sub.n();
    DegreeOneModule D;
    D.n = n;
    D.q_exponent = sub.taft().q_exponent();
    D.q = sub.taft().q();
    D.Q = sub.taft().Q();
    std::vector<std::vector<CycNumber>> a_cols;
    const AlgebraElement a = sub.a();
    for (int i = 0; i < n; ++i)
        a_cols.push_back(degree_one_coordinates(sub, mul(a, sub.basis_element(i, 1)), "a e_" + std::to_string(i) + " x"));
    D.a = from_columns(a_cols);
    auto ops = xi_eta_operators(sub, A, 1);
    D.xi = std::move(ops.xi);
    D.eta = std::move(ops.eta);
    return D;
}

Matrix e_matrix(int n, const CycNumber& Q, int r) {
    std::vector<CycNumber> diag(static_cast<std::size_t>(n), CycNumber(1L));
    diag[static_cast<std::size_t>(mod(n - 1 - r, n))] = Q;
    return Matrix::diagonal(diag);
}

CheckResult check_bq_relations(const DegreeOneModule& D) { return relations(D, false, "bq_relations"); }

CheckResult check_bq_relations_inverse_form(const DegreeOneModule& D) {
    return relations(D, true, "bq_relations_inverse_form");
}

CheckResult check_xi_eta_commutation(const SubalgebraA& sub, const QuasiHopfStructure& A) {
    const std::string name = "xi_eta_commutation";
    const int n = sub.n();
    const DegreeOneModule D = degree_one_module(sub, A);
    for (int l = 1; l <= n; ++l) {
        const XiEta ops = xi_eta_operators(sub, A, l);
        const CycNumber Ql = D.Q.pow(l);
        if (auto diff = matrix_difference("ξ_" + std::to_string(l) + " a = Q^l a ξ_l", ops.xi * D.a, Ql * (D.a * ops.xi)))
            return CheckResult::fail(name, *diff);
        if (auto diff = matrix_difference("η_" + std::to_string(l) + " a = Q^l a η_l", ops.eta * D.a, Ql * (D.a * ops.eta)))
            return CheckResult::fail(name, *diff);
    }
    return CheckResult::pass(name, "l = 1.." + std::to_string(n));
}

std::pair<CycNumber, CycNumber> rescaling_factors(const DegreeOneModule& D) {
    const int N = D.n * D.n;
    // (ζ^k)^n = ζ^{kn} must cancel Q^{-1} = ζ^{-en} for ξ and Q = ζ^{en} for η
    const int k_xi = mod(D.q_exponent, D.n);
    const int k_eta = mod(-D.q_exponent, D.n);
    return {CycNumber::root_of_unity(N, k_xi), CycNumber::root_of_unity(N, k_eta)};
}

DegreeOneModule rescaled(const DegreeOneModule& D) {
    const auto [c_xi, c_eta] = rescaling_factors(D);
    DegreeOneModule out = D;
    out.xi = c_xi * D.xi;
    out.eta = c_eta * D.eta;
    return out;
}

DegreeOneModule vq_module(int n, int e, int xi_defect) {
    const TaftAlgebra T = TaftAlgebra::create(n, e);
    DegreeOneModule D;
    D.n = n;
    D.q_exponent = T.q_exponent();
    D.q = T.q();
    D.Q = T.Q();
    const auto size = static_cast<std::size_t>(n);
    std::vector<CycNumber> diag;
    for (int i = 0; i < n; ++i) diag.push_back(D.Q.pow(i));
    D.a = Matrix::diagonal(diag);
    D.xi = Matrix(size, size);
    D.eta = Matrix(size, size);
    for (int i = 0; i < n; ++i) {
        const auto to = static_cast<std::size_t>(mod(i - 1, n));
        const auto from = static_cast<std::size_t>(i);
        D.eta(to, from) = D.q;
        D.xi(to, from) = i == mod(xi_defect, n) ? D.Q.inverse() : CycNumber(1L);
    }
    return D;
}

std::optional<std::vector<CycNumber>> diagonal_equivalence(const DegreeOneModule& from, const DegreeOneModule& to) {
    if (from.n != to.n) return std::nullopt;
    const auto n = static_cast<std::size_t>(from.n);
    // propagate d along the nonzero entries of ξ, then verify everything
    std::vector<std::optional<CycNumber>> d(n);
    d[0] = CycNumber(1L);
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (from.xi(r, c).is_zero() || to.xi(r, c).is_zero()) continue;
                // to(r,c) = d_r from(r,c) / d_c
                if (d[c] && !d[r]) {
                    d[r] = to.xi(r, c) * *d[c] / from.xi(r, c);
                    progress = true;
                } else if (d[r] && !d[c]) {
                    d[c] = from.xi(r, c) * *d[r] / to.xi(r, c);
                    progress = true;
                }
            }
    }
    std::vector<CycNumber> diag;
    for (const auto& v : d) {
        if (!v) return std::nullopt;
        diag.push_back(*v);
    }
    const Matrix P = Matrix::diagonal(diag);
    const Matrix P_inv = inverse(P);
    if (!(P * from.a * P_inv == to.a) || !(P * from.xi * P_inv == to.xi) || !(P * from.eta * P_inv == to.eta))
        return std::nullopt;
    return diag;
}

std::vector<CycNumber> eta_xi_inv_diagonal(const DegreeOneModule& D) {
    const Matrix m = D.eta * inverse(D.xi);
    if (!m.is_diagonal()) throw InvalidArgument("ηξ^-1 is not diagonal: " + m.to_string());
    return m.diagonal_entries();
}

std::vector<CycNumber> spectrum_eta_xi_inv(const DegreeOneModule& D) { return sorted(eta_xi_inv_diagonal(D)); }

std::size_t commutant_dimension(const DegreeOneModule& D) {
    const auto n = static_cast<std::size_t>(D.n);
    // unknown X(p, k) at column p*n + k; one row per entry of XM - MX
    const std::vector<const Matrix*> ops = {&D.a, &D.xi, &D.eta};
    Matrix system(ops.size() * n * n, n * n);
    std::size_t row = 0;
    for (const Matrix* M : ops)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c, ++row) {
                // (XM)(r,c) = Σ_k X(r,k) M(k,c);  (MX)(r,c) = Σ_k M(r,k) X(k,c)
                for (std::size_t k = 0; k < n; ++k) {
                    system(row, r * n + k) += (*M)(k, c);
                    system(row, k * n + c) -= (*M)(r, k);
                }
            }
    return n * n - rank(std::move(system));
}

CheckResult check_bq_semisimple(const std::vector<DegreeOneModule>& modules) {
    const std::string name = "bq_semisimple";
    if (modules.empty()) return CheckResult::fail(name, "no modules");
    const int n = modules.front().n;
    const auto size = static_cast<std::size_t>(n);
    if (modules.size() != size) return CheckResult::fail(name, "expected n modules, got " + std::to_string(modules.size()));
    for (const auto& D : modules)
        if (!(D.Q == modules.front().Q)) return CheckResult::fail(name, "modules do not share Q");

    for (const auto& D : modules) {
        const std::size_t dim = commutant_dimension(D);
        if (dim != 1)
            return CheckResult::fail(name, "commutant of V_q for q = z^" + std::to_string(D.q_exponent) + " has dimension " +
                                               std::to_string(dim));
    }
    // a is the same diagonal on every V_q, so the diagonal of ηξ^{-1} in basis
    // order is the joint spectrum of (a, ηξ^{-1}).
    std::vector<std::vector<CycNumber>> joint;
    for (const auto& D : modules) joint.push_back(eta_xi_inv_diagonal(D));
    for (std::size_t i = 0; i < joint.size(); ++i)
        for (std::size_t j = i + 1; j < joint.size(); ++j)
            if (joint[i] == joint[j])
                return CheckResult::fail(name, "V_q for q = z^" + std::to_string(modules[i].q_exponent) + " and z^" +
                                                   std::to_string(modules[j].q_exponent) +
                                                   " share the joint spectrum of (a, ηξ^-1)");
    bool plain_distinct = true;
    for (std::size_t i = 0; i < modules.size(); ++i)
        for (std::size_t j = i + 1; j < modules.size(); ++j)
            if (spectrum_eta_xi_inv(modules[i]) == spectrum_eta_xi_inv(modules[j])) plain_distinct = false;

    // the n^3 products a^i ξ^j η^k as vectors in ⊕ End(V_q) (n blocks of n×n)
    const std::size_t count = size * size * size;
    Matrix span(count, count);
    for (std::size_t m = 0; m < size; ++m) {
        const auto& D = modules[m];
        std::vector<Matrix> a_pow{Matrix::identity(size)}, xi_pow{Matrix::identity(size)}, eta_pow{Matrix::identity(size)};
        for (std::size_t k = 1; k < size; ++k) {
            a_pow.push_back(a_pow.back() * D.a);
            xi_pow.push_back(xi_pow.back() * D.xi);
            eta_pow.push_back(eta_pow.back() * D.eta);
        }
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                for (std::size_t k = 0; k < size; ++k) {
                    const Matrix prod = a_pow[i] * xi_pow[j] * eta_pow[k];
                    const std::size_t r = (i * size + j) * size + k;
                    for (std::size_t x = 0; x < size; ++x)
                        for (std::size_t y = 0; y < size; ++y) span(r, m * size * size + x * size + y) = prod(x, y);
                }
    }
    const std::size_t r = rank(std::move(span));
    if (r != count)
        return CheckResult::fail(name, "the products a^i ξ^j η^k span a space of dimension " + std::to_string(r) +
                                           " < " + std::to_string(count));
    return CheckResult::pass(name, std::to_string(n) + " irreducible modules, span dimension " + std::to_string(count) +
                                       (plain_distinct ? "" : "; ηξ^-1 spectra coincide as multisets"));
}

std::string NonisomorphismInvariant::to_string() const {
    std::ostringstream out;
    out << "class " << associator_class.to_string() << "; spectrum {";
    for (std::size_t i = 0; i < spectrum.size(); ++i) out << (i ? ", " : "") << spectrum[i].to_string();
    out << "}; on the a-fixed line " << fixed_line_eigenvalue.to_string();
    return out.str();
}

NonisomorphismInvariant nonisomorphism_invariant(const SubalgebraA& sub, const QuasiHopfStructure& A) {
    const DegreeOneModule D = degree_one_module(sub, A);
    NonisomorphismInvariant inv;
    inv.associator_class = class_invariant(cochain_from_associator(sub, A.associator));
    const auto diag = eta_xi_inv_diagonal(D);
    inv.spectrum = sorted(diag);
    // a acts on v_i by Q^i, so the a-fixed line is v_0
    if (!D.a(0, 0).is_one()) throw InvalidArgument("a does not fix e_0 x");
    inv.fixed_line_eigenvalue = diag[0];
    return inv;
}

}  // namespace qhopf
