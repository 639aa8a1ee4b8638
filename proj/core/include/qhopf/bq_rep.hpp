#pragma once

// The operators ξ_l, η_l on the degree-one layer A(q)[1] and the algebra
// B(Q) they generate together with a.
//
// With χ_t the character χ_t(e_s x^j) = δ_{st} δ_{j0} of A(q) (χ_1(a) = Q,
// χ_t = χ_1^t under convolution),
//   ξ_l(z) = (χ_l ⊗ id) Δ(z),   η_l(z) = (id ⊗ χ_l) Δ(z).
// Matrices act on columns in the basis v_i = e_i x (i < n): column j holds
// the coordinates of the image of v_j.
//
// E_r = Σ_{k=0}^{n-2} e_{k-r} + Q e_{n-1-r} acts on v_i by left multiplication,
// i.e. diagonally with Q at i = n-1-r (mod n) and 1 elsewhere.

#include <optional>
#include <vector>

#include "qhopf/linalg.hpp"
#include "qhopf/twist.hpp"
#include "qhopf/verifier.hpp"

namespace qhopf {

struct DegreeOneModule {
    int n = 0;
    int q_exponent = 0;  // q = ζ_{n^2}^e
    CycNumber q;
    CycNumber Q;
    Matrix a;
    Matrix xi;
    Matrix eta;
};

struct XiEta {
    Matrix xi;
    Matrix eta;
};

/// ξ_l and η_l on A(q)[1] from the coproduct of `A`. Throws ClosureError if
/// an image leaves A[1].
XiEta xi_eta_operators(const SubalgebraA& sub, const QuasiHopfStructure& A, int l);

/// a (left multiplication), ξ = ξ_1, η = η_1 on A(q)[1].
DegreeOneModule degree_one_module(const SubalgebraA& sub, const QuasiHopfStructure& A);

/// E_r(Q) as a diagonal n×n matrix.
Matrix e_matrix(int n, const CycNumber& Q, int r);

/// a^n = 1, ξ^n = Q^{-1}, η^n = Q, ξa = Qaξ, ηa = Qaη, ξη = E_0^{-1}E_{-1}ηξ.
CheckResult check_bq_relations(const DegreeOneModule& D);

/// The same relations with ξη = E_0 E_{-1}^{-1} ηξ in place of the last one.
CheckResult check_bq_relations_inverse_form(const DegreeOneModule& D);

/// ξ_l a = Q^l a ξ_l and η_l a = Q^l a η_l for 1 <= l <= n.
CheckResult check_xi_eta_commutation(const SubalgebraA& sub, const QuasiHopfStructure& A);

/// Scalars (c_ξ, c_η), ζ_{n^2} powers with the smallest exponent in [0, n^2),
/// such that (c_ξ ξ)^n = (c_η η)^n = 1.
std::pair<CycNumber, CycNumber> rescaling_factors(const DegreeOneModule& D);
/// D with ξ, η multiplied by rescaling_factors(D).
DegreeOneModule rescaled(const DegreeOneModule& D);

/// a v_i = Q^i v_i, η v_i = q v_{i-1}, ξ v_i = Q^{-δ_{id}} v_{i-1} with d = xi_defect.
/// d = 0 is the textbook closed form; the module A(q)[1] computed from Δ_J is
/// d = 1 (see README).
DegreeOneModule vq_module(int n, int e, int xi_defect = 0);

/// d with M' = diag(d) M diag(d)^{-1} for M = a, ξ, η simultaneously, or nullopt.
std::optional<std::vector<CycNumber>> diagonal_equivalence(const DegreeOneModule& from, const DegreeOneModule& to);

/// Diagonal of ηξ^{-1} (which must be diagonal) in basis order. Throws
/// SingularElement if ξ is singular and InvalidArgument if ηξ^{-1} is not diagonal.
std::vector<CycNumber> eta_xi_inv_diagonal(const DegreeOneModule& D);
/// The same, sorted.
std::vector<CycNumber> spectrum_eta_xi_inv(const DegreeOneModule& D);

/// Dimension of {X : XM = MX for M = a, ξ, η}.
std::size_t commutant_dimension(const DegreeOneModule& D);

/// Irreducibility of each module (1-dimensional commutant), pairwise distinct
/// joint spectra of (a, ηξ^{-1}), and rank n^3 of the n^3 products a^i ξ^j η^k acting on
/// the direct sum. `modules` are the n modules with q^n = Q. The note says so
/// when the ηξ^{-1} spectra alone coincide (n = 2).
CheckResult check_bq_semisimple(const std::vector<DegreeOneModule>& modules);

/// Isomorphism invariant of A(q): the class of its associator, the ηξ^{-1}
/// spectrum on A[1], and the ηξ^{-1} eigenvalue on the line of A[1] fixed by a.
struct NonisomorphismInvariant {
    CycNumber associator_class;
    std::vector<CycNumber> spectrum;
    CycNumber fixed_line_eigenvalue;

    friend bool operator==(const NonisomorphismInvariant&, const NonisomorphismInvariant&) = default;
    std::string to_string() const;
};

NonisomorphismInvariant nonisomorphism_invariant(const SubalgebraA& sub, const QuasiHopfStructure& A);

}  // namespace qhopf
