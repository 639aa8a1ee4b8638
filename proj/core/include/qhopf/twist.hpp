#pragma once

// Twisting H(q) by J = Σ_{z,y} c(z,y) 1_z ⊗ 1_y, c(z,y) = q^{-z(y - y')},
// y' = y mod n, and restricting the twisted structure to A(q).
//
// Everything here is computed from the general gauge-transformation
// formulas
//   Δ_J(h) = J Δ(h) J^{-1}
//   Φ_J    = (1⊗J) (id⊗Δ)(J) (Δ⊗id)(J^{-1}) (J⊗1)^{-1}
//   α_J    = Σ S(f̄_i) ḡ_i,  β_J = Σ f_i S(g_i)   (J = Σ f_i⊗g_i, J^{-1} = Σ f̄_i⊗ḡ_i)
//   S_J(h) = β_J S(h) β_J^{-1}
// with the twisted structure (Δ_J, ε, Φ_J, S_J, β_J α_J, 1). The closed
// forms below are separate functions so they can be compared against these.

#include "qhopf/quasi_hopf.hpp"
#include "qhopf/taft.hpp"

namespace qhopf {

/// c(z, y) = q^{-z(y - y mod n)}.
CycNumber twist_coefficient(const TaftAlgebra& taft, int z, int y);

/// J in H⊗H (idempotent basis).
TensorElement build_J(const TaftAlgebra& taft);

/// Φ_J by the coboundary formula, in H^{⊗3} (idempotent basis).
TensorElement associator_phi_J(const TaftAlgebra& taft, const TensorElement& J);

/// Φ_l = Σ_{i,j,k<n} q^{il(j+k-(j+k)')} e_i ⊗ e_j ⊗ e_k in A^{⊗3}.
TensorElement phi_l(const SubalgebraA& sub, int l);

/// J Δ(u) J^{-1} for u in H (idempotent basis).
TensorElement delta_J(const TaftAlgebra& taft, const TensorElement& J, const AlgebraElement& u);

struct AlphaBeta {
    AlgebraElement alpha;
    AlgebraElement beta;
};
/// (α_J, β_J) from the gauge formulas with α = β = 1, in H (idempotent basis).
AlphaBeta alpha_beta_J(const TaftAlgebra& taft, const TensorElement& J);

/// β_J S(u) β_J^{-1}.
AlgebraElement s_J(const TaftAlgebra& taft, const TensorElement& J, const AlgebraElement& u);

// Closed forms claimed for the construction.

/// x ⊗ Σ_{y<n} q^y e_y + 1 ⊗ (1 - e_0) x + a^{-1} ⊗ e_0 x, in A⊗A.
TensorElement delta_x_closed_form(const SubalgebraA& sub);
/// -x Σ_{z<n} q^{n-z} e_z, in A.
AlgebraElement s_x_closed_form(const SubalgebraA& sub);
/// Σ_z q^{(z - z' + n) z} 1_z, in H.
AlgebraElement beta_J_closed_form(const TaftAlgebra& taft);
/// Σ_z q^{-(z - z') z} 1_z, in H.
AlgebraElement alpha_J_closed_form(const TaftAlgebra& taft);
/// Σ_z q^{nz} 1_z, in H.
AlgebraElement alpha_beta_product_closed_form(const TaftAlgebra& taft);

/// Every intermediate of the construction for one (n, e).
struct TwistData {
    static TwistData create(int n, int e);

    TaftAlgebra taft;
    SubalgebraA sub;
    TensorElement J;
    TensorElement J_inv;
    TensorElement phi_J;  // H^{⊗3}
    AlgebraElement alpha_J;
    AlgebraElement beta_J;
};

/// The Hopf algebra H(q) itself (monomial basis, Φ = 1, α = β = 1).
QuasiHopfStructure taft_hopf_structure(const TaftAlgebra& taft);

/// A(q) with (Δ_J, ε, Φ_J, S_J, β_J α_J, 1) restricted from H_J.
/// Throws ClosureError if any structure map leaves A.
QuasiHopfStructure build_Aq(const TwistData& data);
QuasiHopfStructure build_Aq(int n, int e);

/// Which power of a the distinguished element α of A(q) is: "a", "a^-1",
/// "a = a^-1" (n = 2) or "neither".
std::string identify_alpha(const SubalgebraA& sub, const AlgebraElement& alpha);

}  // namespace qhopf
