#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf {

struct NamedElement {
    std::string name;
    AlgebraElement value;
};

/// An algebra with coproduct Δ, counit ε, associator Φ, antipode S and the
/// distinguished elements α, β. Δ, ε and S are tabulated on the carrier basis
/// and extended linearly.
///
/// The axioms (checked by the verifier, never assumed):
///   (id⊗Δ)Δ(u) = Φ (Δ⊗id)Δ(u) Φ^{-1}
///   (1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1) = (id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ)
///   (ε⊗id)Δ = id = (id⊗ε)Δ,  (id⊗ε⊗id)(Φ) = 1⊗1
///   Σ S(u_1) α u_2 = ε(u) α,  Σ u_1 β S(u_2) = ε(u) β
///   Σ X_i β S(Y_i) α Z_i = 1        for Φ   = Σ X_i ⊗ Y_i ⊗ Z_i
///   Σ S(P_i) α Q_i β S(R_i) = 1     for Φ^{-1} = Σ P_i ⊗ Q_i ⊗ R_i
struct QuasiHopfStructure {
    QuasiHopfStructure(std::string name, DescriptorPtr carrier);

    std::string name;
    DescriptorPtr carrier;
    std::vector<TensorElement> coproduct;   // rank 2, one per basis index
    std::vector<CycNumber> counit;          // one per basis index
    TensorElement associator;               // rank 3
    std::vector<AlgebraElement> antipode;   // rank 1, one per basis index
    AlgebraElement alpha;
    AlgebraElement beta;
    /// Algebra generators; the quasi-coassociativity check always covers them.
    std::vector<NamedElement> generators;

    // Set for A(q) only: x-degree of every basis element, and the parameters.
    std::vector<int> x_degree;
    int n = 0;
    std::optional<CycNumber> q;

    TensorElement delta(const AlgebraElement& u) const;
    CycNumber epsilon(const AlgebraElement& u) const;
    AlgebraElement S(const AlgebraElement& u) const;

    BasisMap delta_map() const;
    BasisMap epsilon_map() const;
    BasisMap antipode_map() const;

    const AlgebraElement& generator(const std::string& name) const;
};

}  // namespace qhopf
