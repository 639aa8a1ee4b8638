#pragma once

// Exact checks of the quasi-Hopf axioms and of the structural properties of
// A(q). Every check returns a CheckResult instead of throwing; a failed check
// carries a witness (the first differing term, or the offending element).
//
// Sampling: where a check says "sampled", the basis elements are taken from
// sample_basis(dim, count, seed), a seeded Fisher-Yates prefix of 0..dim-1
// driven by std::mt19937_64 (whose output sequence is fixed by the standard).
// For n <= 3 the checks run exhaustively instead.

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;  // empty when passed
    std::string note;     // extra facts worth reporting either way
    double elapsed_ms = 0;

    static CheckResult pass(std::string name, std::string note = {});
    static CheckResult fail(std::string name, std::string witness, std::string note = {});
};

/// `count` distinct indices from [0, dim) (all of them, in order, if count >= dim).
std::vector<int> sample_basis(int dim, std::size_t count, std::uint64_t seed);

/// Basis indices a check visits: everything for n <= 3, otherwise `sampled` seeded picks.
std::vector<int> check_indices(const QuasiHopfStructure& s, std::size_t sampled, std::uint64_t seed);

/// (id⊗Δ)Δ(u) = Φ (Δ⊗id)Δ(u) Φ^{-1} on the generators and the checked basis elements.
CheckResult check_quasi_coassoc(const QuasiHopfStructure& s, std::uint64_t seed = 0);

/// (1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1) = (id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ) and (id⊗ε⊗id)(Φ) = 1⊗1.
CheckResult check_pentagon(const QuasiHopfStructure& s);

/// (ε⊗id)Δ = id = (id⊗ε)Δ on every basis element; ε multiplicative on sampled pairs.
CheckResult check_counit(const QuasiHopfStructure& s, std::uint64_t seed = 0);

/// The four antipode axioms (see quasi_hopf.hpp), the element-wise ones on every
/// basis element, and S(uv) = S(v)S(u) on sampled pairs.
CheckResult check_antipode(const QuasiHopfStructure& s, std::uint64_t seed = 0);

// The remaining checks need the x-degree of each basis element (A(q) only).
// I denotes the span of the basis elements of positive x-degree.

/// I is a two-sided ideal, the product is graded by x-degree, I is nilpotent
/// of degree n^2, A/I is spanned by the images of the a^i and is commutative,
/// and A has exactly n characters, which form a cyclic group of order n
/// under convolution through Δ.
CheckResult check_basic(const QuasiHopfStructure& s);

/// I^k is the span of x-degree >= k, dim A[0] = dim A[1] = n, {a^i x} is a
/// basis of A[1], and a u a^{-1} = Q u on A[1].
CheckResult check_grading(const QuasiHopfStructure& s);

/// Δ(I) ⊆ I⊗A + A⊗I, ε(I) = 0, S(I) ⊆ I.
CheckResult check_radical_is_quasihopf_ideal(const QuasiHopfStructure& s);

/// Σ c_i L(t_i1) m_1 L(t_i2) m_2 ... over the terms of t; `maps` has one entry per
/// slot and `between` one element fewer.
AlgebraElement contract(const TensorElement& t, const std::vector<BasisMap>& maps,
                        const std::vector<AlgebraElement>& between);

}  // namespace qhopf
