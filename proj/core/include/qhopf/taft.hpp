#pragma once

// The Taft Hopf algebra H(q) of dimension n^4, with g^{n^2} = 1,
// x^{n^2} = 0, gx = q xg, Δ(g) = g⊗g, Δ(x) = x⊗g + 1⊗x, ε(g) = 1,
// ε(x) = 0, S(g) = g^{-1}, S(x) = -x g^{-1}; and its subalgebra A(q)
// generated by a = g^n and x.
//
// H is carried in two bases:
//   monomial    g^i x^j                  (i, j < n^2), index i*n^2 + j
//   idempotent  1_z x^j, g 1_z = q^z 1_z (z, j < n^2), index z*n^2 + j
// The Hopf structure is defined on monomials; the idempotent basis is the
// image under the change of basis g^i ↦ Σ_z q^{iz} 1_z. In it the product is
// 1_z x^j · 1_w x^l = [z = w + j] 1_z x^{j+l}, so group-algebra elements are
// diagonal and twisting by J only rescales coefficients.
//
// A(q) is carried in the basis e_s x^j (s < n, j < n^2) where
// e_s = Σ_i 1_{s+ni} are the idempotents of k[Z/n] = span{a^i}.

#include <memory>
#include <utility>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf {

class TaftAlgebra {
public:
    /// H(q) for q = ζ_{n^2}^e. Throws InvalidArgument unless n >= 2 and gcd(e, n^2) = 1.
    static TaftAlgebra create(int n, int e);

    int n() const noexcept { return n_; }
    /// Order of q, n^2.
    int order() const noexcept { return n_ * n_; }
    int q_exponent() const noexcept { return e_; }
    int dimension() const noexcept { return order() * order(); }

    /// q^k for any integer k.
    const CycNumber& q_pow(long k) const;
    const CycNumber& q() const { return q_pow(1); }
    /// Q = q^n, a primitive n-th root of unity.
    const CycNumber& Q() const { return q_pow(n_); }

    const DescriptorPtr& monomial_basis() const noexcept { return monomial_; }
    const DescriptorPtr& idempotent_basis() const noexcept { return idempotent_; }

    int monomial_index(int i, int j) const;
    std::pair<int, int> monomial_exponents(int index) const;
    int idempotent_index(int z, int j) const;
    std::pair<int, int> idempotent_labels(int index) const;

    /// g^i x^j in the monomial basis (exponent i taken mod n^2).
    AlgebraElement monomial(int i, int j) const;
    /// (g^i x^j)(g^k x^l) = q^{-jk} g^{i+k} x^{j+l}, zero once j + l >= n^2.
    AlgebraElement taft_mul(int i, int j, int k, int l) const;

    /// Coproduct; accepts rank-1 elements in either basis, answers in the same basis.
    TensorElement delta(const AlgebraElement& u) const;
    CycNumber epsilon(const AlgebraElement& u) const;
    AlgebraElement antipode(const AlgebraElement& u) const;

    BasisMap delta_map(const DescriptorPtr& basis) const;
    BasisMap epsilon_map(const DescriptorPtr& basis) const;
    BasisMap antipode_map(const DescriptorPtr& basis) const;

    /// 1_z = (1/n^2) Σ_t q^{-zt} g^t, in the monomial basis.
    AlgebraElement idempotent(int z) const;
    /// Bold 1_s = Σ_i 1_{s+ni}, in the monomial basis.
    AlgebraElement bold_idempotent(int s) const;

    /// Change of basis on every tensor slot.
    TensorElement to_idempotent_basis(const TensorElement& u) const;
    TensorElement to_monomial_basis(const TensorElement& u) const;

    /// Monomial-basis indices of a^i x^j = g^{ni} x^j, the basis of A inside H.
    std::vector<int> subalgebra_monomials() const;

private:
    TaftAlgebra() = default;

    AlgebraElement delta_monomial_basis(int index) const;
    TensorElement delta_idempotent_basis(int index) const;

    int n_ = 0;
    int e_ = 0;
    std::shared_ptr<const std::vector<CycNumber>> q_powers_;
    DescriptorPtr monomial_;
    DescriptorPtr idempotent_;
    // Δ and S on monomials, built once by multiplying out the generators.
    std::shared_ptr<const std::vector<TensorElement>> delta_mono_;
    std::shared_ptr<const std::vector<AlgebraElement>> antipode_mono_;
};

class SubalgebraA {
public:
    explicit SubalgebraA(TaftAlgebra taft);

    const TaftAlgebra& taft() const noexcept { return taft_; }
    int n() const noexcept { return taft_.n(); }
    int dimension() const noexcept { return n() * taft_.order(); }
    const DescriptorPtr& descriptor() const noexcept { return descriptor_; }

    int index(int s, int j) const;
    std::pair<int, int> labels(int index) const;

    /// e_s x^j.
    AlgebraElement basis_element(int s, int j) const;
    /// a^i x^j = Σ_s Q^{is} e_s x^j.
    AlgebraElement monomial(int i, int j) const;
    AlgebraElement a() const { return monomial(1, 0); }
    AlgebraElement x() const { return monomial(0, 1); }
    /// e_s as an element of A.
    AlgebraElement bold_idempotent(int s) const { return basis_element(s, 0); }

    /// A^{⊗r} → H^{⊗r} in the idempotent basis: e_s x^j ↦ Σ_i 1_{s+ni} x^j.
    TensorElement embed(const TensorElement& u) const;
    /// Inverse of embed on its image. Throws ClosureError naming the first
    /// term that keeps u out of A^{⊗r}.
    TensorElement restrict(const TensorElement& u) const;
    /// True iff restrict would succeed.
    bool contains(const TensorElement& u) const;

private:
    TaftAlgebra taft_;
    DescriptorPtr descriptor_;
};

}  // namespace qhopf
