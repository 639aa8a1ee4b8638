#pragma once

// 3-cochains on Z/n with values in the cyclotomic field, the cocycle
// condition, and a scalar that detects nontrivial cohomology classes.
//
// Cocycle condition (all i, j, k, l mod n):
//   c(j,k,l) c(i,j+k,l) c(i,j,k) = c(i+j,k,l) c(i,j,k+l)
// This is the pentagon identity for Φ = Σ c(i,j,k) e_i⊗e_j⊗e_k over the
// group algebra of Z/n written in its idempotents.

#include <cstdint>
#include <vector>

#include "qhopf/twist.hpp"
#include "qhopf/verifier.hpp"

namespace qhopf {

class ThreeCochain {
public:
    /// The constant cochain 1.
    explicit ThreeCochain(int n);

    int n() const noexcept { return n_; }
    /// Arguments are reduced mod n.
    const CycNumber& operator()(int i, int j, int k) const;
    void set(int i, int j, int k, CycNumber value);

    friend ThreeCochain operator*(const ThreeCochain& a, const ThreeCochain& b);
    friend bool operator==(const ThreeCochain& a, const ThreeCochain& b);

private:
    std::size_t slot(int i, int j, int k) const;

    int n_;
    std::vector<CycNumber> values_;
};

/// ω_l(i,j,k) = q^{l i (j+k-(j+k)')}, (j+k)' = (j+k) mod n, arguments in [0, n).
ThreeCochain omega(int n, const CycNumber& q, int l);

/// Reads the coefficients of e_i⊗e_j⊗e_k from an element of A^{⊗3}. Throws
/// InvalidArgument if the element has terms outside those triples.
ThreeCochain cochain_from_associator(const SubalgebraA& sub, const TensorElement& phi);

/// Exhaustive cocycle condition over all n^4 quadruples, plus normalization
/// (c = 1 whenever an argument is 0).
CheckResult check_3cocycle(const ThreeCochain& c);

/// Π_{j<n} c(1, j, 1). Unchanged by multiplying c with a coboundary; equals
/// Q^l for omega(n, q, l) with Q = q^n. Throws InvalidArgument if c is not a cocycle.
CycNumber class_invariant(const ThreeCochain& c);

/// The 2-cochain b(i,j) = ζ_{n^2}^{r(i,j)} with seeded exponents, b(0,j) = b(i,0) = 1.
std::vector<CycNumber> random_two_cochain(int n, std::uint64_t seed);

/// db(i,j,k) = b(j,k) b(i+j,k)^{-1} b(i,j+k) b(i,j)^{-1} for the 2-cochain b
/// stored row-major (b[i*n + j]).
ThreeCochain coboundary(int n, const std::vector<CycNumber>& b);

/// coboundary(n, random_two_cochain(n, seed)).
ThreeCochain random_coboundary(int n, std::uint64_t seed);

}  // namespace qhopf
