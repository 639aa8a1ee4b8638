#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// An element is stored as its coordinate vector in the power basis
// 1, z, ..., z^(phi(m)-1) modulo the m-th cyclotomic polynomial, written as
// integer numerators over one positive common denominator in lowest terms.
// Numerators live in 64-bit integers and move to GMP integers when an
// operation would overflow. The form is canonical, so two elements of the
// same conductor are equal iff their stored forms are equal. Operands of
// different conductors are embedded into the lcm first.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhopf/errors.hpp"

namespace qhopf {

using Rational = mpq_class;

int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int m);

class CycNumber {
public:
    /// Zero, conductor 1.
    CycNumber();
    CycNumber(long value);  // NOLINT(google-explicit-constructor): rational integers
    explicit CycNumber(const Rational& value);

    /// zeta_m^e; e is reduced mod m.
    static CycNumber root_of_unity(int m, long e);

    /// Builds the element sum_k coeffs[k] z^k of conductor m. `coeffs` may be
    /// any length; it is reduced modulo the cyclotomic polynomial.
    static CycNumber from_coefficients(int m, std::span<const Rational> coeffs);

    int conductor() const noexcept { return conductor_; }
    /// Power-basis coordinates, phi(m) of them.
    std::vector<Rational> coefficients() const;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// The same value written over conductor m; m must be a multiple of conductor().
    CycNumber embed(int m) const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& other);
    CycNumber& operator-=(const CycNumber& other);
    CycNumber& operator*=(const CycNumber& other);
    CycNumber& operator/=(const CycNumber& other);

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }

    friend bool operator==(const CycNumber& a, const CycNumber& b);

    /// Throws DivisionByZero for zero.
    CycNumber inverse() const;

    /// Integer power; negative exponents go through inverse().
    CycNumber pow(long k) const;

    /// Smallest k >= 1 with a^k = 1, searched up to 2 * conductor (every root
    /// of unity in Q(zeta_m) has order dividing lcm(2, m)). Throws on zero.
    std::optional<int> multiplicative_order() const;

    /// Total order on canonical forms (conductor-independent); used to sort
    /// multisets of field elements deterministically.
    friend std::strong_ordering compare(const CycNumber& a, const CycNumber& b);

    /// Renders the element as a polynomial in `symbol` over its own conductor,
    /// highest power first, e.g. "-z^3 + 1/2*z - 1". Zero renders as "0".
    std::string to_string(std::string_view symbol = "z") const;

    struct Big;
    friend struct CycAccess;

private:
    CycNumber times_root(int root) const;

    int conductor_ = 1;
    std::vector<std::int64_t> num_{0};
    std::int64_t den_ = 1;
    std::shared_ptr<const Big> big_;  // set instead of num_/den_ when they do not fit
    // If >= 0 the value is z^root (root < m) or -z^(root - m); -1 when unknown.
    int root_ = -1;
};

/// Both operands re-expressed over lcm of their conductors.
std::pair<CycNumber, CycNumber> common_conductor(const CycNumber& a, const CycNumber& b);

}  // namespace qhopf
