#pragma once

#include "vflie/error.hpp"
#include "vflie/rational.hpp"

#include <string>
#include <vector>

namespace vflie {

// Coefficients of the d-th cyclotomic polynomial, ascending by power.
// Computed by the recursion Phi_d = (t^d - 1) / prod_{k|d, k<d} Phi_k
// with exact polynomial division; results are cached.
const std::vector<Rational>& cyclotomic_coeffs(int d);

// Euler totient = deg Phi_d.
int euler_phi(int d);

// An exact element of Q or of a cyclotomic extension Q(zeta_d),
// represented as a residue in Q[t] / Phi_d(t). Order 1 means plain Q
// (Phi_1 = t - 1, so residues are constants). Values are immutable in
// spirit: all operations return fresh scalars.
class Scalar {
public:
    Scalar() : order_(1), c_(1) {}
    // mpq comparisons require canonical form, so normalize on entry.
    Scalar(const Rational& r) : order_(1), c_{r} { c_[0].canonicalize(); }
    Scalar(long n) : order_(1), c_{Rational(n)} {}
    Scalar(int n) : order_(1), c_{Rational(n)} {}

    // The image of t, a primitive d-th root of unity.
    static Scalar zeta(int d);
    // Residue from raw coefficients (length <= phi(d); reduced if longer).
    static Scalar from_coeffs(int d, std::vector<Rational> coeffs);

    int order() const { return order_; }
    bool is_zero() const;
    // True when the value lies in Q (order 1, or all higher coeffs vanish).
    bool is_rational_value() const;
    Rational rational_value() const; // requires is_rational_value()

    // Coefficient of z^k in the canonical residue.
    Rational coeff(int k) const;

    // Explicit embedding Q(zeta_order) -> Q(zeta_d). Only order 1 -> d and
    // d -> d are supported; anything else is a FieldMismatchError.
    Scalar promoted(int d) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // DivisionByZeroError on zero divisor
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "p/q" for rationals, otherwise a polynomial in z, ascending powers,
    // e.g. "1 - z^2". A value of Q(zeta_d) that happens to be rational
    // prints as a rational.
    std::string str() const;

private:
    int order_;
    std::vector<Rational> c_; // length euler_phi(order_), ascending powers

    void reduce_();
    static int common_order_(const Scalar& a, const Scalar& b);
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

} // namespace vflie
