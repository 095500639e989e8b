#pragma once

#include "vflie/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vflie {

// Exponent vector; length = arity of the ambient ring.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded lexicographic order (x > y > z). The map iterates ascending, so
// the leading term sits at rbegin().
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over Q or Q(zeta_d). The field order tag
// is part of the value; stored coefficients are nonzero and normalized to
// the polynomial's field.
class Poly {
public:
    Poly() : arity_(1), field_(1) {}
    Poly(int arity, int field_order) : arity_(arity), field_(field_order) {}

    static Poly zero(int arity, int field_order = 1) { return Poly(arity, field_order); }
    static Poly constant(int arity, const Scalar& c, int field_order = 1);
    static Poly variable(int arity, int index, int field_order = 1);
    static Poly monomial(Monomial m, const Scalar& c, int field_order = 1);

    int arity() const { return arity_; }
    int field_order() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // total degree; -1 for the zero polynomial

    const std::map<Monomial, Scalar, GrlexLess>& terms() const { return terms_; }
    Scalar coeff(const Monomial& m) const;
    Scalar leading_coeff() const; // grlex-leading; zero for the zero poly

    void add_term(const Monomial& m, const Scalar& c);

    Poly promoted(int field_order) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(int var_index) const;

    // Replaces variable i by images[i]; images share one arity and field.
    Poly substituted(const std::vector<Poly>& images) const;

    // Evaluation at a scalar point (univariate convenience).
    Scalar eval_at(const Scalar& alpha) const;

    std::string str() const; // canonical print, grlex-descending

private:
    int arity_;
    int field_;
    std::map<Monomial, Scalar, GrlexLess> terms_;

    void check_compatible_(const Poly& o) const;
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

// Largest k with (x - alpha)^k | f; nullopt encodes INFINITE (f = 0).
// Requires arity 1.
std::optional<int> vanishing_order(const Poly& f, const Scalar& alpha);

struct ScaledLinearPower {
    Scalar c;
    Scalar alpha;
    int k;
};

// Decides whether a nonzero univariate f equals c (x - alpha)^k over its
// own coefficient field. For k = 0 the witness alpha is 0 by convention.
std::optional<ScaledLinearPower> is_scaled_linear_power(const Poly& f);

// Phi_d as a univariate Poly over Q.
Poly cyclotomic_polynomial(int d);

} // namespace vflie
