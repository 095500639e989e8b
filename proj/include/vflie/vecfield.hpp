#pragma once

#include "vflie/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vflie {

// A derivation sum_i f_i d/dx_i of k[x_1..x_n], one coefficient
// polynomial per variable.
class VecField {
public:
    VecField() : arity_(1), field_(1), coeffs_(1, Poly(1, 1)) {}
    VecField(int arity, int field_order)
        : arity_(arity), field_(field_order), coeffs_(arity, Poly(arity, field_order)) {}
    explicit VecField(std::vector<Poly> coeffs);

    static VecField zero(int arity, int field_order = 1) { return VecField(arity, field_order); }

    int arity() const { return arity_; }
    int field_order() const { return field_; }
    const Poly& coeff(int i) const { return coeffs_[i]; }
    void set_coeff(int i, Poly p);
    bool is_zero() const;
    int degree() const; // max total degree of the coefficient polys; -1 if zero

    VecField promoted(int field_order) const;

    VecField operator-() const;
    VecField operator+(const VecField& o) const;
    VecField operator-(const VecField& o) const;
    VecField operator*(const Scalar& c) const;
    VecField& operator+=(const VecField& o) { return *this = *this + o; }
    VecField& operator-=(const VecField& o) { return *this = *this - o; }

    bool operator==(const VecField& o) const;
    bool operator!=(const VecField& o) const { return !(*this == o); }

    std::string str() const; // canonical print, e.g. "y^2*dx - 2*x*y*dy"

private:
    int arity_;
    int field_;
    std::vector<Poly> coeffs_;
};

inline VecField operator*(const Scalar& c, const VecField& X) { return X * c; }

// Derivation action: sum_i f_i dp/dx_i.
Poly apply(const VecField& X, const Poly& p);

// Commutator of derivations.
VecField bracket(const VecField& X, const VecField& Y);

Poly divergence(const VecField& X);

// Bidegree of a homogeneous field on A^2: bideg(x^i y^j d/dx) = (i-1, j),
// bideg(x^i y^j d/dy) = (i, j-1). Components a, b >= -1, not both -1.
struct Bidegree {
    int a = 0;
    int b = 0;
    auto operator<=>(const Bidegree&) const = default;
};

// Decomposition of an arity-2 field into homogeneous bigraded parts.
std::map<Bidegree, VecField> bidegree_components(const VecField& X);

// Homogeneous generator families on A^2.
VecField gen_dplus(int n, int field_order = 1);  // y^n d/dx
VecField gen_dminus(int m, int field_order = 1); // x^m d/dy
VecField gen_dab(int a, int b, int field_order = 1); // x^a y^b ((b+1) x d/dx - (a+1) y d/dy)

// Formal generator descriptor for the commutation table.
struct GenDesc {
    enum class Kind { Plus, Minus, Dab };
    Kind kind;
    int n = 0;        // Plus: y^n d/dx; Minus: x^n d/dy
    int a = 0, b = 0; // Dab

    static GenDesc plus(int n) { return {Kind::Plus, n, 0, 0}; }
    static GenDesc minus(int m) { return {Kind::Minus, m, 0, 0}; }
    static GenDesc dab(int a, int b) { return {Kind::Dab, 0, a, b}; }

    VecField realize(int field_order = 1) const;
    Bidegree bidegree() const;
    std::string str() const;
};

// Closed-form bracket of two generator descriptors: coeff * gen, or zero
// when `gen` is empty or coeff = 0. Total over all descriptor pairs.
struct TableEntry {
    Rational coeff;
    std::optional<GenDesc> gen;

    bool is_zero() const { return !gen.has_value() || coeff == 0; }
    VecField realize(int arity_field_order = 1) const;
};

TableEntry commutation_table(const GenDesc& lhs, const GenDesc& rhs);

// Polynomial automorphism with an explicitly stored inverse, validated at
// construction (substitute(forward, inverse) must give the coordinates and
// vice versa).
class PolyAutomorphism {
public:
    PolyAutomorphism(std::vector<Poly> forward, std::vector<Poly> inverse);

    int arity() const { return arity_; }
    int field_order() const { return field_; }
    const std::vector<Poly>& forward() const { return forward_; }
    const std::vector<Poly>& inverse() const { return inverse_; }

    // Composition: (a.composed(b)) acts as a after b.
    PolyAutomorphism composed(const PolyAutomorphism& b) const;

    static PolyAutomorphism twist(int field_order = 1); // (x,y) -> (y,x)
    // The G_{d,e} generator (x,y) -> (zeta^e x, zeta y) over Q(zeta_d).
    static PolyAutomorphism torus_generator(int d, int e);

private:
    int arity_;
    int field_;
    std::vector<Poly> forward_;
    std::vector<Poly> inverse_;
};

// Ad-action: Y = phi_* X with apply(Y, p) = apply(X, p o phi) o phi^{-1}.
VecField pushforward(const PolyAutomorphism& phi, const VecField& X);

enum class ProbeVerdict { Bounded, Exceeded };

struct ProbeResult {
    ProbeVerdict verdict;
    int dimension;  // dimension of the span reached so far
    int iterations; // number of derivation applications performed
};

// Semi-decision for local finiteness: spans iterated applications of X on
// the seeds. BOUNDED if the span stabilizes within the bounds, EXCEEDED if
// degree growth passes degree_bound or the iteration budget runs out.
ProbeResult local_finiteness_probe(const VecField& X, const std::vector<Poly>& seeds,
                                   int degree_bound, int iteration_bound);

} // namespace vflie
