#pragma once

#include "vflie/generate.hpp"
#include "vflie/poly.hpp"
#include "vflie/vecfield.hpp"

#include <utility>

namespace vflie {

enum class SpecialClass { Special, NonSpecial, SpecialOverClosure };

// Witness for f = lambda (x - alpha)^k + mu (x - alpha). When the class
// is SPECIAL the reconstruction equals the input exactly; for
// SPECIAL_OVER_CLOSURE (degree-2 inputs without a rational root) the
// witness fields are left at their defaults.
struct SpecialForm {
    SpecialClass cls;
    Scalar alpha;
    Scalar lambda;
    Scalar mu;
    int k = 0;
};

std::string special_class_name(SpecialClass cls);

// Structural classifier: degree <= 2 is always special (over the
// closure); degree k >= 3 is special iff f'' = c (x - alpha)^{k-2} for
// the unique rational candidate alpha and f(alpha) = 0.
SpecialForm special_form(const Poly& f);

// One-dimensional Borel subalgebras k p(x) d/dx: exactly the non-special p.
bool borel_1d_dim1(const Poly& p);

// Ordered basis ((x - alpha)^k d/dx, (x - alpha) d/dx), k >= 0, k != 1.
std::pair<VecField, VecField> borel_1d_dim2(const Scalar& alpha, int k);

// The rank-3 witness on the line: e = x^2 dx, f = -dx, h = 2x dx.
Sl2Certificate sl2_on_line();

} // namespace vflie
