#pragma once

// Shared random-value generators for the test suites. All randomness is
// seeded deterministically per test site.

#include "vflie/poly.hpp"
#include "vflie/vecfield.hpp"

#include <random>

namespace vflie::testgen {

inline Rational random_rational(std::mt19937& rng, int num_bound = 9, int den_bound = 4) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
    for (;;) {
        Rational r = random_rational(rng);
        if (r != 0) return r;
    }
}

inline Poly random_poly(std::mt19937& rng, int arity, int max_degree, int terms = 4,
                        int field = 1) {
    Poly p(arity, field);
    std::uniform_int_distribution<int> deg(0, max_degree);
    for (int t = 0; t < terms; ++t) {
        Monomial m(arity, 0);
        int budget = deg(rng);
        for (int i = 0; i < arity && budget > 0; ++i) {
            std::uniform_int_distribution<int> part(0, budget);
            m[i] = part(rng);
            budget -= m[i];
        }
        p.add_term(m, Scalar(random_rational(rng)).promoted(field));
    }
    return p;
}

inline VecField random_vecfield(std::mt19937& rng, int arity, int max_degree,
                                int terms = 3, int field = 1) {
    VecField v(arity, field);
    for (int i = 0; i < arity; ++i)
        v.set_coeff(i, random_poly(rng, arity, max_degree, terms, field));
    return v;
}

} // namespace vflie::testgen
