#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vflie/borel1.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

using namespace vflie;

namespace {

Poly upoly(std::initializer_list<Rational> ascending) {
    Poly p(1, 1);
    int k = 0;
    for (const Rational& c : ascending) p.add_term({k++}, Scalar(c));
    return p;
}

Poly family_member(const Rational& alpha, const Rational& lambda, const Rational& mu,
                   int k) {
    Poly lin = upoly({-alpha, 1});
    Poly acc = upoly({1});
    for (int i = 0; i < k; ++i) acc *= lin;
    return acc * Scalar(lambda) + lin * Scalar(mu);
}

} // namespace

TEST_CASE("special form: displayed examples") {
    SpecialForm cube = special_form(upoly({0, 0, 0, 1}));
    CHECK(cube.cls == SpecialClass::Special);
    CHECK(cube.alpha == Scalar(0));
    CHECK(cube.lambda == Scalar(1));
    CHECK(cube.mu == Scalar(0));
    CHECK(cube.k == 3);

    // 2(x-1)^3 + 5(x-1) = 2x^3 - 6x^2 + 11x - 7
    SpecialForm shifted = special_form(upoly({-7, 11, -6, 2}));
    CHECK(shifted.cls == SpecialClass::Special);
    CHECK(shifted.alpha == Scalar(1));
    CHECK(shifted.lambda == Scalar(2));
    CHECK(shifted.mu == Scalar(5));
    CHECK(shifted.k == 3);

    SpecialForm cubic = special_form(upoly({0, 0, 1, 1})); // x^3 + x^2
    CHECK(cubic.cls == SpecialClass::NonSpecial);

    SpecialForm quartic = special_form(upoly({0, 1, 0, 0, 1})); // x^4 + x
    CHECK(quartic.cls == SpecialClass::Special);
    CHECK(quartic.alpha == Scalar(0));
    CHECK(quartic.lambda == Scalar(1));
    CHECK(quartic.mu == Scalar(1));
    CHECK(quartic.k == 4);
}

TEST_CASE("special form: low degrees") {
    CHECK(special_form(upoly({3})).cls == SpecialClass::Special);
    CHECK(special_form(upoly({1, 2})).cls == SpecialClass::Special);
    CHECK(special_form(upoly({0, 0, 1})).cls == SpecialClass::Special); // x^2
    CHECK(special_form(upoly({-1, 0, 1})).cls == SpecialClass::Special); // (x-1)(x+1)
    CHECK(special_form(upoly({1, 0, 1})).cls == SpecialClass::SpecialOverClosure);
    CHECK(special_form(upoly({2, 0, 1})).cls == SpecialClass::SpecialOverClosure);
    CHECK_THROWS_AS(special_form(Poly::zero(1)), DomainError);
}

TEST_CASE("special witnesses reconstruct the input exactly") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), kk(2, 6);
    for (int iter = 0; iter < 120; ++iter) {
        Rational alpha(num(rng), den(rng)), lambda(num(rng), den(rng)),
            mu(num(rng), den(rng));
        int k = kk(rng);
        Poly f = family_member(alpha, lambda, mu, k);
        if (f.is_zero()) continue;
        SpecialForm form = special_form(f);
        CHECK(form.cls != SpecialClass::NonSpecial);
        if (form.cls == SpecialClass::Special) {
            Poly rebuilt = family_member(form.alpha.rational_value(),
                                         form.lambda.rational_value(),
                                         form.mu.rational_value(), form.k);
            CHECK(rebuilt == f);
        }
    }
}

TEST_CASE("classifier agrees with the brute-force family oracle") {
    // Grid family: alpha, lambda, mu over small rationals, k <= 6.
    std::vector<Rational> grid;
    for (int n = -2; n <= 2; ++n) {
        grid.push_back(Rational(n));
        grid.push_back(Rational(n, 2));
    }
    std::set<std::string> family;
    for (const Rational& alpha : grid)
        for (const Rational& lambda : grid)
            for (const Rational& mu : grid)
                for (int k = 0; k <= 6; ++k) {
                    if (k == 1) continue;
                    Poly f = family_member(alpha, lambda, mu, k);
                    if (!f.is_zero()) family.insert(f.str());
                }

    int mismatches = 0;
    for (const Rational& alpha : grid)
        for (const Rational& mu : grid)
            for (int k = 3; k <= 6; ++k) {
                Poly f = family_member(alpha, Rational(1), mu, k);
                if (special_form(f).cls == SpecialClass::NonSpecial) ++mismatches;
                // perturb away from the family
                Poly g = f + upoly({0, 0, 1}); // + x^2
                bool in_family = family.count(g.str()) > 0;
                bool says_special = special_form(g).cls != SpecialClass::NonSpecial;
                if (says_special != in_family) ++mismatches;
            }
    CHECK(mismatches == 0);
}

TEST_CASE("one-dimensional Borel witnesses") {
    CHECK(borel_1d_dim1(upoly({0, 0, 1, 1})));       // x^3 + x^2: non-special
    CHECK_FALSE(borel_1d_dim1(upoly({0, 0, 1})));    // x^2: special
    CHECK_FALSE(borel_1d_dim1(upoly({0, 1, 0, 0, 1}))); // x^4 + x: special
}

TEST_CASE("two-dimensional metabelian pairs") {
    auto [p0, q0] = borel_1d_dim2(Scalar(0), 0);
    CHECK(p0.str() == "dx");
    CHECK(q0.str() == "x*dx");

    auto [p3, q3] = borel_1d_dim2(Scalar(0), 3);
    CHECK(bracket(p3, q3) == p3 * Scalar(-2));

    auto [p2, q2] = borel_1d_dim2(Scalar(1), 2);
    VecField br = bracket(p2, q2);
    // closure: [p, q] = -(x-1)^2 dx lies in the span
    CHECK(br == p2 * Scalar(-1));

    CHECK_THROWS_AS(borel_1d_dim2(Scalar(0), 1), DomainError);
    CHECK_THROWS_AS(borel_1d_dim2(Scalar(0), -1), DomainError);
}

TEST_CASE("the rank-3 witness on the line") {
    Sl2Certificate cert = sl2_on_line();
    CHECK(cert.verified());
    CHECK(cert.E.str() == "x^2*dx");
    CHECK(cert.F.str() == "-dx");
    CHECK(cert.H.str() == "2*x*dx");
    CHECK(bracket(cert.H, cert.E) == cert.E * Scalar(2));
    CHECK(bracket(cert.E, cert.F) == cert.H);
}

TEST_CASE("order mechanism behind the two-step bracket") {
    std::mt19937 rng(52);
    std::uniform_int_distribution<int> lead(2, 5), extra(1, 3), coeff(1, 5);
    int tested = 0;
    while (tested < 60) {
        int vf = lead(rng), vg = lead(rng);
        if (vf == vg) continue;
        Poly f = upoly({}), g = upoly({});
        f.add_term({vf}, Scalar(coeff(rng)));
        f.add_term({vf + extra(rng)}, Scalar(coeff(rng)));
        g.add_term({vg}, Scalar(coeff(rng)));
        g.add_term({vg + extra(rng)}, Scalar(coeff(rng)));

        Poly g2 = f * g.derivative(0) - f.derivative(0) * g;      // [u1, u2]
        Poly g1 = f * g2.derivative(0) - f.derivative(0) * g2;    // [u1, [u1, u2]]
        int nu2 = *vanishing_order(g2, Scalar(0));
        int nu1 = *vanishing_order(g1, Scalar(0));
        CHECK(nu2 == vf + vg - 1);
        CHECK(nu1 == 2 * vf + vg - 2);
        CHECK(nu1 > nu2);
        CHECK(nu2 >= 3);
        ++tested;
    }
}
