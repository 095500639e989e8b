#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vflie/vecfield.hpp"

#include "helpers.hpp"

#include <numeric>
#include <random>

using namespace vflie;
using vflie::testgen::random_vecfield;

namespace {

VecField vf2(const Poly& fx, const Poly& fy) { return VecField({fx, fy}); }

Poly x2 = Poly::variable(2, 0);
Poly y2 = Poly::variable(2, 1);

} // namespace

TEST_CASE("derivation action") {
    VecField X = gen_dplus(1); // y dx
    CHECK(apply(X, x2 * x2) == Poly::monomial({1, 1}, Scalar(2)));

    VecField euler = vf2(x2, y2);
    CHECK(apply(euler, x2 * x2 * x2 * y2) == Poly::monomial({3, 1}, Scalar(4)));
    CHECK_THROWS_AS(apply(X, Poly::variable(3, 0)), ArityMismatchError);
}

TEST_CASE("iterates of d_{1,0} on x have unbounded degree") {
    VecField d10 = gen_dab(1, 0); // x^2 dx - 2xy dy
    Poly p = x2;
    int prev = p.degree();
    for (int i = 0; i < 6; ++i) {
        p = apply(d10, p);
        CHECK(p.degree() > prev);
        prev = p.degree();
    }
}

TEST_CASE("bracket basics") {
    CHECK(bracket(gen_dplus(1), gen_dminus(1)) == -gen_dab(0, 0));
    CHECK(bracket(gen_dplus(0), gen_dminus(2)) == gen_dminus(1) * Scalar(2));
    std::mt19937 rng(21);
    for (int iter = 0; iter < 10; ++iter) {
        VecField X = random_vecfield(rng, 2, 4);
        CHECK(bracket(X, X).is_zero());
    }
}

TEST_CASE("bracket is the commutator of derivations") {
    std::mt19937 rng(22);
    for (int iter = 0; iter < 15; ++iter) {
        VecField X = random_vecfield(rng, 2, 3), Y = random_vecfield(rng, 2, 3);
        Poly p = vflie::testgen::random_poly(rng, 2, 3);
        CHECK(apply(bracket(X, Y), p) == apply(X, apply(Y, p)) - apply(Y, apply(X, p)));
    }
}

TEST_CASE("Lie axioms on random triples") {
    std::mt19937 rng(23);
    for (int arity : {2, 3}) {
        for (int iter = 0; iter < 25; ++iter) {
            VecField X = random_vecfield(rng, arity, 4);
            VecField Y = random_vecfield(rng, arity, 4);
            VecField Z = random_vecfield(rng, arity, 4);
            CHECK(bracket(X, Y) == -bracket(Y, X));
            CHECK((bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) +
                   bracket(Z, bracket(X, Y)))
                      .is_zero());
        }
    }
}

TEST_CASE("divergence") {
    CHECK(divergence(gen_dab(1, 0)).is_zero());
    CHECK(divergence(vf2(x2, y2)) == Poly::constant(2, Scalar(2)));
    CHECK(divergence(gen_dplus(1)).is_zero());

    std::mt19937 rng(24);
    for (int iter = 0; iter < 20; ++iter) {
        VecField X = random_vecfield(rng, 2, 4), Y = random_vecfield(rng, 2, 4);
        CHECK(divergence(bracket(X, Y)) ==
              apply(X, divergence(Y)) - apply(Y, divergence(X)));
    }
}

TEST_CASE("bidegree components") {
    VecField X = gen_dplus(1) + gen_dminus(2);
    auto comps = bidegree_components(X);
    REQUIRE(comps.size() == 2);
    CHECK(comps.at({-1, 1}) == gen_dplus(1));
    CHECK(comps.at({2, -1}) == gen_dminus(2));

    CHECK(bidegree_components(VecField::zero(2)).empty());

    auto single = bidegree_components(gen_dab(1, 1));
    REQUIRE(single.size() == 1);
    CHECK(single.begin()->first == Bidegree{1, 1});

    std::mt19937 rng(25);
    for (int iter = 0; iter < 15; ++iter) {
        VecField Y = random_vecfield(rng, 2, 4);
        VecField sum(2, 1);
        for (const auto& [bd, comp] : bidegree_components(Y)) sum += comp;
        CHECK(sum == Y);
    }
}

TEST_CASE("generator families") {
    CHECK(gen_dab(0, 0) == vf2(x2, -y2));
    CHECK(gen_dab(1, 1).str() == "2*x^2*y*dx - 2*x*y^2*dy");
    CHECK(gen_dplus(0).str() == "dx");
    CHECK_THROWS_AS(gen_dplus(-1), DomainError);
    CHECK_THROWS_AS(gen_dab(-1, 0), DomainError);
}

TEST_CASE("commutation table spot values") {
    TableEntry r1 = commutation_table(GenDesc::plus(1), GenDesc::dab(0, 1));
    CHECK(r1.coeff == Rational(3));
    CHECK(r1.gen->kind == GenDesc::Kind::Plus);
    CHECK(r1.gen->n == 2);

    TableEntry r2 = commutation_table(GenDesc::dab(1, 0), GenDesc::dab(0, 1));
    CHECK(r2.coeff == Rational(-3));
    CHECK(r2.gen->a == 1);
    CHECK(r2.gen->b == 1);

    CHECK(commutation_table(GenDesc::plus(2), GenDesc::plus(5)).is_zero());
}

TEST_CASE("commutation table equals the generic bracket, parameters <= 5") {
    std::vector<GenDesc> descs;
    for (int n = 0; n <= 5; ++n) descs.push_back(GenDesc::plus(n));
    for (int m = 0; m <= 5; ++m) descs.push_back(GenDesc::minus(m));
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) descs.push_back(GenDesc::dab(a, b));
    for (const auto& l : descs)
        for (const auto& r : descs)
            CHECK(commutation_table(l, r).realize() == bracket(l.realize(), r.realize()));
}

TEST_CASE("bidegree additivity of the bracket") {
    std::vector<GenDesc> descs = {GenDesc::plus(2), GenDesc::minus(3), GenDesc::dab(1, 2),
                                  GenDesc::dab(0, 1), GenDesc::dab(2, 0)};
    for (const auto& l : descs)
        for (const auto& r : descs) {
            VecField w = bracket(l.realize(), r.realize());
            if (w.is_zero()) continue;
            auto comps = bidegree_components(w);
            REQUIRE(comps.size() == 1);
            Bidegree sum{l.bidegree().a + r.bidegree().a, l.bidegree().b + r.bidegree().b};
            CHECK(comps.begin()->first == sum);
        }
}

TEST_CASE("constant-divergence fields bracket into divergence zero") {
    for (int iter = 0; iter < 20; ++iter) {
        VecField X = gen_dab(iter % 3, (iter + 1) % 3) + vf2(x2, y2) * Scalar(iter % 5);
        VecField Y = gen_dplus(iter % 4) + vf2(x2, y2);
        CHECK(divergence(bracket(X, Y)).is_zero());
    }
}

TEST_CASE("automorphisms and pushforward") {
    PolyAutomorphism tw = PolyAutomorphism::twist();
    CHECK(pushforward(tw, gen_dplus(1)) == gen_dminus(1));

    // (zeta^3 x, zeta y) over Q(zeta_4): d3+ is fixed, d1+ is scaled by zeta^2
    PolyAutomorphism g = PolyAutomorphism::torus_generator(4, 3);
    CHECK(pushforward(g, gen_dplus(3, 4)) == gen_dplus(3, 4));
    Scalar z = Scalar::zeta(4);
    CHECK(pushforward(g, gen_dplus(1, 4)) == gen_dplus(1, 4) * (z * z));

    CHECK_THROWS_AS(PolyAutomorphism({x2 + y2, y2}, {x2, y2}), DomainError);
}

TEST_CASE("pushforward is a Lie morphism and functorial") {
    std::mt19937 rng(27);
    PolyAutomorphism tw = PolyAutomorphism::twist();
    PolyAutomorphism tri({x2 + y2 * y2, y2}, {x2 - y2 * y2, y2});
    for (int iter = 0; iter < 10; ++iter) {
        VecField X = random_vecfield(rng, 2, 3), Y = random_vecfield(rng, 2, 3);
        CHECK(pushforward(tri, bracket(X, Y)) ==
              bracket(pushforward(tri, X), pushforward(tri, Y)));
        CHECK(pushforward(tri.composed(tw), X) == pushforward(tri, pushforward(tw, X)));
    }
}

TEST_CASE("fixed-point criterion for the torus generator") {
    for (int d = 2; d <= 6; ++d)
        for (int e = 1; e < d; ++e) {
            if (std::gcd(d, e) != 1) continue;
            PolyAutomorphism g = PolyAutomorphism::torus_generator(d, e);
            for (int n = 0; n <= 5; ++n) {
                bool fixed = pushforward(g, gen_dplus(n, d)) == gen_dplus(n, d);
                bool congruent = ((n - e) % d + d) % d == 0; // bidegree (-1, n)
                CHECK(fixed == congruent);
            }
            for (int a = 0; a <= 3; ++a)
                for (int b = 0; b <= 3; ++b) {
                    if (a + b == 0) continue;
                    bool fixed = pushforward(g, gen_dab(a, b, d)) == gen_dab(a, b, d);
                    CHECK(fixed == ((a * e + b) % d == 0));
                }
        }
}

TEST_CASE("local finiteness probe") {
    ProbeResult r1 = local_finiteness_probe(gen_dab(1, 0), {Poly::variable(2, 0)}, 40, 40);
    CHECK(r1.verdict == ProbeVerdict::Exceeded);

    ProbeResult r2 =
        local_finiteness_probe(gen_dplus(1), {Poly::variable(2, 0), Poly::variable(2, 1)},
                               40, 40);
    CHECK(r2.verdict == ProbeVerdict::Bounded);

    ProbeResult r3 = local_finiteness_probe(VecField({x2, Poly::zero(2)}), {x2 * x2}, 40, 40);
    CHECK(r3.verdict == ProbeVerdict::Bounded);
}

TEST_CASE("canonical printing") {
    CHECK(bracket(gen_dplus(1), gen_dminus(1)).str() == "-x*dx + y*dy");
    CHECK(gen_dplus(2).str() == "y^2*dx");
    CHECK(VecField::zero(2).str() == "0");
}
