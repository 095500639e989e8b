#include "vflie/borel1.hpp"

#include <optional>

namespace vflie {

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn) / Rational(sd);
}

Poly linear_power(const Scalar& alpha, int k, int field) {
    Poly lin = Poly::variable(1, 0, field) - Poly::constant(1, alpha.promoted(field), field);
    Poly acc = Poly::constant(1, Scalar(1).promoted(field), field);
    for (int i = 0; i < k; ++i) acc *= lin;
    return acc;
}

} // namespace

std::string special_class_name(SpecialClass cls) {
    switch (cls) {
        case SpecialClass::Special: return "SPECIAL";
        case SpecialClass::NonSpecial: return "NON_SPECIAL";
        case SpecialClass::SpecialOverClosure: return "SPECIAL_OVER_CLOSURE";
    }
    return "?";
}

SpecialForm special_form(const Poly& f) {
    if (f.arity() != 1) throw ArityMismatchError("special_form: univariate input required");
    if (f.is_zero()) throw DomainError("special_form: zero polynomial");
    int deg = f.degree();
    int field = f.field_order();

    if (deg <= 1) {
        // lambda + mu (x - 0); always a rational-data witness.
        return {SpecialClass::Special, Scalar(0), f.coeff({0}), f.coeff({1}), 0};
    }

    if (deg == 2) {
        // lambda (x - alpha)^2 + mu (x - alpha) forces f(alpha) = 0, so a
        // witness over the ground field needs a rational root.
        Scalar c2 = f.coeff({2}), c1 = f.coeff({1}), c0 = f.coeff({0});
        if (c2.is_rational_value() && c1.is_rational_value() && c0.is_rational_value()) {
            Rational A = c2.rational_value(), B = c1.rational_value(),
                     C = c0.rational_value();
            if (auto sq = rational_sqrt(B * B - 4 * A * C)) {
                Rational alpha = (-B + *sq) / (2 * A);
                return {SpecialClass::Special, Scalar(alpha), c2,
                        Scalar(B + 2 * A * alpha), 2};
            }
        }
        SpecialForm out;
        out.cls = SpecialClass::SpecialOverClosure;
        out.k = 2;
        return out;
    }

    SpecialForm reject{SpecialClass::NonSpecial, Scalar(0), Scalar(0), Scalar(0), deg};
    auto slp = is_scaled_linear_power(f.derivative(0).derivative(0));
    if (!slp) return reject;
    const Scalar& alpha = slp->alpha;
    if (!f.eval_at(alpha.promoted(field)).is_zero()) return reject;
    Scalar lambda = slp->c / Scalar(Rational(deg) * Rational(deg - 1));
    Scalar mu = f.derivative(0).eval_at(alpha.promoted(field));
    Poly rebuilt = linear_power(alpha, deg, field) * lambda +
                   linear_power(alpha, 1, field) * mu;
    if (rebuilt != f) return reject;
    return {SpecialClass::Special, alpha, lambda, mu, deg};
}

bool borel_1d_dim1(const Poly& p) {
    return special_form(p).cls == SpecialClass::NonSpecial;
}

std::pair<VecField, VecField> borel_1d_dim2(const Scalar& alpha, int k) {
    if (k < 0 || k == 1) throw DomainError("borel_1d_dim2: need k >= 0 and k != 1");
    int field = alpha.order();
    VecField lead(1, field), lin(1, field);
    lead.set_coeff(0, linear_power(alpha, k, field));
    lin.set_coeff(0, linear_power(alpha, 1, field));
    return {lead, lin};
}

Sl2Certificate sl2_on_line() {
    Sl2Certificate cert;
    VecField e(1, 1), f(1, 1), h(1, 1);
    e.set_coeff(0, Poly::monomial({2}, Scalar(1)));
    f.set_coeff(0, Poly::constant(1, Scalar(-1)));
    h.set_coeff(0, Poly::monomial({1}, Scalar(2)));
    cert.E = e;
    cert.F = f;
    cert.H = h;
    cert.word_E = BracketWord::leaf("e");
    cert.word_F = BracketWord::leaf("f");
    cert.word_H = BracketWord::leaf("h");
    cert.binding = {{"e", e}, {"f", f}, {"h", h}};
    cert.he_ok = bracket(cert.H, cert.E) == cert.E * Scalar(2);
    cert.hf_ok = bracket(cert.H, cert.F) == cert.F * Scalar(-2);
    cert.ef_ok = bracket(cert.E, cert.F) == cert.H;
    return cert;
}

} // namespace vflie
