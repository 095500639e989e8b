#include "vflie/poly.hpp"

#include <sstream>

namespace vflie {

Poly Poly::constant(int arity, const Scalar& c, int field_order) {
    Poly p(arity, field_order);
    p.add_term(Monomial(arity, 0), c);
    return p;
}

Poly Poly::variable(int arity, int index, int field_order) {
    if (index < 0 || index >= arity)
        throw DomainError("variable index out of range");
    Monomial m(arity, 0);
    m[index] = 1;
    return monomial(std::move(m), Scalar(1), field_order);
}

Poly Poly::monomial(Monomial m, const Scalar& c, int field_order) {
    Poly p(static_cast<int>(m.size()), field_order);
    p.add_term(m, c);
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Poly::leading_coeff() const {
    if (terms_.empty()) return Scalar(0);
    return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (static_cast<int>(m.size()) != arity_)
        throw ArityMismatchError("monomial arity mismatch");
    if (c.is_zero()) return;
    Scalar cc = c.promoted(field_);
    auto [it, inserted] = terms_.emplace(m, cc);
    if (!inserted) {
        it->second += cc;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_compatible_(const Poly& o) const {
    if (arity_ != o.arity_)
        throw ArityMismatchError("polynomial arity mismatch");
    if (field_ != o.field_)
        throw FieldMismatchError("polynomial field mismatch (promote explicitly)");
}

Poly Poly::promoted(int field_order) const {
    Poly p(arity_, field_order);
    for (const auto& [m, c] : terms_) p.add_term(m, c.promoted(field_order));
    return p;
}

Poly Poly::operator-() const {
    Poly p(arity_, field_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible_(o);
    Poly p(*this);
    for (const auto& [m, c] : o.terms_) p.add_term(m, c);
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_compatible_(o);
    Poly p(arity_, field_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(arity_);
            for (int i = 0; i < arity_; ++i) m[i] = ma[i] + mb[i];
            p.add_term(m, ca * cb);
        }
    }
    return p;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly p(arity_, field_);
    if (c.is_zero()) return p;
    Scalar cc = c.promoted(field_);
    for (const auto& [m, x] : terms_) p.add_term(m, x * cc);
    return p;
}

bool Poly::operator==(const Poly& o) const {
    if (arity_ != o.arity_) return false;
    if (field_ == o.field_) return terms_ == o.terms_;
    // Cross-field equality only through the Q embedding.
    int d = std::max(field_, o.field_);
    if (std::min(field_, o.field_) != 1) return false;
    return promoted(d).terms_ == o.promoted(d).terms_;
}

Poly Poly::derivative(int var_index) const {
    if (var_index < 0 || var_index >= arity_)
        throw DomainError("derivative index out of range");
    Poly p(arity_, field_);
    for (const auto& [m, c] : terms_) {
        if (m[var_index] == 0) continue;
        Monomial mm(m);
        mm[var_index] -= 1;
        p.add_term(mm, c * Scalar(m[var_index]));
    }
    return p;
}

Poly Poly::substituted(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != arity_)
        throw ArityMismatchError("substitute: wrong number of images");
    for (const auto& im : images) {
        if (im.arity() != images[0].arity() || im.field_order() != images[0].field_order())
            throw ArityMismatchError("substitute: images disagree in arity or field");
    }
    int out_arity = images.empty() ? arity_ : images[0].arity();
    int out_field = images.empty() ? field_ : images[0].field_order();
    if (out_field != field_ && field_ != 1 && out_field != 1)
        throw FieldMismatchError("substitute: field mismatch");
    out_field = std::max(out_field, field_);

    // Power cache per variable.
    std::vector<std::vector<Poly>> pows(arity_);
    for (int i = 0; i < arity_; ++i)
        pows[i].push_back(Poly::constant(out_arity, Scalar(1), out_field));

    Poly result(out_arity, out_field);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(out_arity, c.promoted(out_field), out_field);
        for (int i = 0; i < arity_; ++i) {
            while (static_cast<int>(pows[i].size()) <= m[i])
                pows[i].push_back(pows[i].back() * images[i].promoted(out_field));
            if (m[i] > 0) term *= pows[i][m[i]];
        }
        result += term;
    }
    return result;
}

Scalar Poly::eval_at(const Scalar& alpha) const {
    if (arity_ != 1) throw ArityMismatchError("eval_at requires arity 1");
    // Horner over the sparse terms.
    Scalar acc(0);
    int prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int e = it->first[0];
        if (prev >= 0)
            for (int k = 0; k < prev - e; ++k) acc *= alpha;
        acc += it->second;
        prev = e;
    }
    for (int k = 0; k < prev; ++k) acc *= alpha;
    if (prev < 0) return Scalar(0);
    return acc;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"x", "y", "z"};
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Scalar c = it->second;
        bool neg = false;
        std::string cstr;
        if (c.is_rational_value()) {
            Rational r = c.rational_value();
            if (r < 0) { neg = true; r = -r; }
            cstr = rational_str(r);
        } else {
            cstr = "(" + c.str() + ")";
        }
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = (cstr == "1");
        bool any_var = total_degree(m) > 0;
        if (!unit || !any_var) out << cstr;
        bool need_star = !unit || !any_var;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) out << "*";
            need_star = true;
            out << (i < 3 ? std::string(names[i]) : "x" + std::to_string(i));
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

std::optional<int> vanishing_order(const Poly& f, const Scalar& alpha) {
    if (f.arity() != 1) throw ArityMismatchError("vanishing_order requires arity 1");
    if (f.is_zero()) return std::nullopt;
    // Synthetic division by (x - alpha) while the value at alpha vanishes.
    int field = f.field_order();
    Poly cur = f;
    Poly lin = Poly::variable(1, 0, field) - Poly::constant(1, alpha.promoted(field), field);
    int k = 0;
    while (cur.eval_at(alpha.promoted(field)).is_zero()) {
        // Exact division: cur = lin * q.
        Poly q(1, field);
        Poly rem = cur;
        while (!rem.is_zero() && rem.degree() >= 1) {
            int dg = rem.degree();
            Scalar lead = rem.leading_coeff();
            Monomial m(1, dg - 1);
            q.add_term(m, lead);
            rem -= Poly::monomial(m, lead, field) * lin;
        }
        cur = q;
        ++k;
        if (cur.is_zero()) break;
    }
    return k;
}

std::optional<ScaledLinearPower> is_scaled_linear_power(const Poly& f) {
    if (f.arity() != 1) throw ArityMismatchError("is_scaled_linear_power requires arity 1");
    if (f.is_zero()) throw DomainError("is_scaled_linear_power: zero polynomial");
    int k = f.degree();
    Scalar c = f.leading_coeff();
    if (k == 0) return ScaledLinearPower{c, Scalar(0), 0};
    // alpha from the two leading coefficients: f = c x^k - c k alpha x^{k-1} + ...
    Scalar second = f.coeff(Monomial(1, k - 1));
    Scalar alpha = -(second / (c * Scalar(k)));
    int field = f.field_order();
    Poly lin = Poly::variable(1, 0, field) - Poly::constant(1, alpha.promoted(field), field);
    Poly pw = Poly::constant(1, c.promoted(field), field);
    for (int i = 0; i < k; ++i) pw *= lin;
    if (pw == f) return ScaledLinearPower{c, alpha, k};
    return std::nullopt;
}

Poly cyclotomic_polynomial(int d) {
    const auto& cs = cyclotomic_coeffs(d);
    Poly p(1, 1);
    for (size_t i = 0; i < cs.size(); ++i)
        p.add_term(Monomial(1, static_cast<int>(i)), Scalar(cs[i]));
    return p;
}

} // namespace vflie
