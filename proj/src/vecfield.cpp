#include "vflie/vecfield.hpp"

#include <sstream>

namespace vflie {

VecField::VecField(std::vector<Poly> coeffs) {
    if (coeffs.empty()) throw ArityMismatchError("vector field needs at least one coefficient");
    arity_ = coeffs[0].arity();
    field_ = coeffs[0].field_order();
    if (static_cast<int>(coeffs.size()) != arity_)
        throw ArityMismatchError("coefficient count must equal arity");
    for (const auto& p : coeffs)
        if (p.arity() != arity_ || p.field_order() != field_)
            throw ArityMismatchError("coefficients disagree in arity or field");
    coeffs_ = std::move(coeffs);
}

void VecField::set_coeff(int i, Poly p) {
    if (i < 0 || i >= arity_) throw DomainError("direction index out of range");
    if (p.arity() != arity_) throw ArityMismatchError("coefficient arity mismatch");
    coeffs_[i] = p.field_order() == field_ ? std::move(p) : p.promoted(field_);
}

bool VecField::is_zero() const {
    for (const auto& p : coeffs_)
        if (!p.is_zero()) return false;
    return true;
}

int VecField::degree() const {
    int d = -1;
    for (const auto& p : coeffs_) d = std::max(d, p.degree());
    return d;
}

VecField VecField::promoted(int field_order) const {
    VecField r(arity_, field_order);
    for (int i = 0; i < arity_; ++i) r.coeffs_[i] = coeffs_[i].promoted(field_order);
    return r;
}

VecField VecField::operator-() const {
    VecField r(arity_, field_);
    for (int i = 0; i < arity_; ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

VecField VecField::operator+(const VecField& o) const {
    if (arity_ != o.arity_) throw ArityMismatchError("vector field arity mismatch");
    if (field_ != o.field_) throw FieldMismatchError("vector field field mismatch");
    VecField r(arity_, field_);
    for (int i = 0; i < arity_; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

VecField VecField::operator-(const VecField& o) const { return *this + (-o); }

VecField VecField::operator*(const Scalar& c) const {
    VecField r(arity_, field_);
    for (int i = 0; i < arity_; ++i) r.coeffs_[i] = coeffs_[i] * c;
    return r;
}

bool VecField::operator==(const VecField& o) const {
    if (arity_ != o.arity_) return false;
    for (int i = 0; i < arity_; ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

std::string VecField::str() const {
    static const char* dirs[3] = {"dx", "dy", "dz"};
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < arity_; ++i) {
        const Poly& p = coeffs_[i];
        std::string dir = i < 3 ? dirs[i] : "d" + std::to_string(i);
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
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
            if (cstr != "1") out << cstr << "*";
            static const char* names[3] = {"x", "y", "z"};
            for (size_t v = 0; v < m.size(); ++v) {
                if (m[v] == 0) continue;
                out << (v < 3 ? std::string(names[v]) : "x" + std::to_string(v));
                if (m[v] > 1) out << "^" << m[v];
                out << "*";
            }
            out << dir;
        }
    }
    if (first) return "0";
    return out.str();
}

Poly apply(const VecField& X, const Poly& p) {
    if (X.arity() != p.arity()) throw ArityMismatchError("apply: arity mismatch");
    int field = std::max(X.field_order(), p.field_order());
    if (X.field_order() != p.field_order() &&
        std::min(X.field_order(), p.field_order()) != 1)
        throw FieldMismatchError("apply: field mismatch");
    Poly r(p.arity(), field);
    for (int i = 0; i < X.arity(); ++i)
        r += X.coeff(i).promoted(field) * p.derivative(i).promoted(field);
    return r;
}

VecField bracket(const VecField& X, const VecField& Y) {
    if (X.arity() != Y.arity()) throw ArityMismatchError("bracket: arity mismatch");
    if (X.field_order() != Y.field_order())
        throw FieldMismatchError("bracket: field mismatch");
    VecField Z(X.arity(), X.field_order());
    for (int i = 0; i < X.arity(); ++i)
        Z.set_coeff(i, apply(X, Y.coeff(i)) - apply(Y, X.coeff(i)));
    return Z;
}

Poly divergence(const VecField& X) {
    Poly r(X.arity(), X.field_order());
    for (int i = 0; i < X.arity(); ++i) r += X.coeff(i).derivative(i);
    return r;
}

std::map<Bidegree, VecField> bidegree_components(const VecField& X) {
    if (X.arity() != 2) throw ArityMismatchError("bidegree_components requires arity 2");
    std::map<Bidegree, VecField> out;
    for (int dir = 0; dir < 2; ++dir) {
        for (const auto& [m, c] : X.coeff(dir).terms()) {
            Bidegree bd = dir == 0 ? Bidegree{m[0] - 1, m[1]} : Bidegree{m[0], m[1] - 1};
            auto [it, inserted] = out.try_emplace(bd, VecField(2, X.field_order()));
            VecField& comp = it->second;
            Poly p = comp.coeff(dir);
            p.add_term(m, c);
            comp.set_coeff(dir, std::move(p));
        }
    }
    return out;
}

VecField gen_dplus(int n, int field_order) {
    if (n < 0) throw DomainError("gen_dplus: n must be >= 0");
    VecField X(2, field_order);
    X.set_coeff(0, Poly::monomial({0, n}, Scalar(1), field_order));
    return X;
}

VecField gen_dminus(int m, int field_order) {
    if (m < 0) throw DomainError("gen_dminus: m must be >= 0");
    VecField X(2, field_order);
    X.set_coeff(1, Poly::monomial({m, 0}, Scalar(1), field_order));
    return X;
}

VecField gen_dab(int a, int b, int field_order) {
    if (a < 0 || b < 0) throw DomainError("gen_dab: parameters must be >= 0");
    VecField X(2, field_order);
    X.set_coeff(0, Poly::monomial({a + 1, b}, Scalar(b + 1), field_order));
    X.set_coeff(1, Poly::monomial({a, b + 1}, Scalar(-(a + 1)), field_order));
    return X;
}

VecField GenDesc::realize(int field_order) const {
    switch (kind) {
        case Kind::Plus: return gen_dplus(n, field_order);
        case Kind::Minus: return gen_dminus(n, field_order);
        case Kind::Dab: return gen_dab(a, b, field_order);
    }
    throw DomainError("invalid descriptor");
}

Bidegree GenDesc::bidegree() const {
    switch (kind) {
        case Kind::Plus: return {-1, n};
        case Kind::Minus: return {n, -1};
        case Kind::Dab: return {a, b};
    }
    throw DomainError("invalid descriptor");
}

std::string GenDesc::str() const {
    switch (kind) {
        case Kind::Plus: return "d+_" + std::to_string(n);
        case Kind::Minus: return "d-_" + std::to_string(n);
        case Kind::Dab: return "d_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    }
    return "?";
}

VecField TableEntry::realize(int field_order) const {
    if (is_zero()) return VecField::zero(2, field_order);
    return gen->realize(field_order) * Scalar(coeff);
}

namespace {

void check_desc(const GenDesc& g) {
    if (g.kind == GenDesc::Kind::Dab) {
        if (g.a < 0 || g.b < 0) throw DomainError("descriptor: a, b must be >= 0");
    } else if (g.n < 0) {
        throw DomainError("descriptor: parameter must be >= 0");
    }
}

TableEntry negated(TableEntry e) {
    e.coeff = -e.coeff;
    return e;
}

} // namespace

TableEntry commutation_table(const GenDesc& lhs, const GenDesc& rhs) {
    using K = GenDesc::Kind;
    check_desc(lhs);
    check_desc(rhs);
    // [d+_k, d+_l] = [d-_k, d-_l] = 0
    if (lhs.kind == rhs.kind && lhs.kind != K::Dab)
        return {Rational(0), std::nullopt};
    if (lhs.kind == K::Plus && rhs.kind == K::Minus) {
        int n = lhs.n, m = rhs.n;
        if (n == 0 && m == 0) return {Rational(0), std::nullopt};
        // [d+_0, d-_m] = m d-_{m-1}
        if (n == 0) return {Rational(m), GenDesc::minus(m - 1)};
        // [d-_0, d+_n] = n d+_{n-1}, flipped
        if (m == 0) return {Rational(-n), GenDesc::plus(n - 1)};
        // [d+_n, d-_m] = -d_{m-1, n-1}
        return {Rational(-1), GenDesc::dab(m - 1, n - 1)};
    }
    if (lhs.kind == K::Minus && rhs.kind == K::Plus)
        return negated(commutation_table(rhs, lhs));
    if (lhs.kind == K::Dab && rhs.kind == K::Dab) {
        // det((a'+1, a+1), (b'+1, b+1)) d_{a+a', b+b'}
        long det = static_cast<long>(rhs.a + 1) * (lhs.b + 1) -
                   static_cast<long>(lhs.a + 1) * (rhs.b + 1);
        if (det == 0) return {Rational(0), std::nullopt};
        return {Rational(det), GenDesc::dab(lhs.a + rhs.a, lhs.b + rhs.b)};
    }
    if (lhs.kind == K::Plus && rhs.kind == K::Dab) {
        int n = lhs.n, a = rhs.a, b = rhs.b;
        if (a == 0) return {Rational(n + b + 1), GenDesc::plus(n + b)};
        return {Rational(a + 1), GenDesc::dab(a - 1, n + b)};
    }
    if (lhs.kind == K::Minus && rhs.kind == K::Dab) {
        int m = lhs.n, a = rhs.a, b = rhs.b;
        if (b == 0) return {Rational(-(m + a + 1)), GenDesc::minus(m + a)};
        return {Rational(b + 1), GenDesc::dab(m + a, b - 1)};
    }
    // Dab on the left against a root generator: antisymmetry.
    return negated(commutation_table(rhs, lhs));
}

PolyAutomorphism::PolyAutomorphism(std::vector<Poly> forward, std::vector<Poly> inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {
    if (forward_.empty() || forward_.size() != inverse_.size())
        throw ArityMismatchError("automorphism: forward/inverse size mismatch");
    arity_ = forward_[0].arity();
    field_ = forward_[0].field_order();
    for (const auto& p : forward_)
        if (p.arity() != arity_ || p.field_order() != field_)
            throw ArityMismatchError("automorphism: inconsistent forward coordinates");
    for (const auto& p : inverse_)
        if (p.arity() != arity_ || p.field_order() != field_)
            throw ArityMismatchError("automorphism: inconsistent inverse coordinates");
    for (int i = 0; i < arity_; ++i) {
        Poly xi = Poly::variable(arity_, i, field_);
        if (forward_[i].substituted(inverse_) != xi ||
            inverse_[i].substituted(forward_) != xi)
            throw DomainError("automorphism: inverse check failed");
    }
}

PolyAutomorphism PolyAutomorphism::composed(const PolyAutomorphism& b) const {
    if (arity_ != b.arity_ || field_ != b.field_)
        throw ArityMismatchError("compose: arity or field mismatch");
    std::vector<Poly> fwd, inv;
    for (int i = 0; i < arity_; ++i) {
        // (a o b)(pt) = a(b(pt)): coordinate i is A_i with b's coordinates plugged in.
        fwd.push_back(forward_[i].substituted(b.forward_));
        inv.push_back(b.inverse_[i].substituted(inverse_));
    }
    return PolyAutomorphism(std::move(fwd), std::move(inv));
}

PolyAutomorphism PolyAutomorphism::twist(int field_order) {
    std::vector<Poly> sw = {Poly::variable(2, 1, field_order), Poly::variable(2, 0, field_order)};
    return PolyAutomorphism(sw, sw);
}

PolyAutomorphism PolyAutomorphism::torus_generator(int d, int e) {
    Scalar z = Scalar::zeta(d);
    Scalar ze(1), zinv = z.inverse(), zeinv(1);
    for (int i = 0; i < e; ++i) ze *= z;
    for (int i = 0; i < e; ++i) zeinv *= zinv;
    std::vector<Poly> fwd = {Poly::variable(2, 0, d) * ze, Poly::variable(2, 1, d) * z};
    std::vector<Poly> inv = {Poly::variable(2, 0, d) * zeinv, Poly::variable(2, 1, d) * zinv};
    return PolyAutomorphism(std::move(fwd), std::move(inv));
}

VecField pushforward(const PolyAutomorphism& phi, const VecField& X) {
    if (phi.arity() != X.arity()) throw ArityMismatchError("pushforward: arity mismatch");
    int field = std::max(phi.field_order(), X.field_order());
    if (phi.field_order() != X.field_order() &&
        std::min(phi.field_order(), X.field_order()) != 1)
        throw FieldMismatchError("pushforward: field mismatch");
    VecField Y(X.arity(), field);
    for (int i = 0; i < X.arity(); ++i) {
        Poly xi = apply(X.promoted(field), phi.forward()[i].promoted(field));
        std::vector<Poly> inv;
        for (const auto& p : phi.inverse()) inv.push_back(p.promoted(field));
        Y.set_coeff(i, xi.substituted(inv));
    }
    return Y;
}

ProbeResult local_finiteness_probe(const VecField& X, const std::vector<Poly>& seeds,
                                   int degree_bound, int iteration_bound) {
    if (seeds.empty()) throw DomainError("local_finiteness_probe: seeds must be nonempty");
    // Row-reduced polynomial span, keyed by grlex-leading monomial.
    std::vector<Poly> rows; // each normalized with leading coeff 1
    auto reduce = [&](Poly p) {
        bool changed = true;
        while (changed && !p.is_zero()) {
            changed = false;
            for (const auto& r : rows) {
                Scalar c = p.coeff(r.terms().rbegin()->first);
                if (c.is_zero()) continue;
                p -= r * c;
                changed = true;
                if (p.is_zero()) break;
            }
        }
        return p;
    };
    std::vector<Poly> queue;
    auto insert = [&](const Poly& p) -> bool {
        Poly red = reduce(p);
        if (red.is_zero()) return false;
        red = red * red.leading_coeff().inverse();
        rows.push_back(red);
        queue.push_back(red);
        return true;
    };
    for (const auto& s : seeds) insert(s);
    int iterations = 0;
    while (!queue.empty()) {
        Poly p = queue.back();
        queue.pop_back();
        if (iterations >= iteration_bound)
            return {ProbeVerdict::Exceeded, static_cast<int>(rows.size()), iterations};
        Poly img = apply(X, p);
        ++iterations;
        if (img.degree() > degree_bound)
            return {ProbeVerdict::Exceeded, static_cast<int>(rows.size()), iterations};
        insert(img);
    }
    return {ProbeVerdict::Bounded, static_cast<int>(rows.size()), iterations};
}

} // namespace vflie
