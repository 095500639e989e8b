#include "vflie/scalar.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace vflie {

namespace {

// Dense univariate polynomials over Q, ascending coefficients.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of exact division a / b (asserts zero remainder for the
// cyclotomic recursion; remainder is returned for reuse in reduction).
UPoly divmod(UPoly a, const UPoly& b, UPoly* rem_out) {
    UPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
        if (a.size() < b.size()) break;
    }
    if (rem_out) *rem_out = std::move(a);
    return q;
}

} // namespace

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return r;
}

const std::vector<Rational>& cyclotomic_coeffs(int d) {
    if (d < 1) throw DomainError("cyclotomic order must be >= 1");
    static std::map<int, UPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (t^d - 1) / prod_{k | d, k < d} Phi_k, recursively.
    std::function<const UPoly&(int)> phi = [&](int n) -> const UPoly& {
        auto f = cache.find(n);
        if (f != cache.end()) return f->second;
        UPoly num(n + 1, Rational(0));
        num[0] = -1;
        num[n] = 1;
        for (int k = 1; k < n; ++k) {
            if (n % k != 0) continue;
            num = divmod(std::move(num), phi(k), nullptr);
        }
        return cache.emplace(n, std::move(num)).first->second;
    };
    return phi(d);
}

int euler_phi(int d) {
    return static_cast<int>(cyclotomic_coeffs(d).size()) - 1;
}

Scalar Scalar::zeta(int d) {
    if (d < 1) throw DomainError("zeta order must be >= 1");
    std::vector<Rational> c(euler_phi(d), Rational(0));
    if (c.size() > 1) {
        c[1] = 1;
        Scalar s;
        s.order_ = d;
        s.c_ = std::move(c);
        return s;
    }
    // phi(d) == 1: d = 1 (zeta = 1) or d = 2 (zeta = -1).
    Scalar s;
    s.order_ = d;
    s.c_ = {Rational(d == 1 ? 1 : -1)};
    return s;
}

Scalar Scalar::from_coeffs(int d, std::vector<Rational> coeffs) {
    Scalar s;
    s.order_ = d;
    s.c_ = std::move(coeffs);
    for (auto& c : s.c_) c.canonicalize();
    s.reduce_();
    return s;
}

void Scalar::reduce_() {
    const UPoly& mod = cyclotomic_coeffs(order_);
    size_t deg = mod.size() - 1;
    if (c_.size() > deg) {
        UPoly rem;
        divmod(c_, mod, &rem);
        c_ = std::move(rem);
    }
    c_.resize(deg, Rational(0));
}

bool Scalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_rational_value() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Scalar::rational_value() const {
    if (!is_rational_value())
        throw FieldMismatchError("scalar is not a rational value");
    return c_.empty() ? Rational(0) : c_[0];
}

Rational Scalar::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Rational(0);
    return c_[k];
}

Scalar Scalar::promoted(int d) const {
    if (order_ == d) return *this;
    if (order_ != 1)
        throw FieldMismatchError("cannot promote between distinct cyclotomic orders");
    Scalar s;
    s.order_ = d;
    s.c_ = c_;
    s.reduce_();
    return s;
}

int Scalar::common_order_(const Scalar& a, const Scalar& b) {
    if (a.order_ == b.order_) return a.order_;
    if (a.order_ == 1) return b.order_;
    if (b.order_ == 1) return a.order_;
    throw FieldMismatchError("mixed cyclotomic orders " + std::to_string(a.order_) +
                             " and " + std::to_string(b.order_));
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    for (auto& x : s.c_) x = -x;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    int d = common_order_(*this, o);
    Scalar a = promoted(d), b = o.promoted(d);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    int d = common_order_(*this, o);
    Scalar a = promoted(d), b = o.promoted(d);
    UPoly prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            prod[i + j] += a.c_[i] * b.c_[j];
    }
    Scalar s;
    s.order_ = d;
    s.c_ = std::move(prod);
    s.reduce_();
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    if (order_ == 1) {
        Scalar s;
        s.c_ = {Rational(1) / c_[0]};
        return s;
    }
    // Extended Euclid in Q[t] for gcd(a, Phi_d) = 1.
    UPoly r0 = cyclotomic_coeffs(order_), r1 = c_;
    trim(r1);
    UPoly s0 = {}, s1 = {Rational(1)}; // coefficients of `a` in the combination
    while (!r1.empty()) {
        UPoly rem;
        UPoly q = divmod(r0, r1, &rem);
        // (r0, r1) <- (r1, r0 - q r1); (s0, s1) <- (s1, s0 - q s1)
        UPoly qs(q.size() + (s1.empty() ? 0 : s1.size() - 1) + 1, Rational(0));
        if (!s1.empty())
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        trim(qs);
        UPoly snew = s0;
        if (snew.size() < qs.size()) snew.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) snew[i] -= qs[i];
        trim(snew);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    // r0 is a nonzero constant multiple of the gcd (a unit).
    if (r0.size() != 1)
        throw DivisionByZeroError("scalar is a zero divisor (not coprime to Phi_d)");
    Rational unit = r0[0];
    for (auto& x : s0) x /= unit;
    Scalar s;
    s.order_ = order_;
    s.c_ = std::move(s0);
    s.reduce_();
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    int d = common_order_(*this, o);
    Scalar a = promoted(d), b = o.promoted(d);
    return a.c_ == b.c_;
}

std::string Scalar::str() const {
    if (is_rational_value()) return rational_str(rational_value());
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rational a = c_[k];
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            out << rational_str(a);
        } else {
            if (a != 1) out << rational_str(a) << "*";
            out << "z";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

} // namespace vflie
