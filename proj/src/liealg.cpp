#include "vflie/liealg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vflie {

namespace {

struct Key {
    Monomial m;
    int dir;
};

bool key_less(const Key& x, const Key& y) {
    GrlexLess g;
    if (g(x.m, y.m)) return true;
    if (g(y.m, x.m)) return false;
    return x.dir < y.dir;
}

// Grlex-then-direction maximal nonzero coordinate.
std::optional<Key> leading_key(const VecField& v) {
    std::optional<Key> best;
    for (int dir = 0; dir < v.arity(); ++dir) {
        const auto& t = v.coeff(dir).terms();
        if (t.empty()) continue;
        Key k{t.rbegin()->first, dir};
        if (!best || key_less(*best, k)) best = k;
    }
    return best;
}

Scalar coord(const VecField& v, const Key& k) {
    return v.coeff(k.dir).coeff(k.m);
}

} // namespace

SpanBasis::SpanBasis(const std::vector<VecField>& elements)
    : arity_(elements.empty() ? 1 : elements[0].arity()),
      field_(elements.empty() ? 1 : elements[0].field_order()) {
    for (const auto& e : elements) insert(e);
}

VecField SpanBasis::reduce_(VecField v) const {
    bool changed = true;
    while (changed && !v.is_zero()) {
        changed = false;
        for (const auto& r : rows_) {
            Key lead = *leading_key(r);
            Scalar c = coord(v, lead);
            if (c.is_zero()) continue;
            v -= r * c;
            changed = true;
            if (v.is_zero()) break;
        }
    }
    return v;
}

bool SpanBasis::insert(const VecField& v) {
    if (v.arity() != arity_)
        throw ArityMismatchError("span: arity mismatch");
    if (v.field_order() != field_)
        throw FieldMismatchError("span: field mismatch");
    VecField red = reduce_(v);
    if (red.is_zero()) return false;
    Key lead = *leading_key(red);
    rows_.push_back(red * coord(red, lead).inverse());
    return true;
}

bool SpanBasis::contains(const VecField& v) const {
    if (v.arity() != arity_) return false;
    return reduce_(v).is_zero();
}

bool SpanBasis::same_span(const SpanBasis& o) const {
    if (dimension() != o.dimension()) return false;
    for (const auto& r : o.rows_)
        if (!contains(r)) return false;
    return true;
}

BracketSpanResult bracket_span(const SpanBasis& A, const SpanBasis& B, int degree_cap) {
    BracketSpanResult result{SpanBasis(A.arity(), A.field_order()), 0};
    for (const auto& a : A.elements()) {
        for (const auto& b : B.elements()) {
            VecField w = bracket(a, b);
            if (w.is_zero()) continue;
            if (w.degree() > degree_cap) {
                ++result.discards;
                continue;
            }
            result.span.insert(w);
        }
    }
    return result;
}

DerivedSeriesReport derived_series(const SpanBasis& generators, int degree_cap,
                                   int max_levels) {
    if (max_levels < 1) throw DomainError("derived_series: max_levels must be >= 1");
    DerivedSeriesReport report;
    report.truncation = degree_cap;
    report.discards = 0;
    report.verdict = SeriesVerdict::NotDecided;

    SpanBasis level = generators;
    report.level_dims.push_back(level.dimension());
    for (int k = 0; k < max_levels; ++k) {
        BracketSpanResult next = bracket_span(level, level, degree_cap);
        report.discards += next.discards;
        report.level_dims.push_back(next.span.dimension());
        if (next.span.dimension() == 0) {
            report.stabilized_at_zero = report.level_dims.size() - 1;
            report.verdict = SeriesVerdict::SolvableAtTruncation;
            return report;
        }
        if (next.span.same_span(level)) return report; // stationary, never zero
        level = std::move(next.span);
    }
    return report;
}

std::string DerivedSeriesReport::to_json() const {
    std::ostringstream out;
    out << "{\"truncation\":" << truncation << ",\"levels\":[";
    for (size_t i = 0; i < level_dims.size(); ++i) {
        if (i) out << ",";
        out << level_dims[i];
    }
    out << "],\"discards\":" << discards << ",\"verdict\":\""
        << (verdict == SeriesVerdict::SolvableAtTruncation ? "SOLVABLE_AT_TRUNCATION"
                                                           : "NOT_DECIDED")
        << "\"}";
    return out.str();
}

AlgTag alg_tag_from_string(const std::string& name) {
    static const std::map<std::string, AlgTag> table = {
        {"j2plus", AlgTag::J2Plus},       {"j2minus", AlgTag::J2Minus},
        {"j20plus", AlgTag::J20Plus},     {"j20minus", AlgTag::J20Minus},
        {"u2plus", AlgTag::U2Plus},       {"u2minus", AlgTag::U2Minus},
        {"u20plus", AlgTag::U20Plus},     {"u20minus", AlgTag::U20Minus},
        {"t2", AlgTag::T2},               {"t3", AlgTag::T3},
        {"u3plus", AlgTag::U3Plus},       {"j3plus", AlgTag::J3Plus},
        {"vec0", AlgTag::Vec0},           {"vecc", AlgTag::VecC},
        {"vec0_0", AlgTag::Vec00},        {"vecc_0", AlgTag::VecC0},
        {"u_de_plus", AlgTag::UDePlus},   {"u_de_minus", AlgTag::UDeMinus},
        {"n_de_invariants", AlgTag::NDeInvariants},
        {"g_de", AlgTag::GDe},            {"I_de", AlgTag::IDe},
        {"sl2_A1", AlgTag::Sl2A1},
    };
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown algebra tag: " + name);
    return it->second;
}

std::string alg_tag_name(AlgTag tag) {
    switch (tag) {
        case AlgTag::J2Plus: return "j2plus";
        case AlgTag::J2Minus: return "j2minus";
        case AlgTag::J20Plus: return "j20plus";
        case AlgTag::J20Minus: return "j20minus";
        case AlgTag::U2Plus: return "u2plus";
        case AlgTag::U2Minus: return "u2minus";
        case AlgTag::U20Plus: return "u20plus";
        case AlgTag::U20Minus: return "u20minus";
        case AlgTag::T2: return "t2";
        case AlgTag::T3: return "t3";
        case AlgTag::U3Plus: return "u3plus";
        case AlgTag::J3Plus: return "j3plus";
        case AlgTag::Vec0: return "vec0";
        case AlgTag::VecC: return "vecc";
        case AlgTag::Vec00: return "vec0_0";
        case AlgTag::VecC0: return "vecc_0";
        case AlgTag::UDePlus: return "u_de_plus";
        case AlgTag::UDeMinus: return "u_de_minus";
        case AlgTag::NDeInvariants: return "n_de_invariants";
        case AlgTag::GDe: return "g_de";
        case AlgTag::IDe: return "I_de";
        case AlgTag::Sl2A1: return "sl2_A1";
    }
    return "?";
}

bool alg_tag_needs_params(AlgTag tag) {
    switch (tag) {
        case AlgTag::UDePlus:
        case AlgTag::UDeMinus:
        case AlgTag::NDeInvariants:
        case AlgTag::GDe:
        case AlgTag::IDe:
            return true;
        default:
            return false;
    }
}

int alg_tag_arity(AlgTag tag) {
    switch (tag) {
        case AlgTag::T3:
        case AlgTag::U3Plus:
        case AlgTag::J3Plus:
            return 3;
        case AlgTag::Sl2A1:
            return 1;
        case AlgTag::Vec0:
        case AlgTag::VecC:
        case AlgTag::Vec00:
        case AlgTag::VecC0:
            return 0; // any
        default:
            return 2;
    }
}

namespace {

using TermPred = bool (*)(const Monomial&);

bool all_terms(const Poly& p, bool (*pred)(const Monomial&)) {
    for (const auto& [m, c] : p.terms())
        if (!pred(m)) return false;
    return true;
}

bool no_constant_term(const VecField& X) {
    for (int i = 0; i < X.arity(); ++i)
        if (!X.coeff(i).coeff(Monomial(X.arity(), 0)).is_zero()) return false;
    return true;
}

// Membership of the (d,e)-graded families via bidegree components.
bool member_de(const NamedAlgebra& alg, const VecField& X) {
    const LatticeParams& pr = *alg.params;
    bool ide = alg.tag == AlgTag::IDe;
    for (const auto& [bd, comp] : bidegree_components(X)) {
        if (bd.a == -1) {
            long n = bd.b;
            if ((n - pr.e) % pr.d != 0 || n < pr.e) return false;
            if (ide && n == pr.e) return false;
            continue;
        }
        if (bd.b == -1) {
            long m = bd.a;
            if ((m - pr.e_prime) % pr.d != 0 || m < pr.e_prime) return false;
            if (ide && m == pr.e_prime) return false;
            continue;
        }
        if (bd.a == 0 && bd.b == 0) {
            // Spanned by x d/dx and y d/dy; nothing else has this bidegree.
            if (ide) return false;
            continue;
        }
        // Must be a multiple of d_{a,b} with (a,b) in Lambda.
        if (!in_Lambda(pr, {bd.a, bd.b})) return false;
        Scalar top = comp.coeff(0).coeff({static_cast<int>(bd.a) + 1, static_cast<int>(bd.b)});
        VecField model = gen_dab(static_cast<int>(bd.a), static_cast<int>(bd.b),
                                 X.field_order()) * (top / Scalar(static_cast<int>(bd.b) + 1));
        if (comp != model) return false;
    }
    if (alg.tag == AlgTag::GDe && !divergence(X).is_zero()) return false;
    return true;
}

} // namespace

bool member(const NamedAlgebra& alg, const VecField& X) {
    int want = alg_tag_arity(alg.tag);
    if (want != 0 && X.arity() != want)
        throw ArityMismatchError("member: arity mismatch for " + alg_tag_name(alg.tag));
    if (alg_tag_needs_params(alg.tag) && !alg.params)
        throw DomainError("member: missing (d,e) parameters");

    switch (alg.tag) {
        case AlgTag::U2Plus:
            return all_terms(X.coeff(0), [](const Monomial& m) { return m[0] == 0; }) &&
                   X.coeff(1).degree() <= 0;
        case AlgTag::U20Plus:
            return all_terms(X.coeff(0),
                             [](const Monomial& m) { return m[0] == 0 && m[1] >= 1; }) &&
                   X.coeff(1).is_zero();
        case AlgTag::J2Plus:
            return all_terms(X.coeff(0),
                             [](const Monomial& m) {
                                 return m[0] == 0 || (m[0] == 1 && m[1] == 0);
                             }) &&
                   all_terms(X.coeff(1), [](const Monomial& m) { return m[0] == 0 && m[1] <= 1; });
        case AlgTag::J20Plus:
            return all_terms(X.coeff(0),
                             [](const Monomial& m) {
                                 return (m[0] == 0 && m[1] >= 1) || (m[0] == 1 && m[1] == 0);
                             }) &&
                   all_terms(X.coeff(1), [](const Monomial& m) { return m[0] == 0 && m[1] == 1; });
        case AlgTag::U2Minus:
            return all_terms(X.coeff(1), [](const Monomial& m) { return m[1] == 0; }) &&
                   X.coeff(0).degree() <= 0;
        case AlgTag::U20Minus:
            return all_terms(X.coeff(1),
                             [](const Monomial& m) { return m[1] == 0 && m[0] >= 1; }) &&
                   X.coeff(0).is_zero();
        case AlgTag::J2Minus:
            return all_terms(X.coeff(1),
                             [](const Monomial& m) {
                                 return m[1] == 0 || (m[1] == 1 && m[0] == 0);
                             }) &&
                   all_terms(X.coeff(0), [](const Monomial& m) { return m[1] == 0 && m[0] <= 1; });
        case AlgTag::J20Minus:
            return all_terms(X.coeff(1),
                             [](const Monomial& m) {
                                 return (m[1] == 0 && m[0] >= 1) || (m[1] == 1 && m[0] == 0);
                             }) &&
                   all_terms(X.coeff(0), [](const Monomial& m) { return m[1] == 0 && m[0] == 1; });
        case AlgTag::T2:
            return all_terms(X.coeff(0), [](const Monomial& m) { return m[0] == 1 && m[1] == 0; }) &&
                   all_terms(X.coeff(1), [](const Monomial& m) { return m[0] == 0 && m[1] == 1; });
        case AlgTag::T3:
            return all_terms(X.coeff(0),
                             [](const Monomial& m) { return m[0] == 1 && m[1] == 0 && m[2] == 0; }) &&
                   all_terms(X.coeff(1),
                             [](const Monomial& m) { return m[0] == 0 && m[1] == 1 && m[2] == 0; }) &&
                   all_terms(X.coeff(2),
                             [](const Monomial& m) { return m[0] == 0 && m[1] == 0 && m[2] == 1; });
        case AlgTag::U3Plus:
            return all_terms(X.coeff(0), [](const Monomial& m) { return m[0] == 0; }) &&
                   all_terms(X.coeff(1), [](const Monomial& m) { return m[0] == 0 && m[1] == 0; }) &&
                   X.coeff(2).degree() <= 0;
        case AlgTag::J3Plus:
            return all_terms(X.coeff(0),
                             [](const Monomial& m) {
                                 return m[0] == 0 || (m[0] == 1 && m[1] == 0 && m[2] == 0);
                             }) &&
                   all_terms(X.coeff(1),
                             [](const Monomial& m) {
                                 return (m[0] == 0 && m[1] == 0) ||
                                        (m[0] == 0 && m[1] == 1 && m[2] == 0);
                             }) &&
                   all_terms(X.coeff(2),
                             [](const Monomial& m) {
                                 return (m[0] == 0 && m[1] == 0 && m[2] <= 1);
                             });
        case AlgTag::Vec0:
            return divergence(X).is_zero();
        case AlgTag::VecC:
            return divergence(X).degree() <= 0;
        case AlgTag::Vec00:
            return divergence(X).is_zero() && no_constant_term(X);
        case AlgTag::VecC0:
            return divergence(X).degree() <= 0 && no_constant_term(X);
        case AlgTag::UDePlus: {
            const LatticeParams& pr = *alg.params;
            return X.coeff(1).is_zero() &&
                   [&] {
                       for (const auto& [m, c] : X.coeff(0).terms())
                           if (m[0] != 0 || m[1] < pr.e || (m[1] - pr.e) % pr.d != 0)
                               return false;
                       return true;
                   }();
        }
        case AlgTag::UDeMinus: {
            const LatticeParams& pr = *alg.params;
            return X.coeff(0).is_zero() &&
                   [&] {
                       for (const auto& [m, c] : X.coeff(1).terms())
                           if (m[1] != 0 || m[0] < pr.e_prime || (m[0] - pr.e_prime) % pr.d != 0)
                               return false;
                       return true;
                   }();
        }
        case AlgTag::NDeInvariants:
        case AlgTag::GDe:
        case AlgTag::IDe:
            return member_de(alg, X);
        case AlgTag::Sl2A1:
            return all_terms(X.coeff(0), [](const Monomial& m) { return m[0] <= 2; });
    }
    throw DomainError("member: unknown tag");
}

std::vector<VecField> truncated_basis(const NamedAlgebra& alg, int degree_cap) {
    if (alg_tag_needs_params(alg.tag) && !alg.params)
        throw DomainError("truncated_basis: missing (d,e) parameters");
    std::vector<VecField> out;
    auto xdx = [] {
        VecField v(2, 1);
        v.set_coeff(0, Poly::monomial({1, 0}, Scalar(1)));
        return v;
    };
    auto ydy = [] {
        VecField v(2, 1);
        v.set_coeff(1, Poly::monomial({0, 1}, Scalar(1)));
        return v;
    };
    auto dab_family = [&](bool require_lambda) {
        // Bidegrees (a,b) >= 0 with coefficient degree a+b+1 <= cap,
        // ordered by total degree then a.
        for (int s = 1; s + 1 <= degree_cap; ++s) {
            for (int a = 0; a <= s; ++a) {
                int b = s - a;
                if (require_lambda && !in_Lambda(*alg.params, {a, b})) continue;
                out.push_back(gen_dab(a, b));
            }
        }
    };

    switch (alg.tag) {
        case AlgTag::T2:
            out = {xdx(), ydy()};
            break;
        case AlgTag::T3:
            for (int i = 0; i < 3; ++i) {
                VecField v(3, 1);
                v.set_coeff(i, Poly::variable(3, i));
                out.push_back(v);
            }
            break;
        case AlgTag::Sl2A1: {
            VecField e(1, 1), f(1, 1), h(1, 1);
            e.set_coeff(0, Poly::monomial({2}, Scalar(1)));
            f.set_coeff(0, Poly::constant(1, Scalar(-1)));
            h.set_coeff(0, Poly::monomial({1}, Scalar(2)));
            out = {e, f, h};
            break;
        }
        case AlgTag::U2Plus:
            for (int k = 0; k <= degree_cap; ++k) out.push_back(gen_dplus(k));
            {
                VecField v(2, 1);
                v.set_coeff(1, Poly::constant(2, Scalar(1)));
                out.push_back(v);
            }
            break;
        case AlgTag::U20Plus:
            for (int k = 1; k <= degree_cap; ++k) out.push_back(gen_dplus(k));
            break;
        case AlgTag::U2Minus:
            for (int k = 0; k <= degree_cap; ++k) out.push_back(gen_dminus(k));
            {
                VecField v(2, 1);
                v.set_coeff(0, Poly::constant(2, Scalar(1)));
                out.push_back(v);
            }
            break;
        case AlgTag::U20Minus:
            for (int k = 1; k <= degree_cap; ++k) out.push_back(gen_dminus(k));
            break;
        case AlgTag::J2Plus:
            out = truncated_basis({AlgTag::U2Plus, {}}, degree_cap);
            out.insert(out.begin(), {xdx(), ydy()});
            break;
        case AlgTag::J20Plus:
            out = truncated_basis({AlgTag::U20Plus, {}}, degree_cap);
            out.insert(out.begin(), {xdx(), ydy()});
            break;
        case AlgTag::J2Minus:
            out = truncated_basis({AlgTag::U2Minus, {}}, degree_cap);
            out.insert(out.begin(), {xdx(), ydy()});
            break;
        case AlgTag::J20Minus:
            out = truncated_basis({AlgTag::U20Minus, {}}, degree_cap);
            out.insert(out.begin(), {xdx(), ydy()});
            break;
        case AlgTag::U3Plus: {
            for (int s = 0; s <= degree_cap; ++s)
                for (int i = s; i >= 0; --i) {
                    VecField v(3, 1);
                    v.set_coeff(0, Poly::monomial({0, i, s - i}, Scalar(1)));
                    out.push_back(v);
                }
            for (int j = 0; j <= degree_cap; ++j) {
                VecField v(3, 1);
                v.set_coeff(1, Poly::monomial({0, 0, j}, Scalar(1)));
                out.push_back(v);
            }
            VecField dz(3, 1);
            dz.set_coeff(2, Poly::constant(3, Scalar(1)));
            out.push_back(dz);
            break;
        }
        case AlgTag::J3Plus:
            out = truncated_basis({AlgTag::T3, {}}, degree_cap);
            {
                auto u = truncated_basis({AlgTag::U3Plus, {}}, degree_cap);
                out.insert(out.end(), u.begin(), u.end());
            }
            break;
        case AlgTag::Vec0:
        case AlgTag::VecC:
        case AlgTag::Vec00:
        case AlgTag::VecC0: {
            bool at_zero = alg.tag == AlgTag::Vec00 || alg.tag == AlgTag::VecC0;
            for (int n = at_zero ? 1 : 0; n <= degree_cap; ++n) out.push_back(gen_dplus(n));
            for (int m = at_zero ? 1 : 0; m <= degree_cap; ++m) out.push_back(gen_dminus(m));
            out.push_back(gen_dab(0, 0));
            for (int s = 1; s + 1 <= degree_cap; ++s)
                for (int a = 0; a <= s; ++a) out.push_back(gen_dab(a, s - a));
            if (alg.tag == AlgTag::VecC || alg.tag == AlgTag::VecC0)
                out.push_back(xdx() + ydy()); // Euler field
            break;
        }
        case AlgTag::UDePlus: {
            const LatticeParams& pr = *alg.params;
            for (int n = pr.e; n <= degree_cap; n += pr.d) out.push_back(gen_dplus(n));
            break;
        }
        case AlgTag::UDeMinus: {
            const LatticeParams& pr = *alg.params;
            for (int m = pr.e_prime; m <= degree_cap; m += pr.d) out.push_back(gen_dminus(m));
            break;
        }
        case AlgTag::NDeInvariants: {
            const LatticeParams& pr = *alg.params;
            out = {xdx(), ydy()};
            for (int n = pr.e; n <= degree_cap; n += pr.d) out.push_back(gen_dplus(n));
            for (int m = pr.e_prime; m <= degree_cap; m += pr.d) out.push_back(gen_dminus(m));
            dab_family(true);
            break;
        }
        case AlgTag::GDe: {
            const LatticeParams& pr = *alg.params;
            out = {gen_dab(0, 0)};
            for (int n = pr.e; n <= degree_cap; n += pr.d) out.push_back(gen_dplus(n));
            for (int m = pr.e_prime; m <= degree_cap; m += pr.d) out.push_back(gen_dminus(m));
            dab_family(true);
            break;
        }
        case AlgTag::IDe: {
            const LatticeParams& pr = *alg.params;
            for (int n = pr.e + pr.d; n <= degree_cap; n += pr.d) out.push_back(gen_dplus(n));
            for (int m = pr.e_prime + pr.d; m <= degree_cap; m += pr.d)
                out.push_back(gen_dminus(m));
            dab_family(true);
            break;
        }
    }
    return out;
}

} // namespace vflie
