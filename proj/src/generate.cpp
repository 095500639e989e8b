#include "vflie/generate.hpp"

#include <set>
#include <sstream>

namespace vflie {

WordPtr BracketWord::leaf(std::string name) {
    auto w = std::make_shared<BracketWord>();
    w->kind = Kind::Leaf;
    w->name = std::move(name);
    return w;
}

WordPtr BracketWord::bracketed(WordPtr l, WordPtr r) {
    auto w = std::make_shared<BracketWord>();
    w->kind = Kind::Bracket;
    w->left = std::move(l);
    w->right = std::move(r);
    return w;
}

WordPtr BracketWord::scaled(Scalar s, WordPtr inner) {
    if (s.is_zero()) throw DomainError("BracketWord: zero scale factor");
    auto w = std::make_shared<BracketWord>();
    w->kind = Kind::Scale;
    w->s = std::move(s);
    w->inner = std::move(inner);
    return w;
}

std::string BracketWord::to_json() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Leaf:
            out << "{\"leaf\":\"" << name << "\"}";
            break;
        case Kind::Bracket:
            out << "{\"bracket\":[" << left->to_json() << "," << right->to_json() << "]}";
            break;
        case Kind::Scale:
            out << "{\"scale\":{\"s\":\"" << s.str() << "\",\"w\":" << inner->to_json()
                << "}}";
            break;
    }
    return out.str();
}

VecField eval_word(const WordPtr& w, const WordBinding& binding) {
    if (!w) throw DomainError("eval_word: null word");
    switch (w->kind) {
        case BracketWord::Kind::Leaf: {
            auto it = binding.find(w->name);
            if (it == binding.end())
                throw DomainError("eval_word: unbound name '" + w->name + "'");
            return it->second;
        }
        case BracketWord::Kind::Bracket:
            return bracket(eval_word(w->left, binding), eval_word(w->right, binding));
        case BracketWord::Kind::Scale:
            return eval_word(w->inner, binding) * w->s;
    }
    throw DomainError("eval_word: corrupt node");
}

namespace {

// Proportionality factor t with target = t * probe; both nonzero and
// proportional by construction in the callers (checked exactly).
Scalar match_factor(const VecField& target, const VecField& probe) {
    for (int i = 0; i < probe.arity(); ++i) {
        const auto& terms = probe.coeff(i).terms();
        if (terms.empty()) continue;
        const auto& [m, c] = *terms.begin();
        Scalar t = target.coeff(i).coeff(m) / c;
        if (target != probe * t) throw DomainError("match_factor: not proportional");
        return t;
    }
    throw DomainError("match_factor: zero probe");
}

} // namespace

DabWord build_dab_word(const LatticeParams& params, const LatticePoint& p) {
    LatticePath path = decompose_path(params, p); // validates the regime
    WordPtr dplus = BracketWord::leaf("Dplus_e");
    WordPtr dminus = BracketWord::leaf("Dminus_eprime");
    WordPtr word = BracketWord::bracketed(dplus, dminus); // -d_{e'-1, e-1}
    for (const PathStep& step : path.steps) {
        const WordPtr& g = step.dir == 'v' ? dminus : dplus;
        for (long i = 0; i < step.mult; ++i) word = BracketWord::bracketed(g, word);
    }
    WordBinding binding{{"Dplus_e", gen_dplus(params.e)},
                        {"Dminus_eprime", gen_dminus(params.e_prime)}};
    VecField value = eval_word(word, binding);
    VecField target = gen_dab(static_cast<int>(p.a), static_cast<int>(p.b));
    Scalar c = match_factor(target, value);
    if (c.is_zero()) throw DomainError("build_dab_word: vanished scalar");
    return {word, c};
}

Rational beta_factor(long b, long rho) {
    Rational prod = 1;
    for (long i = 2; i <= rho + 1; ++i) prod *= Rational(b + i);
    return 1 / prod;
}

std::pair<VecField, VecField> veronese_identity(int d, int k, int l) {
    if (d < 2 || k < 0 || l < 0)
        throw DomainError("veronese_identity: need d >= 2, k, l >= 0");
    VecField lhs = gen_dab(l * d, k * d);
    VecField rhs = bracket(gen_dminus(1 + l * d), gen_dplus(1 + k * d));
    return {lhs, rhs};
}

VeroneseChain veronese_ad_chain(int d, int l, int s) {
    if (d < 2 || l < 0) throw DomainError("veronese_ad_chain: need d >= 2, l >= 0");
    if (s < 0 || s > l * d)
        throw DomainError("veronese_ad_chain: chain length must satisfy 0 <= s <= l*d");
    VecField cur = gen_dab(l * d, 0);
    VecField step = gen_dplus(1);
    for (int i = 0; i < s; ++i) cur = bracket(step, cur);
    VecField target = gen_dab(l * d - s, s);
    Scalar alpha = match_factor(cur, target);
    if (!alpha.is_rational_value() || alpha.rational_value() <= 0)
        throw DomainError("veronese_ad_chain: chain scalar not a positive rational");
    return {cur, target, alpha.rational_value()};
}

Sl2Certificate detect_sl2(const VecField& v) {
    if (v.arity() != 2) throw ArityMismatchError("detect_sl2: ambient space is A^2");
    auto components = bidegree_components(v);
    if (components.size() != 1)
        throw DomainError("detect_sl2: input is not homogeneous");
    if (divergence(v).degree() > 0)
        throw DomainError("detect_sl2: divergence is not constant");
    if (member({AlgTag::J2Plus, {}}, v))
        throw DomainError("detect_sl2: input already lies in j2plus");

    Bidegree bd = components.begin()->first;
    VecField dx = gen_dplus(0, v.field_order());
    VecField dy = gen_dminus(0, v.field_order());
    VecField ydx = gen_dplus(1, v.field_order());
    WordBinding binding{{"v", v}, {"dx", dx}, {"dy", dy}, {"ydx", ydx}};

    Sl2Certificate cert;
    cert.binding = binding;

    if (bd.a == 0 && bd.b >= 1) {
        // (0,b) case: reduce to d_{0,1}, then the displayed triple
        // k dy + k(x dx - y dy) + k(2xy dx - y^2 dy).
        VecField cur = v;
        WordPtr w = BracketWord::leaf("v");
        for (int i = 0; i < bd.b - 1; ++i) {
            cur = bracket(dy, cur);
            w = BracketWord::bracketed(BracketWord::leaf("dy"), w);
        }
        VecField f_model = gen_dab(0, 1, v.field_order());
        Scalar t = match_factor(f_model, cur);
        cert.F = f_model;
        cert.word_F = BracketWord::scaled(t, w);
        cert.E = dy;
        cert.word_E = BracketWord::leaf("dy");
        cert.H = bracket(cert.E, cert.F);
        cert.word_H = BracketWord::bracketed(cert.word_E, cert.word_F);
    } else {
        // (a,-1) with a >= 1, directly or after the ad(dy) descent from
        // (a,b) with a >= 1, b >= 0: land on x dy.
        VecField cur = v;
        WordPtr w = BracketWord::leaf("v");
        if (bd.b >= 0) {
            if (bd.a < 1) throw DomainError("detect_sl2: unreachable bidegree");
            for (int i = 0; i <= bd.b; ++i) {
                cur = bracket(dy, cur);
                w = BracketWord::bracketed(BracketWord::leaf("dy"), w);
            }
        }
        for (int i = 1; i < bd.a; ++i) {
            cur = bracket(dx, cur);
            w = BracketWord::bracketed(BracketWord::leaf("dx"), w);
        }
        VecField e_model(2, v.field_order());
        e_model.set_coeff(1, Poly::variable(2, 0, v.field_order()));
        Scalar t = match_factor(e_model, cur);
        cert.E = e_model; // x dy
        cert.word_E = BracketWord::scaled(t, w);
        cert.F = ydx;
        cert.word_F = BracketWord::leaf("ydx");
        cert.H = bracket(cert.E, cert.F);
        cert.word_H = BracketWord::bracketed(cert.word_E, cert.word_F);
    }

    cert.he_ok = bracket(cert.H, cert.E) == cert.E * Scalar(2);
    cert.hf_ok = bracket(cert.H, cert.F) == cert.F * Scalar(-2);
    cert.ef_ok = bracket(cert.E, cert.F) == cert.H;
    return cert;
}

bool TriangularExtensionReport::all_pass() const {
    for (const auto& c : clauses)
        if (!c.pass) return false;
    return true;
}

namespace {

bool in_kyz_dx(const VecField& w) {
    if (!w.coeff(1).is_zero() || !w.coeff(2).is_zero()) return false;
    for (const auto& [m, c] : w.coeff(0).terms())
        if (m[0] != 0) return false;
    return true;
}

bool in_kz_dy(const VecField& w) {
    if (!w.coeff(0).is_zero() || !w.coeff(2).is_zero()) return false;
    for (const auto& [m, c] : w.coeff(1).terms())
        if (m[0] != 0 || m[1] != 0) return false;
    return true;
}

// W in the line k*M (zero counts as in-span).
bool in_line(const VecField& w, const VecField& m) {
    if (w.is_zero()) return true;
    for (int i = 0; i < w.arity(); ++i) {
        const auto& terms = m.coeff(i).terms();
        if (terms.empty()) continue;
        const auto& [mono, c] = *terms.begin();
        Scalar t = w.coeff(i).coeff(mono) / c;
        return w == m * t;
    }
    return false;
}

} // namespace

TriangularExtensionReport verify_triangular_extension(int degree_cap) {
    if (degree_cap < 3) throw DomainError("verify_triangular_extension: cap must be >= 3");
    TriangularExtensionReport report;

    VecField delta(3, 1); // z(x d/dx - y d/dy)
    delta.set_coeff(0, Poly::monomial({1, 0, 1}, Scalar(1)));
    delta.set_coeff(1, Poly::monomial({0, 1, 1}, Scalar(-1)));

    bool pass = true;
    for (int s = 0; s <= degree_cap; ++s)
        for (int i = 0; i <= s; ++i) {
            VecField w(3, 1);
            w.set_coeff(0, Poly::monomial({0, i, s - i}, Scalar(1)));
            pass = pass && in_kyz_dx(bracket(delta, w));
        }
    report.clauses.push_back({"ad(delta) maps k[y,z]dx into k[y,z]dx", pass});

    pass = true;
    for (int j = 0; j <= degree_cap; ++j) {
        VecField w(3, 1);
        w.set_coeff(1, Poly::monomial({0, 0, j}, Scalar(1)));
        pass = pass && in_kz_dy(bracket(delta, w));
    }
    report.clauses.push_back({"ad(delta) maps k[z]dy into k[z]dy", pass});

    VecField dz(3, 1);
    dz.set_coeff(2, Poly::constant(3, Scalar(1)));
    VecField euler_diff(3, 1); // x dx - y dy
    euler_diff.set_coeff(0, Poly::variable(3, 0));
    euler_diff.set_coeff(1, -Poly::variable(3, 1));
    report.clauses.push_back(
        {"ad(delta)(dz) lies in k(x dx - y dy)", in_line(bracket(delta, dz), euler_diff)});

    VecField xdx(3, 1), ydy(3, 1), zdz(3, 1);
    xdx.set_coeff(0, Poly::variable(3, 0));
    ydy.set_coeff(1, Poly::variable(3, 1));
    zdz.set_coeff(2, Poly::variable(3, 2));
    report.clauses.push_back({"ad(delta) kills x dx and y dy",
                              bracket(delta, xdx).is_zero() && bracket(delta, ydy).is_zero()});
    report.clauses.push_back(
        {"ad(delta)(z dz) lies in k delta", in_line(bracket(delta, zdz), delta)});

    // Second commutant of h = j3plus + k delta stays inside j3plus. Two
    // rounds of brackets reach coefficient degree 4*cap - 3 at most, so
    // this internal cap guarantees nothing is discarded.
    std::vector<VecField> gens = truncated_basis({AlgTag::J3Plus, {}}, degree_cap);
    gens.push_back(delta);
    SpanBasis h(gens);
    int inner_cap = 4 * degree_cap;
    BracketSpanResult h1 = bracket_span(h, h, inner_cap);
    BracketSpanResult h2 = bracket_span(h1.span, h1.span, inner_cap);
    pass = h1.discards == 0 && h2.discards == 0;
    for (const auto& w : h2.span.elements()) pass = pass && member({AlgTag::J3Plus, {}}, w);
    report.clauses.push_back({"second commutant of j3plus + k delta lies in j3plus", pass});

    return report;
}

Question2Report question2_probe(const LatticeParams& params, int degree_cap) {
    Question2Report report;

    std::vector<VecField> gens =
        truncated_basis({AlgTag::UDePlus, params}, degree_cap);
    for (const auto& w : truncated_basis({AlgTag::UDeMinus, params}, degree_cap))
        gens.push_back(w);
    for (const auto& w : truncated_basis({AlgTag::T2, {}}, degree_cap)) gens.push_back(w);

    SpanBasis closure(gens);
    for (;;) {
        BracketSpanResult next = bracket_span(closure, closure, degree_cap);
        report.discards += next.discards;
        size_t before = closure.dimension();
        for (const auto& w : next.span.elements()) closure.insert(w);
        if (closure.dimension() == before) break;
    }

    std::set<Bidegree> generated, invariant;
    for (const auto& w : closure.elements())
        for (const auto& [bd, comp] : bidegree_components(w)) generated.insert(bd);
    for (const auto& w : truncated_basis({AlgTag::NDeInvariants, params}, degree_cap))
        for (const auto& [bd, comp] : bidegree_components(w)) invariant.insert(bd);

    report.generated_support.assign(generated.begin(), generated.end());
    report.invariant_support.assign(invariant.begin(), invariant.end());
    for (const auto& bd : invariant)
        if (!generated.count(bd)) report.missing.push_back(bd);
    return report;
}

} // namespace vflie
