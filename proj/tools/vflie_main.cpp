// vflie: exact computations in Lie algebras of polynomial vector fields.

#include <CLI11.hpp>
#include <json.hpp>

#include "vflie/borel1.hpp"
#include "vflie/generate.hpp"
#include "vflie/liealg.hpp"
#include "vflie/parse.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace vflie;

namespace {

int env_cap(int fallback) {
    const char* v = std::getenv("VFLIE_MAX_DEGREE");
    if (!v) return fallback;
    try {
        int n = std::stoi(v);
        if (n < 1) throw std::invalid_argument("non-positive");
        return n;
    } catch (const std::exception&) {
        throw DomainError("VFLIE_MAX_DEGREE must be a positive integer");
    }
}

std::vector<GenDesc> all_descriptors(int max) {
    std::vector<GenDesc> out;
    for (int n = 0; n <= max; ++n) out.push_back(GenDesc::plus(n));
    for (int m = 0; m <= max; ++m) out.push_back(GenDesc::minus(m));
    for (int a = 0; a <= max; ++a)
        for (int b = 0; b <= max; ++b) out.push_back(GenDesc::dab(a, b));
    return out;
}

json bidegree_list(const std::vector<Bidegree>& v) {
    json arr = json::array();
    for (const auto& bd : v) arr.push_back({bd.a, bd.b});
    return arr;
}

NamedAlgebra resolve_algebra(const std::string& tag_name, int d, int e) {
    AlgTag tag = alg_tag_from_string(tag_name);
    NamedAlgebra alg{tag, {}};
    if (alg_tag_needs_params(tag)) {
        if (d == 0 || e == 0)
            throw DomainError("algebra '" + tag_name + "' requires --d and --e");
        alg.params = make_params(d, e);
    }
    return alg;
}

struct Options {
    bool json_out = false;
};

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.json_out)
        std::cout << doc.dump() << "\n";
    else
        std::cout << text << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lie-algebra computations for polynomial vector fields"};
    app.require_subcommand(1);
    Options opt;

    int exit_code = 0;
    std::string vf_a, vf_b, poly_text, alg_name;
    int arity = 2, field = 1;
    int d = 0, e = 0;
    long aa = 0, bb = 0;
    int max_param = 8, cap = 0, max_levels = 12, box = 12;
    int dmax = 6, kmax = 3, lmax = 3;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json_out, "emit JSON");
    };

    // -------- bracket --------
    auto* c_bracket = app.add_subcommand("bracket", "Lie bracket of two vector fields");
    c_bracket->add_option("X", vf_a)->required();
    c_bracket->add_option("Y", vf_b)->required();
    c_bracket->add_option("--arity", arity);
    c_bracket->add_option("--field", field);
    add_common(c_bracket);
    c_bracket->callback([&] {
        VecField r = bracket(parse_vecfield(vf_a, arity, field),
                             parse_vecfield(vf_b, arity, field));
        emit(opt, {{"result", r.str()}}, r.str());
    });

    // -------- divergence --------
    auto* c_div = app.add_subcommand("divergence", "divergence of a vector field");
    c_div->add_option("X", vf_a)->required();
    c_div->add_option("--arity", arity);
    c_div->add_option("--field", field);
    add_common(c_div);
    c_div->callback([&] {
        Poly r = divergence(parse_vecfield(vf_a, arity, field));
        emit(opt, {{"result", r.str()}}, r.str());
    });

    // -------- components --------
    auto* c_comp = app.add_subcommand("components", "bidegree components on A^2");
    c_comp->add_option("X", vf_a)->required();
    c_comp->add_option("--field", field);
    add_common(c_comp);
    c_comp->callback([&] {
        auto comps = bidegree_components(parse_vecfield(vf_a, 2, field));
        json arr = json::array();
        std::string text;
        for (const auto& [bd, w] : comps) {
            arr.push_back({{"bidegree", {bd.a, bd.b}}, {"field", w.str()}});
            text += "(" + std::to_string(bd.a) + "," + std::to_string(bd.b) + "): " +
                    w.str() + "\n";
        }
        if (!text.empty()) text.pop_back();
        emit(opt, {{"components", arr}}, text.empty() ? "0" : text);
    });

    // -------- table-check --------
    auto* c_table = app.add_subcommand(
        "table-check", "closed-form commutation table vs the generic bracket");
    c_table->add_option("--max", max_param, "parameter bound for n, m, a, b");
    add_common(c_table);
    c_table->callback([&] {
        auto descs = all_descriptors(max_param);
        std::vector<std::string> failures;
        size_t pairs = 0;
        for (const auto& l : descs)
            for (const auto& r : descs) {
                ++pairs;
                TableEntry entry = commutation_table(l, r);
                if (entry.realize() != bracket(l.realize(), r.realize()))
                    failures.push_back("[" + l.str() + ", " + r.str() + "]");
            }
        bool holds = failures.empty();
        std::string text = holds
            ? "all " + std::to_string(pairs) + " identities hold"
            : std::to_string(failures.size()) + " of " + std::to_string(pairs) +
                  " identities FAILED";
        emit(opt, {{"pairs", pairs}, {"failures", failures}, {"holds", holds}}, text);
        if (!holds) exit_code = 1;
    });

    // -------- decompose --------
    auto* c_dec = app.add_subcommand(
        "decompose", "express d_{a,b} as a bracket word in the two root derivations");
    c_dec->add_option("--d", d)->required();
    c_dec->add_option("--e", e)->required();
    c_dec->add_option("--a", aa)->required();
    c_dec->add_option("--b", bb)->required();
    add_common(c_dec);
    c_dec->callback([&] {
        LatticeParams params = make_params(d, e);
        DabWord dw = build_dab_word(params, {aa, bb});
        WordBinding binding{{"Dplus_e", gen_dplus(params.e)},
                            {"Dminus_eprime", gen_dminus(params.e_prime)}};
        bool verified = eval_word(dw.word, binding) * dw.c ==
                        gen_dab(static_cast<int>(aa), static_cast<int>(bb));
        json doc;
        doc["word"] = json::parse(dw.word->to_json());
        doc["c"] = dw.c.str();
        doc["verified"] = verified;
        emit(opt, doc,
             "word = " + dw.word->to_json() + "\nc = " + dw.c.str() +
                 "\nverified = " + (verified ? "true" : "false"));
        if (!verified) exit_code = 1;
    });

    // -------- invariant-basis --------
    auto* c_inv = app.add_subcommand("invariant-basis",
                                     "truncated basis of the Ad-invariants");
    c_inv->add_option("--d", d)->required();
    c_inv->add_option("--e", e)->required();
    c_inv->add_option("--cap", cap);
    add_common(c_inv);
    c_inv->callback([&] {
        int degree_cap = cap > 0 ? cap : env_cap(6);
        auto basis = truncated_basis({AlgTag::NDeInvariants, make_params(d, e)}, degree_cap);
        json arr = json::array();
        std::string text;
        for (const auto& w : basis) {
            arr.push_back(w.str());
            text += w.str() + "\n";
        }
        if (!text.empty()) text.pop_back();
        emit(opt, {{"basis", arr}}, text);
    });

    // -------- derived-series --------
    auto* c_ser = app.add_subcommand("derived-series",
                                     "derived series of a truncated named algebra");
    c_ser->add_option("--alg", alg_name)->required();
    c_ser->add_option("--d", d);
    c_ser->add_option("--e", e);
    c_ser->add_option("--cap", cap);
    c_ser->add_option("--max-levels", max_levels);
    add_common(c_ser);
    c_ser->callback([&] {
        int degree_cap = cap > 0 ? cap : env_cap(6);
        NamedAlgebra alg = resolve_algebra(alg_name, d, e);
        SpanBasis gens(truncated_basis(alg, degree_cap));
        DerivedSeriesReport report = derived_series(gens, degree_cap, max_levels);
        emit(opt, json::parse(report.to_json()), report.to_json());
    });

    // -------- member --------
    auto* c_mem = app.add_subcommand("member", "syntactic membership in a named algebra");
    c_mem->add_option("--alg", alg_name)->required();
    c_mem->add_option("--d", d);
    c_mem->add_option("--e", e);
    c_mem->add_option("--field", field);
    c_mem->add_option("X", vf_a)->required();
    add_common(c_mem);
    c_mem->callback([&] {
        NamedAlgebra alg = resolve_algebra(alg_name, d, e);
        int n = alg_tag_arity(alg.tag);
        if (n == 0) n = 2;
        bool in = member(alg, parse_vecfield(vf_a, n, field));
        emit(opt, {{"member", in}}, in ? "true" : "false");
    });

    // -------- sl2-detect --------
    auto* c_sl2 = app.add_subcommand(
        "sl2-detect", "reduce a homogeneous field outside j2plus to an sl(2) triple");
    c_sl2->add_option("X", vf_a)->required();
    c_sl2->add_option("--field", field);
    add_common(c_sl2);
    c_sl2->callback([&] {
        Sl2Certificate cert = detect_sl2(parse_vecfield(vf_a, 2, field));
        json doc{{"E", cert.E.str()},
                 {"H", cert.H.str()},
                 {"F", cert.F.str()},
                 {"relations",
                  {{"HE", cert.he_ok}, {"HF", cert.hf_ok}, {"EF", cert.ef_ok}}},
                 {"words",
                  {{"E", json::parse(cert.word_E->to_json())},
                   {"H", json::parse(cert.word_H->to_json())},
                   {"F", json::parse(cert.word_F->to_json())}}}};
        std::string text = "E = " + cert.E.str() + "\nH = " + cert.H.str() +
                           "\nF = " + cert.F.str() + "\nrelations verified = " +
                           (cert.verified() ? "true" : "false");
        emit(opt, doc, text);
        if (!cert.verified()) exit_code = 1;
    });

    // -------- special --------
    auto* c_spec = app.add_subcommand("special", "specialness classification on the line");
    c_spec->add_option("f", poly_text)->required();
    add_common(c_spec);
    c_spec->callback([&] {
        SpecialForm form = special_form(parse_poly(poly_text, 1, 1));
        json doc{{"class", special_class_name(form.cls)}};
        std::string text = special_class_name(form.cls);
        if (form.cls == SpecialClass::Special) {
            doc["alpha"] = form.alpha.str();
            doc["lambda"] = form.lambda.str();
            doc["mu"] = form.mu.str();
            doc["k"] = form.k;
            text += ": alpha = " + form.alpha.str() + ", lambda = " + form.lambda.str() +
                    ", mu = " + form.mu.str() + ", k = " + std::to_string(form.k);
        }
        emit(opt, doc, text);
    });

    // -------- ideal-check --------
    auto* c_ideal = app.add_subcommand(
        "ideal-check", "monoid ideal inclusion and the bracket ideal property of I_{d,e}");
    c_ideal->add_option("--d", d)->required();
    c_ideal->add_option("--e", e)->required();
    c_ideal->add_option("--box", box);
    c_ideal->add_option("--cap", cap);
    add_common(c_ideal);
    c_ideal->callback([&] {
        int degree_cap = cap > 0 ? cap : env_cap(8);
        LatticeParams params = make_params(d, e);
        MonoidIdealReport monoid = monoid_ideal_check(params, box);
        auto outer = truncated_basis({AlgTag::NDeInvariants, params}, degree_cap);
        auto ideal = truncated_basis({AlgTag::IDe, params}, degree_cap);
        size_t pairs = 0, bracket_failures = 0;
        for (const auto& x : outer)
            for (const auto& y : ideal) {
                ++pairs;
                if (!member({AlgTag::IDe, params}, bracket(x, y))) ++bracket_failures;
            }
        bool holds = monoid.holds && bracket_failures == 0;
        json doc{{"monoid_holds", monoid.holds},
                 {"monoid_violations", monoid.violations.size()},
                 {"bracket_pairs", pairs},
                 {"bracket_failures", bracket_failures},
                 {"holds", holds}};
        std::string text = holds
            ? "ideal property holds (" + std::to_string(pairs) + " bracket pairs, box " +
                  std::to_string(box) + ")"
            : "ideal property FAILED";
        emit(opt, doc, text);
        if (!holds) exit_code = 1;
    });

    // -------- veronese-check --------
    auto* c_ver = app.add_subcommand("veronese-check",
                                     "generation identities in the e = 1 regime");
    c_ver->add_option("--dmax", dmax);
    c_ver->add_option("--kmax", kmax);
    c_ver->add_option("--lmax", lmax);
    add_common(c_ver);
    c_ver->callback([&] {
        size_t checked = 0, failures = 0;
        for (int dd = 2; dd <= dmax; ++dd)
            for (int k = 0; k <= kmax; ++k)
                for (int l = 0; l <= lmax; ++l) {
                    auto [lhs, rhs] = veronese_identity(dd, k, l);
                    ++checked;
                    if (lhs != rhs) ++failures;
                    if (k == 0)
                        for (int s = 0; s <= l * dd; ++s) {
                            ++checked;
                            VeroneseChain chain = veronese_ad_chain(dd, l, s);
                            if (chain.lhs != chain.target * Scalar(chain.alpha) ||
                                chain.alpha <= 0)
                                ++failures;
                        }
                }
        bool holds = failures == 0;
        std::string text = holds
            ? "all " + std::to_string(checked) + " identities hold"
            : std::to_string(failures) + " of " + std::to_string(checked) +
                  " identities FAILED";
        emit(opt, {{"checked", checked}, {"failures", failures}, {"holds", holds}}, text);
        if (!holds) exit_code = 1;
    });

    // -------- triangular-extension-check --------
    auto* c_tri = app.add_subcommand("triangular-extension-check",
                                     "solvable extension of j3plus by z(x dx - y dy)");
    c_tri->add_option("--cap", cap);
    add_common(c_tri);
    c_tri->callback([&] {
        int degree_cap = cap > 0 ? cap : env_cap(4);
        TriangularExtensionReport report = verify_triangular_extension(degree_cap);
        json arr = json::array();
        std::string text;
        for (const auto& clause : report.clauses) {
            arr.push_back({{"clause", clause.name}, {"pass", clause.pass}});
            text += std::string(clause.pass ? "pass" : "FAIL") + "  " + clause.name + "\n";
        }
        if (!text.empty()) text.pop_back();
        emit(opt, {{"clauses", arr}, {"all_pass", report.all_pass()}}, text);
        if (!report.all_pass()) exit_code = 1;
    });

    // -------- probe-question2 --------
    auto* c_q2 = app.add_subcommand(
        "probe-question2",
        "compare generated vs invariant bidegree support (experimental, no conclusion)");
    c_q2->add_option("--d", d)->required();
    c_q2->add_option("--e", e)->required();
    c_q2->add_option("--cap", cap);
    add_common(c_q2);
    c_q2->callback([&] {
        int degree_cap = cap > 0 ? cap : env_cap(6);
        Question2Report report = question2_probe(make_params(d, e), degree_cap);
        json doc{{"generated_support", bidegree_list(report.generated_support)},
                 {"invariant_support", bidegree_list(report.invariant_support)},
                 {"missing", bidegree_list(report.missing)},
                 {"discards", report.discards}};
        std::string text = "generated bidegrees: " +
                           std::to_string(report.generated_support.size()) +
                           "\ninvariant bidegrees: " +
                           std::to_string(report.invariant_support.size()) +
                           "\nmissing: " + std::to_string(report.missing.size()) +
                           " (no conclusion implied)";
        emit(opt, doc, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? 0 : 2;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return exit_code;
}
