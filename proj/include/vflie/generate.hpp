#pragma once

#include "vflie/lattice.hpp"
#include "vflie/liealg.hpp"
#include "vflie/vecfield.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace vflie {

// Tree of nested Lie brackets and scalings over named generators. Nodes
// are immutable and shared; ad-chains are left-nested:
// ad(g)^r(w) = Bracket(g, Bracket(g, ...)).
struct BracketWord;
using WordPtr = std::shared_ptr<const BracketWord>;

struct BracketWord {
    enum class Kind { Leaf, Bracket, Scale };
    Kind kind;
    std::string name;    // Leaf
    WordPtr left, right; // Bracket
    Scalar s;            // Scale (nonzero)
    WordPtr inner;       // Scale

    static WordPtr leaf(std::string name);
    static WordPtr bracketed(WordPtr l, WordPtr r);
    static WordPtr scaled(Scalar s, WordPtr w);

    // {"leaf":"name"} | {"bracket":[w1,w2]} | {"scale":{"s":"...","w":...}}
    std::string to_json() const;
};

using WordBinding = std::map<std::string, VecField>;

VecField eval_word(const WordPtr& w, const WordBinding& binding);

struct DabWord {
    WordPtr word; // over leaves {"Dplus_e", "Dminus_eprime"}
    Scalar c;     // nonzero; eval(word) * c = gen_dab(a, b)
};

// Expresses d_{a,b} in the Lie algebra generated by the two root
// derivations d+_e and d-_e'. Regime: ee' = d + 1, e > 1, p in Lambda.
DabWord build_dab_word(const LatticeParams& params, const LatticePoint& p);

// Single-step scalar law of the greedy builder: a v-run of multiplicity
// rho landing on b-coordinate b contributes [(b+2)...(b+rho+1)]^-1.
Rational beta_factor(long b, long rho);

// Both sides of d_{ld,kd} = [d-_{1+ld}, d+_{1+kd}] in the e = 1 regime.
std::pair<VecField, VecField> veronese_identity(int d, int k, int l);

struct VeroneseChain {
    VecField lhs;    // ad(d+_1)^s (d_{ld,0})
    VecField target; // d_{ld-s, s}
    Rational alpha;  // lhs = alpha * target, alpha > 0
};

VeroneseChain veronese_ad_chain(int d, int l, int s);

struct Sl2Certificate {
    VecField E, H, F;
    bool he_ok = false; // [H,E] = 2E
    bool hf_ok = false; // [H,F] = -2F
    bool ef_ok = false; // [E,F] = H
    WordPtr word_E, word_H, word_F;
    WordBinding binding;

    bool verified() const { return he_ok && hf_ok && ef_ok; }
};

// Reduction of a homogeneous constant-divergence field outside j2plus to
// a normalized sl(2) triple, by iterated ad with d/dx and d/dy.
Sl2Certificate detect_sl2(const VecField& v);

struct ClauseResult {
    std::string name;
    bool pass;
};

struct TriangularExtensionReport {
    std::vector<ClauseResult> clauses;
    bool all_pass() const;
};

// Verifies the displayed inclusions for h = j3plus + k*delta with
// delta = z(x d/dx - y d/dy), and membership of the second commutant
// of the truncated h in j3plus. Requires degree_cap >= 3.
TriangularExtensionReport verify_triangular_extension(int degree_cap);

struct Question2Report {
    std::vector<Bidegree> generated_support;
    std::vector<Bidegree> invariant_support;
    std::vector<Bidegree> missing; // invariant \ generated; no conclusion implied
    int discards = 0;
};

// Compares the bidegree support of the truncated bracket closure of
// u_de_plus + u_de_minus + t2 against the invariants' support. Purely
// experimental: reports differences without asserting anything about
// the untruncated algebras.
Question2Report question2_probe(const LatticeParams& params, int degree_cap);

} // namespace vflie
