#pragma once

#include "vflie/lattice.hpp"
#include "vflie/vecfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vflie {

// Exact linear span of vector fields, kept in reduced row-echelon form
// over the coordinate index set (monomial, direction). Deterministic
// ordering: graded lex on the monomial, then direction index.
class SpanBasis {
public:
    SpanBasis(int arity, int field_order) : arity_(arity), field_(field_order) {}
    explicit SpanBasis(const std::vector<VecField>& elements);

    int arity() const { return arity_; }
    int field_order() const { return field_; }
    size_t dimension() const { return rows_.size(); }
    const std::vector<VecField>& elements() const { return rows_; }

    // Adds v to the span; returns true when the rank grew.
    bool insert(const VecField& v);
    bool contains(const VecField& v) const;
    bool same_span(const SpanBasis& o) const;

private:
    int arity_;
    int field_;
    std::vector<VecField> rows_; // leading coeff 1, pairwise reduced

    VecField reduce_(VecField v) const;
};

struct BracketSpanResult {
    SpanBasis span;
    int discards = 0; // brackets dropped because their degree exceeded the cap
};

// Span of all pairwise brackets of A x B; results whose total degree
// exceeds degree_cap are discarded and counted.
BracketSpanResult bracket_span(const SpanBasis& A, const SpanBasis& B, int degree_cap);

enum class SeriesVerdict { SolvableAtTruncation, NotDecided };

struct DerivedSeriesReport {
    int truncation;
    std::vector<size_t> level_dims; // level_dims[0] = dim of the generators' span
    std::optional<size_t> stabilized_at_zero;
    int discards;
    SeriesVerdict verdict;

    std::string to_json() const;
};

DerivedSeriesReport derived_series(const SpanBasis& generators, int degree_cap,
                                   int max_levels);

enum class AlgTag {
    J2Plus, J2Minus, J20Plus, J20Minus,
    U2Plus, U2Minus, U20Plus, U20Minus,
    T2, T3, U3Plus, J3Plus,
    Vec0, VecC, Vec00, VecC0,
    UDePlus, UDeMinus, NDeInvariants, GDe, IDe,
    Sl2A1,
};

struct NamedAlgebra {
    AlgTag tag;
    std::optional<LatticeParams> params; // present iff the tag is (d,e)-parameterized
};

// Parses tag names like "j2plus", "u_de_plus", "sl2_A1".
AlgTag alg_tag_from_string(const std::string& name);
std::string alg_tag_name(AlgTag tag);
bool alg_tag_needs_params(AlgTag tag);
int alg_tag_arity(AlgTag tag); // ambient arity (Vec* tags return 0 = any)

// Exact syntactic membership per the algebra's defining display.
bool member(const NamedAlgebra& alg, const VecField& X);

// Basis elements of total degree <= degree_cap, in deterministic order.
std::vector<VecField> truncated_basis(const NamedAlgebra& alg, int degree_cap);

} // namespace vflie
