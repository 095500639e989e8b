#pragma once

#include "vflie/generate.hpp"
#include "vflie/poly.hpp"
#include "vflie/vecfield.hpp"

#include <stdexcept>
#include <string>

namespace vflie {

struct ParseError : public std::runtime_error {
    size_t position; // byte offset of the offending lexeme
    std::string expected;
    std::string found;

    ParseError(size_t position, std::string expected, std::string found);
};

// Recursive-descent parsers for the shared grammars. Whitespace is
// insignificant; '*' is mandatory between factors; variables are x, y, z
// (indices 0, 1, 2); cyclotomic coefficients appear parenthesized as
// polynomials in 'z', e.g. "(1 - z^2)*x*dx".
Poly parse_poly(const std::string& text, int arity, int field_order = 1);
VecField parse_vecfield(const std::string& text, int arity, int field_order = 1);

// Scalar literal: "p/q" or a polynomial in 'z' such as "1 - z^2".
Scalar parse_scalar(const std::string& text, int field_order = 1);

// BracketWord from its JSON serialization.
WordPtr parse_word(const std::string& json_text, int field_order = 1);

} // namespace vflie
