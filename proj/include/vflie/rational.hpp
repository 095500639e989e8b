#pragma once

#include <gmpxx.h>

#include <string>

namespace vflie {

// Exact rational numbers. mpq_class keeps values canonical (gcd = 1,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

inline std::string rational_str(const Rational& r) {
    return r.get_str();
}

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

} // namespace vflie
