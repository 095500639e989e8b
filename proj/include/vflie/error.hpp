#pragma once

#include <stdexcept>
#include <string>

namespace vflie {

struct ArityMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

// Violated precondition of a lattice / generation routine (wrong regime,
// point outside the monoid, invalid descriptor parameters, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace vflie
