#pragma once

#include <stdexcept>
#include <string>

namespace subdual {

/// A size parameter is outside the supported range (atom counts, carrier
/// sizes, exhaustive enumeration caps).
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Operands live over different carriers or algebras.
class MismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An input fails a precondition that the operation needs to be meaningful,
/// e.g. a relation that is not an equivalence passed to quotient().
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace subdual
