#pragma once

#include <stdexcept>
#include <string>

namespace minioncore {

/// Malformed input: bad arity, invalid map, schema violation.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured size budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A produced certificate failed its own check.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant (a bug, or an input outside proven territory).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace minioncore
