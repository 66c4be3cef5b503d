#pragma once

#include <stdexcept>
#include <string>

namespace ramsum {

/// An argument violated a documented precondition (nonpositive input,
/// broken divisibility chain, set not factor-closed, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Tuple or vector lengths disagree with the arity of a function or spec.
class arity_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured resource ceiling.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ramsum
