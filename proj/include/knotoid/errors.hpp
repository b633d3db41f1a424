#ifndef KNOTOID_ERRORS_HPP
#define KNOTOID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotoid {

/// Malformed input text (JSON syntax, polynomial syntax).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a diagram or data invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Crossing sign cannot be inferred from the successor relation.
class AmbiguityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Geometric input not in generic position.
class DegeneracyError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A computation could not be carried out (missing data, overflow, bad substitution).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace knotoid

#endif
