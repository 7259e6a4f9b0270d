#ifndef BMW_ERRORS_HPP
#define BMW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bmw {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested probability level lies at or beyond the total mass of a
/// defective distribution (tau < 0 leaves a never-failing fraction).
class MassExceededError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iterative scheme (continued fraction, root solve, adaptive
/// subdivision) hit its iteration or depth cap before reaching tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result is not representable in double precision (e.g. hazard when
/// the survival function has underflowed to zero).
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bmw

#endif
