#ifndef SOSMOD_ERRORS_HPP
#define SOSMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sosmod {

/// An argument lies outside the domain of the operation (non-prime modulus,
/// residue out of range, m = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A brute-force computation was refused because it would exceed the
/// configured memory budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No closed form covers the requested (m, p, k, variant) and the evaluation
/// policy forbids falling back to enumeration.
class FormulaNotCovered : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails. Never expected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sosmod

#endif  // SOSMOD_ERRORS_HPP
