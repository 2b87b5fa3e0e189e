#pragma once

#include <stdexcept>
#include <string>

namespace maxsurf {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation produced a non-finite value (overflow of exp/sin and friends).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Evaluation requested at (or within tolerance of) an isolated singular point.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A finite-difference stencil would reach too close to a singular point.
class ProximityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Contour geometry is invalid for flux quadrature.
class ContourError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// |grad f| >= 1 where a space-like surface was required.
class SpaceLikenessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// API used inconsistently, e.g. comparing contours around different singular sets.
class MisuseError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace maxsurf
