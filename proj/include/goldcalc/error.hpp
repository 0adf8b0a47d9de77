#pragma once

#include <stdexcept>
#include <string>

namespace goldcalc {

/// Argument outside the domain where an operation is defined (k = 0, x = 0, |z| past a radius, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation point too close to a pole, image or zero.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or product did not reach its tail tolerance within max_terms.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or flag value.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace goldcalc
