#pragma once

#include <stdexcept>
#include <string>

namespace adsbh {

// Bad shapes, wrong dimensions, values outside a documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class FrameCompletionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bisection endpoints that do not straddle the boundary, or that change
// class when the direction sample is reseeded.
class BisectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace adsbh
