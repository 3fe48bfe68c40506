#pragma once

#include <stdexcept>
#include <string>

namespace symedge {

/// Malformed input text (edge lists, ideal JSON). Message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (vertices, box points, faces, generators) was hit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two ideals or monomials live over different variable lists.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace symedge
