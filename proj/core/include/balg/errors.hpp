#pragma once

#include <stdexcept>
#include <string>

namespace balg {

/// An element, homomorphism or place function was used with an algebra it
/// does not belong to, or an operation was asked of a backend that cannot
/// support it.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed element, place-function or algebra expression text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid suite configuration (schema violation, cap exceeded, undeclared
/// algebra reference).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace balg
