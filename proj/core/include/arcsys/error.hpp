#pragma once

#include <stdexcept>
#include <string>

namespace arcsys {

// Bad input that violates a documented precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured search budget (clique nodes, universe size) ran out.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Serialized data does not match the expected schema or its derived block.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arcsys
