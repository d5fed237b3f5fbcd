#pragma once

#include <stdexcept>
#include <string>

namespace bicross {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape or index mismatch between operators, spaces or tables.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Structurally invalid input data (not a group, not a subgroup, ...).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
};

/// An element lies outside the domain an operation was called on.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace bicross
