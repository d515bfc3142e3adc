#pragma once

#include <stdexcept>
#include <string>

namespace hexcol {

// Malformed or out-of-contract input: bad documents, unknown names, dimension
// mismatches, non-prime characteristics.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well formed but the requested object does not exist, e.g. a
// fundamental class over the wrong characteristic or a non-cocycle where a
// cocycle is required.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured enumeration or assembly cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hexcol
