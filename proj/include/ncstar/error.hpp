#pragma once

#include <stdexcept>
#include <string>

namespace ncstar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation restricted to one noncommutativity case is given
/// a theta matrix belonging to the other.
class CaseMismatch : public Error {
 public:
  using Error::Error;
};

/// Scenario files and command-line configuration that fail validation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncstar
