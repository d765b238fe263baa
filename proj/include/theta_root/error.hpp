#pragma once

#include <stdexcept>
#include <string>

namespace theta_root {

// Raised for violated preconditions of computations (non-invertible series,
// empty sigma words, insufficient coefficients, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace theta_root
