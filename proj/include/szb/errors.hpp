#pragma once

#include <stdexcept>
#include <string>

namespace szb {

// Thrown when a theorem hypothesis or operation precondition fails
// (normalization p(0)=1, contraction bound, singular pivot, ...).
// The CLI maps this to exit code 3; plain std::invalid_argument stays
// a usage error (exit code 2).
class hypothesis_error : public std::runtime_error {
public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace szb
