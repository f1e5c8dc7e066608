#pragma once

#include <stdexcept>
#include <string>

namespace infogeom {

// Malformed arguments: non-finite values, constant F, bad grid parameters.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Two families that cannot be compared (different sample-space sizes).
class IncompatibleFamilies : public std::invalid_argument {
 public:
  explicit IncompatibleFamilies(const std::string& what) : std::invalid_argument(what) {}
};

// The Fisher metric has underflowed; curvature is not computable at this theta.
class DegenerateFamily : public std::runtime_error {
 public:
  explicit DegenerateFamily(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace infogeom
