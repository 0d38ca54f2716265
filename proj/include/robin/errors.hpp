#pragma once

#include <stdexcept>

namespace robin {

/// Numerical failure inside a solver: integration breakdown, missing root,
/// unresolvable bracket. Invalid user input raises std::invalid_argument or
/// std::domain_error instead.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace robin
