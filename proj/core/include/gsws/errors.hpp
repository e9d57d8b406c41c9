#pragma once

#include <stdexcept>
#include <string>

namespace gsws {

// Argument outside an operation's admissible set (wrong regime, bad range).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Gamma function evaluated at a non-positive integer, or a hypergeometric
// c-parameter pole.
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// The c-a-b -> integer case of the z->1 connection formula (logarithmic
// case), excluded from the supported parameter region.
struct DegenerateCaseError : std::domain_error {
  explicit DegenerateCaseError(const std::string& what)
      : std::domain_error(what) {}
};

// Series or iteration failed to meet tolerance within its cap.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// An internal exactness check failed (conjugacy, residual realness);
// indicates a branch-convention error upstream.
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace gsws
