#pragma once

#include <stdexcept>
#include <string>

namespace hydro1d {

// Caller passed arguments outside an operation's contract.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure (quadrature, root bracketing, eigen-iteration) did
// not reach its accuracy target.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// The requested grid cannot resolve the potential's core scale.  Carries the
// smallest point count that would be accepted.
class RegimeError : public std::runtime_error {
 public:
  RegimeError(const std::string& what, long suggested_points)
      : std::runtime_error(what), suggested_points_(suggested_points) {}

  long suggested_points() const noexcept { return suggested_points_; }

 private:
  long suggested_points_;
};

}  // namespace hydro1d
