#pragma once

#include <stdexcept>
#include <string>

namespace dk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied input was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// kappa^2 + beta_s^2 <= alpha^2: gamma would be imaginary.
class SupercriticalError : public Error {
 public:
  SupercriticalError(int kappa, double alpha, double beta_s, double critical_alpha);

  int kappa() const noexcept { return kappa_; }
  double alpha() const noexcept { return alpha_; }
  double beta_s() const noexcept { return beta_s_; }
  /// sqrt(kappa^2 + beta_s^2): the vector coupling at which gamma reaches zero.
  double critical_alpha() const noexcept { return critical_alpha_; }

 private:
  int kappa_;
  double alpha_;
  double beta_s_;
  double critical_alpha_;
};

/// An operator was composed with incompatible matrix dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The radial integrator could not produce a usable solution.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace dk
