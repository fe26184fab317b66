#pragma once

#include <cmath>
#include <string>

#include "fracnabla/errors.hpp"

namespace fracnabla {

namespace detail {

inline double require_open_unit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError(std::string(name) + " must lie in (0,1), got " + std::to_string(v));
  }
  return v;
}

}  // namespace detail

/// Fractional order alpha in the open interval (0,1).
class FracOrder {
 public:
  explicit FracOrder(double alpha) : alpha_(detail::require_open_unit(alpha, "alpha")) {}
  double value() const noexcept { return alpha_; }
  FracOrder complement() const { return FracOrder(1.0 - alpha_); }

 private:
  double alpha_;
};

/// Hoelder exponent beta in the open interval (0,1).
class HolderExponent {
 public:
  explicit HolderExponent(double beta) : beta_(detail::require_open_unit(beta, "beta")) {}
  double value() const noexcept { return beta_; }

 private:
  double beta_;
};

}  // namespace fracnabla
