#pragma once

// Reference values computed independently of the library: 50-digit Boost
// special functions and direct formula evaluation.

#include <cmath>
#include <cstddef>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

inline double lgamma(double x) { return static_cast<double>(boost::math::lgamma(big(x))); }
inline double digamma(double x) { return static_cast<double>(boost::math::digamma(big(x))); }
inline double zeta(double s) { return static_cast<double>(boost::math::zeta(big(s))); }

inline big lgamma_big(const big& x) { return boost::math::lgamma(x); }

/// w_j = -alpha Gamma(j - alpha) / (Gamma(1 - alpha) Gamma(j + 1)) for j >= 1, w_0 = 1.
inline double gl_weight(std::size_t j, double alpha) {
  if (j == 0) return 1.0;
  const big a(alpha);
  const big jj(static_cast<double>(j));
  const big mag = a * exp(lgamma_big(jj - a) - lgamma_big(1 - a) - lgamma_big(jj + 1));
  return -static_cast<double>(mag);
}

/// Gamma(j + 1 - alpha) / (Gamma(1 - alpha) Gamma(j + 1)).
inline double cumulative_weight(std::size_t j, double alpha) {
  const big a(alpha);
  const big jj(static_cast<double>(j));
  return static_cast<double>(exp(lgamma_big(jj + 1 - a) - lgamma_big(1 - a) - lgamma_big(jj + 1)));
}

/// Gamma(1-alpha) (Gamma(m+alpha)/Gamma(m+1) - m^(alpha-1)) in 50 digits.
inline double phi_alpha(std::size_t m, double alpha) {
  const big a(alpha);
  const big mm(static_cast<double>(m));
  const big r = exp(lgamma_big(mm + a) - lgamma_big(mm + 1)) - pow(mm, a - 1);
  return static_cast<double>(boost::math::tgamma(1 - a) * r);
}

/// Gamma(mu+1)/Gamma(mu+1-alpha) in 50 digits.
inline double power_derivative_coeff(double mu, double alpha) {
  const big m(mu);
  return static_cast<double>(exp(lgamma_big(m + 1) - lgamma_big(m + 1 - big(alpha))));
}

}  // namespace oracle
