#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "fracnabla/scalars.hpp"

/// Real special functions on the positive axis.
///
/// Everything here is a pure function; gamma quotients are formed in log
/// space so that arguments in the thousands do not overflow.
namespace fracnabla::specfn {

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// psi(x) = d/dx ln Gamma(x) for x > 0.
double digamma(double x);

/// Riemann zeta for real s > 1.
double zeta(double s);

/// Coefficients w_j = (-1)^j binom(alpha, j), j = 0..n.
struct GLWeights {
  double alpha;
  Eigen::VectorXd w;

  std::size_t size() const noexcept { return static_cast<std::size_t>(w.size()); }
  double operator[](std::size_t j) const { return w(static_cast<Eigen::Index>(j)); }
};

/// Builds w_0..w_n with the recurrence w_j = w_{j-1} (j - 1 - alpha) / j.
GLWeights gl_weights(FracOrder alpha, std::size_t n);

/// Gamma(j + 1 - alpha) / Gamma(j + 1).
double gamma_ratio(std::size_t j, FracOrder alpha);

/// Gamma(1-alpha) * (Gamma(m+alpha)/Gamma(m+1) - m^(alpha-1)), m >= 1.
double phi_alpha_residual(std::size_t m, FracOrder alpha);

/// Upper bound Gamma(2-alpha)/2 * m^(alpha-2) on |phi_alpha_residual(m, alpha)|.
double phi_alpha_bound(std::size_t m, FracOrder alpha);

/// C(alpha) = 1/(1-alpha) - Gamma(2-alpha) + 1 + (alpha/2) zeta(1+alpha).
double lemma_constant(FracOrder alpha);

}  // namespace fracnabla::specfn
