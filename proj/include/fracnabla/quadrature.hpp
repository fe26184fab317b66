#pragma once

#include <functional>

namespace fracnabla::quad {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int evaluations = 0;
};

/// Integrand on (0,1) receiving both u and 1 - u, each computed without
/// cancellation near its own endpoint.
using UnitIntegrand = std::function<double(double u, double one_minus_u)>;

/// Double-exponential (tanh-sinh) rule on (0,1). Tolerates integrable
/// power singularities at both endpoints. The step is halved until two
/// successive estimates agree to rel_tol; throws ToleranceError otherwise.
QuadResult tanh_sinh_unit(const UnitIntegrand& f, double rel_tol, int max_level = 12);

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]. Endpoint values are
/// never evaluated, so integrable singularities at a or b are allowed.
/// Throws ToleranceError when max_intervals is exhausted.
QuadResult gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                         double rel_tol, double abs_tol = 0.0, int max_intervals = 4000);

}  // namespace fracnabla::quad
