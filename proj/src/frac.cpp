#include "fracnabla/frac.hpp"

#include <cmath>
#include <string>

#include "fracnabla/quadrature.hpp"

namespace fracnabla::frac {

namespace {

void require_unit_x(double x, const char* fn) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(fn) + ": x must lie in [0,1], got " + std::to_string(x));
  }
}

void require_mu(double mu, FracOrder alpha, const char* fn) {
  if (!(mu > alpha.value()) || !std::isfinite(mu)) {
    throw DomainError(std::string(fn) + ": requires mu > alpha");
  }
}

double gamma_quotient(double mu, double alpha) {
  return std::exp(specfn::ln_gamma(mu + 1.0) - specfn::ln_gamma(mu + 1.0 - alpha));
}

}  // namespace

double frac_extended_nabla(const RealGridFn& g, FracOrder alpha, double x) {
  require_unit_x(x, "frac_extended_nabla");
  return ops::interpolate(frac_nabla(g, alpha), x);
}

double balakrishnan_weight_oracle(std::size_t j, FracOrder alpha, double h, double rel_tol) {
  if (!(h > 0.0 && h < 1.0)) throw DomainError("balakrishnan_weight_oracle: h must lie in (0,1)");
  const double a = alpha.value();
  const double tail = static_cast<double>(j) - a;
  // lambda = u / (h (1-u)): the integrand becomes h^-alpha u^(alpha-1) (1-u)^(j-alpha).
  const quad::QuadResult r = quad::tanh_sinh_unit(
      [a, tail](double u, double one_minus_u) {
        return std::pow(u, a - 1.0) * std::pow(one_minus_u, tail);
      },
      rel_tol);
  return std::pow(h, -a) * r.value;
}

double balakrishnan_weight_closed_form(std::size_t j, FracOrder alpha, double h) {
  const double a = alpha.value();
  const double jd = static_cast<double>(j);
  return std::pow(h, -a) * std::exp(specfn::ln_gamma(jd + 1.0 - a) + specfn::ln_gamma(a) -
                                    specfn::ln_gamma(jd + 1.0));
}

double exact_frac_deriv_power(double mu, FracOrder alpha, double x) {
  require_mu(mu, alpha, "exact_frac_deriv_power");
  require_unit_x(x, "exact_frac_deriv_power");
  if (x == 0.0) return 0.0;
  return gamma_quotient(mu, alpha.value()) * std::pow(x, mu - alpha.value());
}

double exact_frac_deriv_power_log(double mu, FracOrder alpha, double x) {
  require_mu(mu, alpha, "exact_frac_deriv_power_log");
  require_unit_x(x, "exact_frac_deriv_power_log");
  if (x == 0.0) return 0.0;
  const double a = alpha.value();
  const double bracket = std::log(x) + specfn::digamma(mu + 1.0) - specfn::digamma(mu + 1.0 - a);
  return gamma_quotient(mu, a) * std::pow(x, mu - a) * bracket;
}

double rl_quadrature_oracle(const std::function<double(double)>& fprime, FracOrder alpha,
                            double x, double rel_tol) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw DomainError("rl_quadrature_oracle: x must lie in (0,1], got " + std::to_string(x));
  }
  const double a = alpha.value();
  const double half = 0.5 * x;
  const double abs_tol = 1e-15;
  // [0, x/2]: kernel is smooth, f' may be singular at 0.
  const quad::QuadResult near_zero = quad::gauss_kronrod(
      [&](double t) { return std::pow(x - t, -a) * fprime(t); }, 0.0, half, rel_tol, abs_tol);
  // [x/2, x]: s = (x-t)^(1-alpha), dt = -(x-t)^alpha ds / (1-alpha).
  const double p = 1.0 / (1.0 - a);
  const quad::QuadResult near_x = quad::gauss_kronrod(
      [&](double s) { return fprime(x - std::pow(s, p)); }, 0.0, std::pow(half, 1.0 - a), rel_tol,
      abs_tol);
  return (near_zero.value + p * near_x.value) / std::tgamma(1.0 - a);
}

std::function<double(double)> power_fn(double mu) {
  return [mu](double t) { return t == 0.0 ? 0.0 : std::pow(t, mu); };
}

std::function<double(double)> power_log_fn(double mu) {
  return [mu](double t) { return t == 0.0 ? 0.0 : std::pow(t, mu) * std::log(t); };
}

}  // namespace fracnabla::frac
