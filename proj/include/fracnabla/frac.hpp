#pragma once

#include <functional>

#include "fracnabla/grid.hpp"
#include "fracnabla/ops.hpp"
#include "fracnabla/scalars.hpp"
#include "fracnabla/specfn.hpp"

/// Fractional powers of the discrete operators, and the exact fractional
/// derivatives they approximate.
namespace fracnabla::frac {

/// Fractional nabla (Gruenwald-Letnikov form):
///   out_k = h^-alpha sum_{j=0}^{k} w_j v_{k-j},  w_j = (-1)^j binom(alpha, j).
/// g must be anchored (v_0 = 0).
template <typename Scalar>
GridFn<Scalar> frac_nabla(const GridFn<Scalar>& g, FracOrder alpha) {
  if (!g.anchored()) throw DomainError("frac_nabla: input must vanish at t = 0");
  const specfn::GLWeights gl = specfn::gl_weights(alpha, g.grid().n());
  const NodeVector<Scalar> w = gl.w.template cast<Scalar>();
  const auto& v = g.values();
  const double scale = std::pow(g.grid().h(), -alpha.value());
  NodeVector<Scalar> out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    out(k) = scale * w.head(k + 1).cwiseProduct(v.head(k + 1).reverse()).sum();
  }
  return GridFn<Scalar>(g.grid(), std::move(out));
}

/// Fractional extended nabla A_h^alpha = I_h nabla_h^alpha evaluated at x.
double frac_extended_nabla(const RealGridFn& g, FracOrder alpha, double x);

/// Same, reusing nodal values already produced by frac_nabla.
inline double frac_extended_nabla_from_nodal(const RealGridFn& nodal, double x) {
  return ops::interpolate(nodal, x);
}

/// int_0^inf lambda^(alpha-1) (1 + lambda h)^-(j+1) d lambda by quadrature,
/// after u = lambda h / (1 + lambda h) maps the half line onto (0,1).
double balakrishnan_weight_oracle(std::size_t j, FracOrder alpha, double h,
                                  double rel_tol = 1e-12);

/// Closed form h^-alpha Gamma(j+1-alpha) Gamma(alpha) / Gamma(j+1).
double balakrishnan_weight_closed_form(std::size_t j, FracOrder alpha, double h);

/// A^alpha t^mu at x: Gamma(mu+1)/Gamma(mu+1-alpha) x^(mu-alpha). Requires
/// mu > alpha; x = 0 returns the limit 0.
double exact_frac_deriv_power(double mu, FracOrder alpha, double x);

/// A^alpha (t^mu ln t) at x:
///   Gamma(mu+1)/Gamma(mu+1-alpha) x^(mu-alpha) [ln x + psi(mu+1) - psi(mu+1-alpha)].
/// Requires mu > alpha; x = 0 returns the limit 0.
double exact_frac_deriv_power_log(double mu, FracOrder alpha, double x);

/// (1/Gamma(1-alpha)) int_0^x (x-t)^-alpha f'(t) dt by adaptive quadrature.
/// The kernel singularity at t = x is removed with s = (x-t)^(1-alpha); f'
/// may have an integrable singularity at t = 0. Uses std::tgamma so that it
/// shares nothing with the closed forms above.
double rl_quadrature_oracle(const std::function<double(double)>& fprime, FracOrder alpha,
                            double x, double rel_tol = 1e-10);

/// t^mu, with value 0 at t = 0.
std::function<double(double)> power_fn(double mu);

/// t^mu ln t, with value 0 at t = 0.
std::function<double(double)> power_log_fn(double mu);

}  // namespace fracnabla::frac
