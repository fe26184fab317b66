#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <iosfwd>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "fracnabla/grid.hpp"

namespace fracnabla::ops {

using Complex = std::complex<double>;

/// Backward difference (v_k - v_{k-1}) / h, with v_0 / h at node 0.
template <typename Scalar>
GridFn<Scalar> nabla(const GridFn<Scalar>& g) {
  const auto& v = g.values();
  const Eigen::Index n = v.size() - 1;
  typename GridFn<Scalar>::vector_type out(v.size());
  const double inv_h = 1.0 / g.grid().h();
  out(0) = v(0) * inv_h;
  out.tail(n) = (v.tail(n) - v.head(n)) * inv_h;
  return GridFn<Scalar>(g.grid(), std::move(out));
}

/// Value at x of the polygonal line through g's vertices. Points past the
/// last node (when n h < 1) continue the last segment.
template <typename Scalar>
Scalar interpolate(const GridFn<Scalar>& g, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("interpolate: x must lie in [0,1], got " + std::to_string(x));
  }
  const UniformGrid& grid = g.grid();
  const double h = grid.h();
  const double s = x / h;
  // Snap to a node when x / h is an integer up to rounding, so that nodal
  // values are reproduced exactly on grids whose h is not a power of two.
  const double nearest = std::round(s);
  if (std::abs(s - nearest) <= 4.0 * std::numeric_limits<double>::epsilon() * nearest &&
      nearest <= static_cast<double>(grid.n())) {
    return g[static_cast<std::size_t>(nearest)];
  }
  std::size_t k = static_cast<std::size_t>(std::ceil(s));
  k = std::clamp<std::size_t>(k, 1, grid.n());
  const double left = grid.node(k - 1);
  const double right = grid.node(k);
  return ((x - left) / h) * g[k] + ((right - x) / h) * g[k - 1];
}

/// Values of the polygonal extension of g at the nodes of another grid.
template <typename Scalar>
GridFn<Scalar> resample(const GridFn<Scalar>& g, const UniformGrid& target) {
  typename GridFn<Scalar>::vector_type out(static_cast<Eigen::Index>(target.size()));
  for (std::size_t i = 0; i < target.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = interpolate(g, std::min(target.node(i), 1.0));
  }
  return GridFn<Scalar>(target, std::move(out));
}

/// Extended nabla A_h = I_h nabla_h. The nodal values are those of nabla(g);
/// evaluate between nodes with interpolate().
template <typename Scalar>
GridFn<Scalar> extended_nabla(const GridFn<Scalar>& g) {
  return nabla(g);
}

/// R(lambda, nabla_h) g at the nodes:
///   -h sum_{j=0}^{k} (1 - lambda h)^{-(j+1)} v_{k-j}.
/// The sum stops at j = k, i.e. g is extended by zero to the left of 0.
ComplexGridFn resolvent_nabla(Complex lambda, const ComplexGridFn& g);
ComplexGridFn resolvent_nabla(Complex lambda, const RealGridFn& g);

/// (1 - lambda h)^{-(j+1)} for j = 0..n, built by repeated division with a
/// fresh log-space evaluation every 64 steps.
Eigen::VectorXcd resolvent_powers(Complex lambda, double h, std::size_t n);

/// R(lambda, A_h) = I_h R(lambda, nabla_h) + (1/lambda)(I - I_h).
class ExtendedResolvent {
 public:
  ExtendedResolvent(Complex lambda, const RealGridFn& g);

  Complex lambda() const noexcept { return lambda_; }

  /// Nodal values; (I - I_h) vanishes at nodes so these equal resolvent_nabla.
  const ComplexGridFn& nodal() const noexcept { return nodal_; }

  /// Value at x when g is itself the polygonal line (I_h g = g).
  Complex operator()(double x) const;

  /// Value at x for the continuous representative f of g's samples.
  Complex operator()(double x, const std::function<double(double)>& f) const;

 private:
  Complex lambda_;
  RealGridFn g_;
  ComplexGridFn nodal_;
};

ExtendedResolvent resolvent_extended(Complex lambda, const RealGridFn& g);

enum class SectorialOperator { nabla, extended };

struct SectorialSample {
  Complex lambda;
  double ratio;  // ||lambda R(lambda, .) g||_beta / ||g||_beta
};

struct SectorialAuditReport {
  SectorialOperator which;
  double omega_prime;
  double bound;
  double max_ratio = 0.0;
  std::vector<SectorialSample> samples;

  static constexpr double kRelativeSlack = 1e-9;
  bool pass(const SectorialSample& s) const { return s.ratio <= bound * (1.0 + kRelativeSlack); }
  bool passed() const { return max_ratio <= bound * (1.0 + kRelativeSlack); }
};

/// Sector bound M(omega'): -1/cos(omega') for nabla_h, -1/cos(omega') + 4 for A_h.
double sectorial_bound(SectorialOperator which, double omega_prime);

/// Measures ||lambda R(lambda, B) g||_beta / ||g||_beta for each sample, with
/// g taken as a polygonal line. Requires pi/2 < omega' <= pi and
/// |arg lambda| >= omega' for every sample (the closed complement of the
/// sector; the bound is continuous in omega').
SectorialAuditReport sectorial_audit(SectorialOperator which, const RealGridFn& g,
                                     HolderExponent beta, double omega_prime,
                                     std::span<const Complex> lambdas);

/// A_h audit for a continuous f with samples g = f|grid. The resolvent and f
/// are evaluated on the grid refined by `refine`, so the (I - I_h) f part of
/// R(lambda, A_h) f is resolved between nodes.
SectorialAuditReport sectorial_audit_extended(const std::function<double(double)>& f,
                                              const UniformGrid& grid, std::size_t refine,
                                              HolderExponent beta, double omega_prime,
                                              std::span<const Complex> lambdas);

/// Writes `re_lambda,im_lambda,ratio,bound,pass` rows.
void write_audit_csv(std::ostream& os, const SectorialAuditReport& report, bool header = true);

/// lambda = r e^{i theta} for log-spaced radii in [r_min, r_max]; `total`
/// samples are split across the rays as evenly as possible.
std::vector<Complex> ray_samples(std::span<const double> angles, double r_min, double r_max,
                                 std::size_t total);

}  // namespace fracnabla::ops
