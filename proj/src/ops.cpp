#include "fracnabla/ops.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace fracnabla::ops {

namespace {

constexpr std::size_t kRenormalizeEvery = 64;

Complex one_minus_lambda_h(Complex lambda, double h) {
  const Complex q = 1.0 - lambda * h;
  if (std::abs(q) <= 1e-14) {
    throw SingularResolventError("resolvent: lambda = 1/h lies in the spectrum of nabla_h");
  }
  return q;
}

}  // namespace

Eigen::VectorXcd resolvent_powers(Complex lambda, double h, std::size_t n) {
  const Complex q = one_minus_lambda_h(lambda, h);
  const Complex inv_q = 1.0 / q;
  const Complex log_q = std::log(q);
  Eigen::VectorXcd p(static_cast<Eigen::Index>(n + 1));
  Complex cur = inv_q;
  for (std::size_t j = 0; j <= n; ++j) {
    if (j > 0) {
      if (j % kRenormalizeEvery == 0) {
        cur = std::exp(-static_cast<double>(j + 1) * log_q);
      } else {
        cur *= inv_q;
      }
    }
    p(static_cast<Eigen::Index>(j)) = cur;
  }
  return p;
}

ComplexGridFn resolvent_nabla(Complex lambda, const ComplexGridFn& g) {
  const double h = g.grid().h();
  const std::size_t n = g.grid().n();
  const Eigen::VectorXcd p = resolvent_powers(lambda, h, n);
  const auto& v = g.values();
  Eigen::VectorXcd out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    out(k) = -h * p.head(k + 1).cwiseProduct(v.head(k + 1).reverse()).sum();
  }
  return ComplexGridFn(g.grid(), std::move(out));
}

ComplexGridFn resolvent_nabla(Complex lambda, const RealGridFn& g) {
  return resolvent_nabla(lambda, to_complex(g));
}

ExtendedResolvent::ExtendedResolvent(Complex lambda, const RealGridFn& g)
    : lambda_(lambda), g_(g), nodal_(g.grid()) {
  if (lambda == Complex(0.0, 0.0)) {
    throw SingularResolventError("resolvent_extended: lambda = 0 is excluded");
  }
  nodal_ = resolvent_nabla(lambda, g);
}

Complex ExtendedResolvent::operator()(double x) const { return interpolate(nodal_, x); }

Complex ExtendedResolvent::operator()(double x, const std::function<double(double)>& f) const {
  const double remainder = f(x) - interpolate(g_, x);
  return interpolate(nodal_, x) + remainder / lambda_;
}

ExtendedResolvent resolvent_extended(Complex lambda, const RealGridFn& g) {
  return ExtendedResolvent(lambda, g);
}

double sectorial_bound(SectorialOperator which, double omega_prime) {
  const double base = -1.0 / std::cos(omega_prime);
  return which == SectorialOperator::nabla ? base : base + 4.0;
}

namespace {

SectorialAuditReport start_report(SectorialOperator which, double omega_prime,
                                  std::span<const Complex> lambdas) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (!(omega_prime > half_pi && omega_prime <= std::numbers::pi)) {
    throw DomainError("sectorial_audit: omega' must lie in (pi/2, pi]");
  }
  for (const Complex& l : lambdas) {
    if (l == Complex(0.0, 0.0) || std::abs(std::arg(l)) < omega_prime - 1e-12) {
      throw DomainError("sectorial_audit: sample (" + std::to_string(l.real()) + ", " +
                        std::to_string(l.imag()) + ") lies inside the sector");
    }
  }
  SectorialAuditReport report{which, omega_prime, sectorial_bound(which, omega_prime), 0.0, {}};
  report.samples.reserve(lambdas.size());
  return report;
}

void record(SectorialAuditReport& report, Complex lambda, double ratio) {
  report.samples.push_back({lambda, ratio});
  if (ratio > report.max_ratio) report.max_ratio = ratio;
}

}  // namespace

SectorialAuditReport sectorial_audit(SectorialOperator which, const RealGridFn& g,
                                     HolderExponent beta, double omega_prime,
                                     std::span<const Complex> lambdas) {
  SectorialAuditReport report = start_report(which, omega_prime, lambdas);
  const double norm = holder_seminorm(g, beta);
  for (const Complex& l : lambdas) {
    double ratio = 0.0;
    if (norm > 0.0) {
      // For polygonal g, R(lambda, A_h) g = I_h R(lambda, nabla_h) g, whose
      // seminorm is attained at vertex pairs; both cases reduce to the nodes.
      ratio = std::abs(l) * holder_seminorm(resolvent_nabla(l, g), beta) / norm;
    }
    record(report, l, ratio);
  }
  return report;
}

SectorialAuditReport sectorial_audit_extended(const std::function<double(double)>& f,
                                              const UniformGrid& grid, std::size_t refine,
                                              HolderExponent beta, double omega_prime,
                                              std::span<const Complex> lambdas) {
  SectorialAuditReport report =
      start_report(SectorialOperator::extended, omega_prime, lambdas);
  const UniformGrid fine = grid.refined(refine);
  const RealGridFn g = sample(f, grid);
  const RealGridFn f_fine = sample(f, fine);
  const double norm = holder_seminorm(f_fine, beta);
  for (const Complex& l : lambdas) {
    double ratio = 0.0;
    if (norm > 0.0) {
      const ExtendedResolvent res(l, g);
      Eigen::VectorXcd vals(static_cast<Eigen::Index>(fine.size()));
      for (std::size_t i = 0; i < fine.size(); ++i) {
        const double x = std::min(fine.node(i), 1.0);
        const double remainder = f_fine[i] - interpolate(g, x);
        vals(static_cast<Eigen::Index>(i)) = interpolate(res.nodal(), x) + remainder / l;
      }
      ratio = std::abs(l) * holder_seminorm(ComplexGridFn(fine, std::move(vals)), beta) / norm;
    }
    record(report, l, ratio);
  }
  return report;
}

void write_audit_csv(std::ostream& os, const SectorialAuditReport& report, bool header) {
  if (header) os << "re_lambda,im_lambda,ratio,bound,pass\n";
  for (const auto& s : report.samples) {
    os << format_full(s.lambda.real()) << ',' << format_full(s.lambda.imag()) << ','
       << format_full(s.ratio) << ',' << format_full(report.bound) << ','
       << (report.pass(s) ? 1 : 0) << '\n';
  }
}

std::vector<Complex> ray_samples(std::span<const double> angles, double r_min, double r_max,
                                 std::size_t total) {
  if (angles.empty()) return {};
  if (!(r_min > 0.0 && r_max >= r_min)) throw DomainError("ray_samples: need 0 < r_min <= r_max");
  std::vector<Complex> out;
  out.reserve(total);
  const std::size_t rays = angles.size();
  for (std::size_t a = 0; a < rays; ++a) {
    const std::size_t count = total / rays + (a < total % rays ? 1 : 0);
    const double lo = std::log(r_min);
    const double hi = std::log(r_max);
    for (std::size_t i = 0; i < count; ++i) {
      const double frac = count > 1 ? static_cast<double>(i) / static_cast<double>(count - 1) : 0.0;
      out.push_back(std::polar(std::exp(lo + frac * (hi - lo)), angles[a]));
    }
  }
  return out;
}

}  // namespace fracnabla::ops
