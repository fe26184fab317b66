#include "fracnabla/fode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>

#include "fracnabla/frac.hpp"
#include "fracnabla/specfn.hpp"

namespace fracnabla::fode {

namespace {

class StepEquation {
 public:
  StepEquation(const FodeProblem& p, std::size_t k, double t, double scale, double history)
      : p_(p), k_(k), t_(t), scale_(scale), history_(history) {}

  double project(double y) const {
    return p_.y_lower_bound && y < *p_.y_lower_bound ? *p_.y_lower_bound : y;
  }

  double operator()(double y) const {
    double f = 0.0;
    try {
      f = p_.rhs(t_, y);
    } catch (const DomainError& e) {
      throw DomainError("rhs undefined at (t = " + format_full(t_) + ", y = " + format_full(y) +
                        ") for node " + std::to_string(k_) + ": " + e.what());
    }
    if (!std::isfinite(f)) {
      throw DomainError("rhs not finite at (t = " + format_full(t_) + ", y = " + format_full(y) +
                        ") for node " + std::to_string(k_));
    }
    return scale_ * (y + history_) - f;
  }

 private:
  const FodeProblem& p_;
  std::size_t k_;
  double t_;
  double scale_;
  double history_;
};

bool newton(const StepEquation& eq, double& y, double tol, int max_iter) {
  y = eq.project(y);
  double r = eq(y);
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(r) <= tol) return true;
    const double delta = 1e-7 * std::max(1.0, std::abs(y));
    const double lo = eq.project(y - delta);
    const double hi = y + delta;
    const double slope = (eq(hi) - eq(lo)) / (hi - lo);
    if (!std::isfinite(slope) || slope == 0.0) return false;
    const double step = -r / slope;
    double damping = 1.0;
    double y_next = eq.project(y + step);
    double r_next = eq(y_next);
    while (std::abs(r_next) >= std::abs(r) && damping > 1e-6) {
      damping *= 0.5;
      y_next = eq.project(y + damping * step);
      r_next = eq(y_next);
    }
    if (std::abs(r_next) >= std::abs(r)) return false;
    y = y_next;
    r = r_next;
  }
  return std::abs(r) <= tol;
}

bool bisection(const StepEquation& eq, double centre, double& y, double tol, double& residual) {
  centre = eq.project(centre);
  double lo = 0.0;
  double hi = 0.0;
  double r_lo = 0.0;
  double r_hi = 0.0;
  bool bracketed = false;
  for (double d = 1.0; d < 1e12; d *= 2.0) {
    lo = eq.project(centre - d);
    hi = centre + d;
    r_lo = eq(lo);
    r_hi = eq(hi);
    if (r_lo == 0.0 || r_hi == 0.0 || (r_lo < 0.0) != (r_hi < 0.0)) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    residual = std::min(std::abs(r_lo), std::abs(r_hi));
    return false;
  }
  if (std::abs(r_lo) <= tol) {
    y = lo;
    residual = std::abs(r_lo);
    return true;
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double r_mid = eq(mid);
    if (std::abs(r_mid) <= tol) {
      y = mid;
      residual = std::abs(r_mid);
      return true;
    }
    if (!(mid > lo && mid < hi)) {
      y = mid;
      residual = std::abs(r_mid);
      return false;
    }
    if ((r_mid < 0.0) == (r_lo < 0.0)) {
      lo = mid;
      r_lo = r_mid;
    } else {
      hi = mid;
    }
  }
  y = 0.5 * (lo + hi);
  residual = std::abs(eq(y));
  return residual <= tol;
}

}  // namespace

FodeSolution solve_gl_implicit(const FodeProblem& problem, const UniformGrid& grid,
                               const SolverOptions& options) {
  if (!(options.newton_tol > 0.0)) throw DomainError("solve_gl_implicit: newton_tol must be > 0");
  if (problem.y0 != 0.0) throw DomainError("solve_gl_implicit: requires y(0) = 0");
  const std::size_t n = grid.n();
  const specfn::GLWeights gl = specfn::gl_weights(problem.alpha, n);
  const double scale = std::pow(grid.h(), -problem.alpha.value());
  Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n + 1));
  std::vector<double> residuals(n + 1, 0.0);
  std::size_t bisections = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto ki = static_cast<Eigen::Index>(k);
    const double history = gl.w.segment(1, ki).cwiseProduct(y.head(ki).reverse()).sum();
    const StepEquation eq(problem, k, grid.node(k), scale, history);
    double yk = y(ki - 1);
    if (!newton(eq, yk, options.newton_tol, options.max_iter)) {
      ++bisections;
      double residual = 0.0;
      if (!bisection(eq, y(ki - 1), yk, options.newton_tol, residual)) {
        throw StepFailure("solve_gl_implicit: no root at node " + std::to_string(k) +
                              " (t = " + format_full(grid.node(k)) +
                              ", last residual = " + format_full(residual) + ")",
                          k, residual);
      }
    }
    y(ki) = yk;
    residuals[k] = std::abs(eq(yk));
  }
  return FodeSolution{RealGridFn(grid, std::move(y)), std::move(residuals), bisections};
}

FodeProblem example2_problem(FracOrder alpha) {
  const double a = alpha.value();
  using specfn::ln_gamma;
  const double c8 = std::exp(std::log(40320.0) - ln_gamma(9.0 - a));
  const double c4 = 3.0 * std::exp(ln_gamma(5.0 + 0.5 * a) - ln_gamma(5.0 - 0.5 * a));
  const double c0 = 2.25 * std::exp(ln_gamma(a + 1.0));
  auto rhs = [a, c8, c4, c0](double t, double y) {
    if (y < -1e-12) {
      throw DomainError("example2 rhs: y^(3/2) undefined for y = " + format_full(y));
    }
    const double yp = y > 0.0 ? y : 0.0;
    const double inner = 1.5 * std::pow(t, 0.5 * a) - std::pow(t, 4.0);
    return c8 * std::pow(t, 8.0 - a) - c4 * std::pow(t, 4.0 - 0.5 * a) + c0 +
           inner * inner * inner - yp * std::sqrt(yp);
  };
  auto exact = [a](double t) {
    return std::pow(t, 8.0) - 3.0 * std::pow(t, 4.0 + 0.5 * a) + 2.25 * std::pow(t, a);
  };
  return FodeProblem{alpha, rhs, 0.0, exact, 0.0};
}

std::vector<ConvergenceRow> convergence_table(const TableParams& params) {
  if (params.betas.empty()) throw DomainError("convergence_table: need at least one beta");
  const FracOrder alpha(params.alpha);
  std::vector<HolderExponent> betas;
  for (double b : params.betas) betas.emplace_back(b);

  // results[beta index][h index]
  std::vector<std::vector<ConvergenceRow>> results(betas.size());
  for (int m : params.h_exponents) {
    const UniformGrid grid = UniformGrid::dyadic(m);
    RealGridFn reference(grid);
    RealGridFn approx(grid);
    if (params.kind == TableKind::example1) {
      const double mu = params.mu;
      reference = sample(
          [&](double t) { return frac::exact_frac_deriv_power_log(mu, alpha, t); }, grid);
      approx = params.self_test ? reference
                                : frac::frac_nabla(sample(frac::power_log_fn(mu), grid), alpha);
    } else {
      const FodeProblem problem = example2_problem(alpha);
      reference = sample(*problem.exact, grid);
      approx = params.self_test ? reference : solve_gl_implicit(problem, grid, params.solver).y;
    }
    for (std::size_t b = 0; b < betas.size(); ++b) {
      results[b].push_back(
          {m, grid.h(), betas[b].value(), holder_error(reference, approx, betas[b])});
    }
  }
  std::vector<ConvergenceRow> rows;
  for (auto& per_beta : results) rows.insert(rows.end(), per_beta.begin(), per_beta.end());
  return rows;
}

void write_table_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "h,beta,error\n";
  for (const auto& r : rows) {
    os << "2^-" << r.h_exponent << ',' << format_full(r.beta) << ',' << format_full(r.error)
       << '\n';
  }
}

void write_table_markdown(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  std::vector<double> betas;
  std::vector<int> exps;
  std::map<std::pair<int, double>, double> cell;
  for (const auto& r : rows) {
    if (std::find(betas.begin(), betas.end(), r.beta) == betas.end()) betas.push_back(r.beta);
    if (std::find(exps.begin(), exps.end(), r.h_exponent) == exps.end()) {
      exps.push_back(r.h_exponent);
    }
    cell[{r.h_exponent, r.beta}] = r.error;
  }
  char buf[64];
  os << "| h |";
  for (double b : betas) {
    std::snprintf(buf, sizeof buf, " Error (beta = %g) |", b);
    os << buf;
  }
  os << "\n|---|";
  for (std::size_t i = 0; i < betas.size(); ++i) os << "---|";
  os << '\n';
  for (int m : exps) {
    os << "| 2^-" << m << " |";
    for (double b : betas) {
      const auto it = cell.find({m, b});
      if (it == cell.end()) {
        os << "  |";
      } else {
        std::snprintf(buf, sizeof buf, " %.7f |", it->second);
        os << buf;
      }
    }
    os << '\n';
  }
}

}  // namespace fracnabla::fode
