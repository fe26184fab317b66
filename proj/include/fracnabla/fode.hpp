#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "fracnabla/grid.hpp"
#include "fracnabla/scalars.hpp"

namespace fracnabla::fode {

/// D^alpha y = F(t, y) on [0,1] with y(0) = y0 = 0.
struct FodeProblem {
  FracOrder alpha;
  std::function<double(double t, double y)> rhs;
  double y0 = 0.0;
  std::optional<std::function<double(double)>> exact;
  // Lower end of the admissible y range; Newton/bisection iterates are
  // projected onto it before F is evaluated.
  std::optional<double> y_lower_bound;
};

struct SolverOptions {
  double newton_tol = 1e-12;
  int max_iter = 50;
};

struct FodeSolution {
  RealGridFn y;
  std::vector<double> residuals;  // |h^-alpha sum w_j y_{k-j} - F(t_k, y_k)| per node, [0] = 0
  std::size_t bisection_steps = 0;  // nodes where Newton gave way to bisection
};

/// Implicit Gruenwald-Letnikov stepping: for k = 1..n solve
///   h^-alpha (y_k + sum_{j=1}^{k} w_j y_{k-j}) = F(t_k, y_k)
/// for y_k by damped Newton (central-difference slope), with a bracketing
/// bisection fallback. Throws StepFailure when neither reaches newton_tol.
FodeSolution solve_gl_implicit(const FodeProblem& problem, const UniformGrid& grid,
                               const SolverOptions& options = {});

/// The benchmark problem with exact solution y = t^8 - 3 t^(4+alpha/2) + (9/4) t^alpha:
///   F(t,y) = 40320/Gamma(9-alpha) t^(8-alpha)
///            - 3 Gamma(5+alpha/2)/Gamma(5-alpha/2) t^(4-alpha/2)
///            + (9/4) Gamma(alpha+1) + ((3/2) t^(alpha/2) - t^4)^3 - y^(3/2).
/// F throws DomainError for y < -1e-12; smaller negatives are read as 0.
FodeProblem example2_problem(FracOrder alpha);

enum class TableKind { example1, example2 };

struct TableParams {
  TableKind kind = TableKind::example1;
  double mu = 1.5;  // example1 only
  double alpha = 0.3;
  std::vector<double> betas{0.1};
  std::vector<int> h_exponents{6, 7, 8, 9, 10, 11, 12};  // h = 2^-m
  SolverOptions solver{};
  bool self_test = false;  // compare the exact reference with itself
};

struct ConvergenceRow {
  int h_exponent;
  double h;
  double beta;
  double error;
};

/// Hoelderian error max_{i<j} |e(t_i) - e(t_j)| / |t_i - t_j|^beta between the
/// exact reference and the discrete result, for every (beta, h) pair. Rows
/// are ordered by beta, then by h_exponents.
std::vector<ConvergenceRow> convergence_table(const TableParams& params);

/// `h,beta,error` rows, h rendered as 2^-m.
void write_table_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

/// One h column and one error column per beta, 7 decimals.
void write_table_markdown(std::ostream& os, const std::vector<ConvergenceRow>& rows);

}  // namespace fracnabla::fode
