#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fracnabla/fracnabla.hpp"

namespace fracnabla::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<double> alpha_flag;
  double alpha = 0.3;
  std::vector<double> betas;
  double mu = 1.5;
  std::vector<int> h_exponents;
  std::string out = "-";
  std::string format = "csv";
  double newton_tol = 1e-12;
  std::uint64_t seed = 20240611;

  // weights
  std::size_t n = 0;
  // frac-deriv
  std::string function = "power-log";
  std::string input;
  std::string mode = "nabla-alpha";
  std::size_t refine = 1;
  // audit
  std::string which;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty() || cfg.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + cfg.out + "'");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing output file '" + cfg.out + "'");
}

void require_unit(double v, const char* flag) {
  if (!(v > 0.0 && v < 1.0)) {
    throw UsageError(std::string(flag) + " must lie in (0,1), got " + format_full(v));
  }
}

std::vector<int> exponents_or(const std::vector<int>& given, int lo, int hi) {
  if (!given.empty()) return given;
  std::vector<int> out;
  for (int m = lo; m <= hi; ++m) out.push_back(m);
  return out;
}

void check_exponents(const std::vector<int>& exps) {
  for (int m : exps) {
    if (m < 1 || m > 20) throw UsageError("--h-exp must lie in [1,20], got " + std::to_string(m));
  }
}

int cmd_weights(const RunConfig& cfg, std::ostream& out) {
  require_unit(cfg.alpha, "--alpha");
  const auto gl = specfn::gl_weights(FracOrder(cfg.alpha), cfg.n);
  std::ostringstream os;
  os << "j,w_j\n";
  for (std::size_t j = 0; j < gl.size(); ++j) os << j << ',' << format_full(gl[j]) << '\n';
  emit(cfg, os.str(), out);
  return kOk;
}

int write_rows(const RunConfig& cfg, const std::vector<fode::ConvergenceRow>& rows,
               std::ostream& out) {
  std::ostringstream os;
  if (cfg.format == "md") {
    fode::write_table_markdown(os, rows);
  } else {
    fode::write_table_csv(os, rows);
  }
  emit(cfg, os.str(), out);
  return kOk;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out) {
  require_unit(cfg.alpha, "--alpha");
  fode::TableParams p;
  p.kind = fode::TableKind::example1;
  p.mu = cfg.mu;
  p.alpha = cfg.alpha;
  p.betas = cfg.betas.empty() ? std::vector<double>{0.1} : cfg.betas;
  for (double b : p.betas) require_unit(b, "--beta");
  if (!(cfg.mu > cfg.alpha)) throw UsageError("--mu must exceed --alpha");
  p.h_exponents = exponents_or(cfg.h_exponents, 6, 12);
  check_exponents(p.h_exponents);
  return write_rows(cfg, fode::convergence_table(p), out);
}

int cmd_table2(RunConfig cfg, std::ostream& out) {
  cfg.alpha = cfg.alpha_flag.value_or(0.5);
  require_unit(cfg.alpha, "--alpha");
  if (cfg.betas.empty()) throw UsageError("table2 needs at least one --beta");
  for (double b : cfg.betas) require_unit(b, "--beta");
  if (!(cfg.newton_tol > 0.0)) throw UsageError("--newton-tol must be positive");
  fode::TableParams p;
  p.kind = fode::TableKind::example2;
  p.alpha = cfg.alpha;
  p.betas = cfg.betas;
  p.h_exponents = exponents_or(cfg.h_exponents, 7, 13);
  check_exponents(p.h_exponents);
  p.solver.newton_tol = cfg.newton_tol;
  return write_rows(cfg, fode::convergence_table(p), out);
}

int cmd_frac_deriv(const RunConfig& cfg, std::ostream& out) {
  require_unit(cfg.alpha, "--alpha");
  const FracOrder alpha(cfg.alpha);
  std::optional<RealGridFn> input;
  std::function<double(double)> exact;
  if (cfg.function == "csv") {
    if (cfg.input.empty()) throw UsageError("--function csv needs --input");
    std::ifstream file(cfg.input);
    if (!file) throw IoError("cannot open input file '" + cfg.input + "'");
    input = read_csv(file);
  } else {
    const std::vector<int> exps = exponents_or(cfg.h_exponents, 8, 8);
    if (exps.size() != 1) throw UsageError("frac-deriv takes a single --h-exp");
    check_exponents(exps);
    if (!(cfg.mu > cfg.alpha)) throw UsageError("--mu must exceed --alpha");
    const UniformGrid grid = UniformGrid::dyadic(exps.front());
    const double mu = cfg.mu;
    if (cfg.function == "power") {
      input = sample(frac::power_fn(mu), grid);
      exact = [mu, alpha](double x) { return frac::exact_frac_deriv_power(mu, alpha, x); };
    } else {
      input = sample(frac::power_log_fn(mu), grid);
      exact = [mu, alpha](double x) { return frac::exact_frac_deriv_power_log(mu, alpha, x); };
    }
  }
  if (!input->anchored()) throw UsageError("input must satisfy f(0) = 0");
  const RealGridFn nodal = frac::frac_nabla(*input, alpha);

  std::vector<double> xs;
  const UniformGrid& grid = nodal.grid();
  if (cfg.mode == "extended-alpha") {
    const UniformGrid fine = grid.refined(cfg.refine);
    for (std::size_t i = 0; i < fine.size(); ++i) {
      const double x = fine.node(i);
      if (x <= 1.0) xs.push_back(x);
    }
  } else {
    for (std::size_t k = 0; k < grid.size(); ++k) xs.push_back(grid.node(k));
  }

  std::ostringstream os;
  os << (exact ? "t,approx,exact,pointwise_error\n" : "t,approx\n");
  for (double x : xs) {
    const double approx = frac::frac_extended_nabla_from_nodal(nodal, x);
    os << format_full(x) << ',' << format_full(approx);
    if (exact) {
      const double e = exact(x);
      os << ',' << format_full(e) << ',' << format_full(std::abs(e - approx));
    }
    os << '\n';
  }
  emit(cfg, os.str(), out);
  return kOk;
}

constexpr std::array<double, 3> kRayAngles = {0.6 * std::numbers::pi, 0.75 * std::numbers::pi,
                                              std::numbers::pi};

int audit_sectorial(const RunConfig& cfg, bool extended, std::ostream& out) {
  const HolderExponent beta(cfg.betas.empty() ? 0.1 : cfg.betas.front());
  const int m = cfg.h_exponents.empty() ? 6 : cfg.h_exponents.front();
  const UniformGrid grid = UniformGrid::dyadic(m);
  std::mt19937_64 rng(cfg.seed);
  std::ostringstream os;
  os << "re_lambda,im_lambda,ratio,bound,pass\n";
  bool all_pass = true;
  constexpr std::size_t kFunctions = 20;
  constexpr std::size_t kLambdas = 100;
  const std::vector<ops::Complex> lambdas =
      ops::ray_samples(kRayAngles, 1e-2, 1e4, kLambdas);
  for (std::size_t f = 0; f < kFunctions; ++f) {
    const samples::HolderTestFunction fn = samples::random_holder_function(rng, beta.value());
    const RealGridFn g = sample(fn, grid);
    for (double angle : kRayAngles) {
      std::vector<ops::Complex> ray;
      for (const auto& l : lambdas) {
        if (std::abs(std::arg(l) - angle) < 1e-12) ray.push_back(l);
      }
      const ops::SectorialAuditReport report =
          extended ? ops::sectorial_audit_extended(fn, grid, 4, beta, angle, ray)
                   : ops::sectorial_audit(ops::SectorialOperator::nabla, g, beta, angle, ray);
      ops::write_audit_csv(os, report, false);
      all_pass = all_pass && report.passed();
    }
  }
  emit(cfg, os.str(), out);
  return all_pass ? kOk : kCheckFailed;
}

int audit_balakrishnan(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream os;
  os << "j,alpha,h,quadrature,closed_form,rel_error,pass\n";
  bool all_pass = true;
  constexpr double kTol = 1e-6;
  for (double a : {0.2, 0.5, 0.8}) {
    const FracOrder alpha(a);
    for (int m : {4, 8}) {
      const double h = std::ldexp(1.0, -m);
      for (std::size_t j = 0; j <= 50; ++j) {
        const double q = frac::balakrishnan_weight_oracle(j, alpha, h);
        const double c = frac::balakrishnan_weight_closed_form(j, alpha, h);
        const double rel = std::abs(q - c) / std::abs(c);
        const bool pass = rel <= kTol;
        all_pass = all_pass && pass;
        os << j << ',' << format_full(a) << ',' << format_full(h) << ',' << format_full(q) << ','
           << format_full(c) << ',' << format_full(rel) << ',' << (pass ? 1 : 0) << '\n';
      }
    }
  }
  emit(cfg, os.str(), out);
  return all_pass ? kOk : kCheckFailed;
}

int audit_gamma_lemma(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream os;
  os << "alpha,m_max,worst_m,max_ratio,violations,pass\n";
  bool all_pass = true;
  constexpr std::size_t kMaxM = 10000;
  for (int i = 1; i <= 9; ++i) {
    const FracOrder alpha(i / 10.0);
    double worst = 0.0;
    std::size_t worst_m = 1;
    std::size_t violations = 0;
    for (std::size_t m = 1; m <= kMaxM; ++m) {
      const double ratio =
          std::abs(specfn::phi_alpha_residual(m, alpha)) / specfn::phi_alpha_bound(m, alpha);
      if (ratio > 1.0) ++violations;
      if (ratio > worst) {
        worst = ratio;
        worst_m = m;
      }
    }
    all_pass = all_pass && violations == 0;
    os << format_full(alpha.value()) << ',' << kMaxM << ',' << worst_m << ',' << format_full(worst)
       << ',' << violations << ',' << (violations == 0 ? 1 : 0) << '\n';
  }
  emit(cfg, os.str(), out);
  return all_pass ? kOk : kCheckFailed;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
  if (cfg.which == "sectorial-nabla") return audit_sectorial(cfg, false, out);
  if (cfg.which == "sectorial-extended") return audit_sectorial(cfg, true, out);
  if (cfg.which == "balakrishnan") return audit_balakrishnan(cfg, out);
  if (cfg.which == "gamma-lemma") return audit_gamma_lemma(cfg, out);
  throw UsageError("unknown audit '" + cfg.which + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional nabla operators on uniform grids over [0,1]", "fracnabla"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output file ('-' for stdout)");
  };
  auto add_format = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Table format")
        ->check(CLI::IsMember({"csv", "md"}));
  };

  CLI::App* weights = app.add_subcommand("weights", "Gruenwald-Letnikov weights w_0..w_n");
  weights->add_option("--alpha", cfg.alpha, "Fractional order")->required();
  weights->add_option("--n", cfg.n, "Largest index")->required();
  add_common(weights);

  CLI::App* table1 = app.add_subcommand("table1", "Hoelderian errors for t^mu ln t");
  table1->add_option("--mu", cfg.mu, "Exponent mu")->capture_default_str();
  table1->add_option("--alpha", cfg.alpha, "Fractional order")->capture_default_str();
  table1->add_option("--beta", cfg.betas, "Hoelder exponent (default 0.1)");
  table1->add_option("--h-exp", cfg.h_exponents, "h = 2^-m (repeatable, default 6..12)");
  add_common(table1);
  add_format(table1);

  CLI::App* table2 = app.add_subcommand("table2", "Hoelderian errors for the benchmark FODE");
  table2->add_option("--alpha", cfg.alpha_flag, "Fractional order (default 0.5)");
  table2->add_option("--beta", cfg.betas, "Hoelder exponent (repeatable)");
  table2->add_option("--h-exp", cfg.h_exponents, "h = 2^-m (repeatable, default 7..13)");
  table2->add_option("--newton-tol", cfg.newton_tol, "Residual tolerance per step")
      ->capture_default_str();
  add_common(table2);
  add_format(table2);

  CLI::App* frac_deriv = app.add_subcommand("frac-deriv", "Apply the fractional operator");
  frac_deriv->add_option("--function", cfg.function, "Input function")
      ->check(CLI::IsMember({"power", "power-log", "csv"}))
      ->capture_default_str();
  frac_deriv->add_option("--input", cfg.input, "t,value CSV for --function csv");
  frac_deriv->add_option("--mu", cfg.mu, "Exponent mu")->capture_default_str();
  frac_deriv->add_option("--alpha", cfg.alpha, "Fractional order")->capture_default_str();
  frac_deriv->add_option("--h-exp", cfg.h_exponents, "h = 2^-m (default 8)");
  frac_deriv->add_option("--mode", cfg.mode, "Operator")
      ->check(CLI::IsMember({"nabla-alpha", "extended-alpha"}))
      ->capture_default_str();
  frac_deriv->add_option("--refine", cfg.refine, "Evaluation points per segment (extended-alpha)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(frac_deriv);

  CLI::App* audit = app.add_subcommand("audit", "Numerical checks of the operator bounds");
  audit->add_option("which", cfg.which, "Audit suite")
      ->required()
      ->check(CLI::IsMember({"sectorial-nabla", "sectorial-extended", "balakrishnan",
                             "gamma-lemma"}));
  audit->add_option("--beta", cfg.betas, "Hoelder exponent (sectorial audits, default 0.1)");
  audit->add_option("--h-exp", cfg.h_exponents, "h = 2^-m (sectorial audits, default 6)");
  audit->add_option("--seed", cfg.seed, "Seed for random test functions")->capture_default_str();
  add_common(audit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fracnabla: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (weights->parsed()) return cmd_weights(cfg, out);
    if (table1->parsed()) return cmd_table1(cfg, out);
    if (table2->parsed()) return cmd_table2(cfg, out);
    if (frac_deriv->parsed()) return cmd_frac_deriv(cfg, out);
    if (audit->parsed()) return cmd_audit(cfg, out);
  } catch (const UsageError& e) {
    err << "fracnabla: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "fracnabla: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "fracnabla: " << cfg.input << ": " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "fracnabla: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "fracnabla: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace fracnabla::cli
