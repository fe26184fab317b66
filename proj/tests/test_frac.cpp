#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracnabla/frac.hpp"
#include "fracnabla/samples.hpp"
#include "oracles.hpp"

using namespace fracnabla;
using namespace fracnabla::frac;

namespace {

// Cumulative-weight form h^(1-alpha) sum_j c_j (nabla v)_{k-j}, with
// c_j = Gamma(j+1-alpha) / (Gamma(1-alpha) Gamma(j+1)) from the 50-digit oracle.
RealGridFn frac_nabla_cumulative(const RealGridFn& g, double alpha) {
  const RealGridFn d = ops::nabla(g);
  const double h = g.grid().h();
  std::vector<double> c(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) c[j] = oracle::cumulative_weight(j, alpha);
  Eigen::VectorXd out(static_cast<Eigen::Index>(g.size()));
  for (std::size_t k = 0; k < g.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j <= k; ++j) s += c[j] * d[k - j];
    out(static_cast<Eigen::Index>(k)) = std::pow(h, 1.0 - alpha) * s;
  }
  return RealGridFn(g.grid(), out);
}

}  // namespace

TEST_SUITE("frac") {
  TEST_CASE("frac_nabla examples") {
    const RealGridFn x = sample([](double t) { return t; }, UniformGrid(0.25));
    const RealGridFn d = frac_nabla(x, FracOrder(0.5));
    CHECK(d[0] == 0.0);
    CHECK(d[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d[2] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(frac_nabla(RealGridFn(UniformGrid(0.1)), FracOrder(0.3)).values().isZero(0.0));
    const RealGridFn one = sample([](double) { return 1.0; }, UniformGrid(0.25));
    CHECK_THROWS_AS(frac_nabla(one, FracOrder(0.5)), DomainError);
  }

  TEST_CASE("frac_nabla example 1 error at h = 2^-6") {
    const UniformGrid grid = UniformGrid::dyadic(6);
    const FracOrder alpha(0.3);
    const RealGridFn approx = frac_nabla(sample(power_log_fn(1.5), grid), alpha);
    const RealGridFn exact =
        sample([&](double t) { return exact_frac_deriv_power_log(1.5, alpha, t); }, grid);
    CHECK(std::abs(holder_error(exact, approx, HolderExponent(0.1)) - 0.0079082) <= 1e-5);
  }

  TEST_CASE("frac_extended_nabla reproduces nodes and averages mid-segment") {
    const UniformGrid grid = UniformGrid::dyadic(5);
    const FracOrder alpha(0.4);
    const RealGridFn g = sample(power_log_fn(1.5), grid);
    const RealGridFn nodal = frac_nabla(g, alpha);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(frac_extended_nabla(g, alpha, grid.node(k)) == nodal[k]);
    }
    for (std::size_t k = 1; k < grid.size(); ++k) {
      const double mid = grid.node(k) - 0.5 * grid.h();
      CHECK(frac_extended_nabla(g, alpha, mid) ==
            doctest::Approx(0.5 * (nodal[k - 1] + nodal[k])).epsilon(1e-14));
    }
    CHECK_THROWS_AS(frac_extended_nabla(g, alpha, 1.5), DomainError);
  }

  TEST_CASE("extended error decreases monotonically on t^1.5 ln t") {
    const FracOrder alpha(0.3);
    const HolderExponent beta(0.1);
    double prev = 1e300;
    for (int m = 6; m <= 12; ++m) {
      const UniformGrid grid = UniformGrid::dyadic(m);
      const RealGridFn nodal = frac_nabla(sample(power_log_fn(1.5), grid), alpha);
      const UniformGrid fine = grid.refined(2);
      const RealGridFn ext = ops::resample(nodal, fine);
      const RealGridFn exact =
          sample([&](double t) { return exact_frac_deriv_power_log(1.5, alpha, t); }, fine);
      const double err = holder_error(exact, ext, beta);
      CHECK(err < prev);
      prev = err;
    }
  }

  TEST_CASE("GL weights agree with the cumulative-weight form") {
    std::mt19937_64 rng(61);
    const UniformGrid grid = UniformGrid(1.0 / 100.0);  // j up to 100
    const RealGridFn g = sample(samples::random_holder_function(rng, 0.3), grid);
    for (double a : {0.2, 0.5, 0.8}) {
      const RealGridFn gl = frac_nabla(g, FracOrder(a));
      const RealGridFn cw = frac_nabla_cumulative(g, a);
      const double scale = sup_norm(cw);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(std::abs(gl[k] - cw[k]) <= 1e-9 * std::max(std::abs(cw[k]), 1e-3 * scale));
      }
    }
  }

  TEST_CASE("Balakrishnan oracle examples") {
    for (double a : {0.2, 0.5, 0.8}) {
      const FracOrder alpha(a);
      const double h = 0.1;
      const double q0 = balakrishnan_weight_oracle(0, alpha, h);
      CHECK(q0 == doctest::Approx(std::pow(h, -a) * std::numbers::pi /
                                  std::sin(std::numbers::pi * a))
                      .epsilon(1e-10));
      for (std::size_t j : {1, 7, 30}) {
        const double ratio = balakrishnan_weight_oracle(j, alpha, 0.01) /
                             balakrishnan_weight_oracle(j, alpha, 0.5);
        CHECK(ratio == doctest::Approx(std::pow(0.02, -a)).epsilon(1e-10));
      }
    }
    const double ref = std::pow(0.1, -0.5) *
                       std::exp(oracle::lgamma(5.5) + oracle::lgamma(0.5) - oracle::lgamma(6.0));
    CHECK(balakrishnan_weight_oracle(5, FracOrder(0.5), 0.1) == doctest::Approx(ref).epsilon(1e-8));
    CHECK_THROWS_AS(balakrishnan_weight_oracle(1, FracOrder(0.5), 0.0), DomainError);
  }

  TEST_CASE("Balakrishnan quadrature vs closed form for j <= 50") {
    for (double a : {0.2, 0.5, 0.8}) {
      for (int m : {4, 8}) {
        const double h = std::ldexp(1.0, -m);
        for (std::size_t j = 0; j <= 50; ++j) {
          const double q = balakrishnan_weight_oracle(j, FracOrder(a), h);
          const double c = balakrishnan_weight_closed_form(j, FracOrder(a), h);
          CHECK(std::abs(q - c) <= 1e-6 * std::abs(c));
        }
      }
    }
  }

  TEST_CASE("frac_nabla is linear") {
    std::mt19937_64 rng(62);
    const UniformGrid grid = UniformGrid::dyadic(8);
    const FracOrder alpha(0.35);
    const RealGridFn g1 = samples::random_walk(grid, rng);
    const RealGridFn g2 = sample(samples::random_holder_function(rng, 0.2), grid);
    const double a = 1.7;
    const double b = -0.4;
    const RealGridFn lhs = frac_nabla(a * g1 + b * g2, alpha);
    const RealGridFn rhs = a * frac_nabla(g1, alpha) + b * frac_nabla(g2, alpha);
    CHECK(sup_norm(lhs - rhs) <= 1e-12 * std::max(1.0, sup_norm(rhs)));
  }

  TEST_CASE("complex inputs are handled componentwise") {
    std::mt19937_64 rng(63);
    const UniformGrid grid = UniformGrid::dyadic(5);
    const RealGridFn re = samples::random_walk(grid, rng);
    const RealGridFn im = samples::random_walk(grid, rng);
    const ComplexGridFn z(grid, re.values().cast<ops::Complex>() +
                                    ops::Complex(0, 1) * im.values().cast<ops::Complex>());
    const ComplexGridFn out = frac_nabla(z, FracOrder(0.5));
    const RealGridFn out_re = frac_nabla(re, FracOrder(0.5));
    const RealGridFn out_im = frac_nabla(im, FracOrder(0.5));
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(std::abs(out[k] - ops::Complex(out_re[k], out_im[k])) <= 1e-13);
    }
  }

  TEST_CASE("orders alpha and 1 - alpha compose to nabla") {
    const UniformGrid grid = UniformGrid::dyadic(7);
    const RealGridFn g = sample([](double t) { return std::sin(3 * t) * t; }, grid);
    for (double a : {0.2, 0.5, 0.7}) {
      const FracOrder alpha(a);
      const RealGridFn composed = frac_nabla(frac_nabla(g, alpha), alpha.complement());
      const RealGridFn direct = ops::nabla(g);
      CHECK(sup_norm(composed - direct) <= 1e-11 * sup_norm(direct));
      // Backward-difference Taylor bound: |f''| <= 15 on [0,1].
      const RealGridFn fp =
          sample([](double t) { return std::sin(3 * t) + 3 * t * std::cos(3 * t); }, grid);
      double interior = 0.0;
      for (std::size_t k = 1; k < grid.size(); ++k) {
        interior = std::max(interior, std::abs(composed[k] - fp[k]));
      }
      CHECK(interior <= 7.5 * grid.h());
    }
  }

  TEST_CASE("exact derivative of powers") {
    const FracOrder half(0.5);
    CHECK(exact_frac_deriv_power(1.0, half, 0.25) ==
          doctest::Approx(0.5 / std::exp(oracle::lgamma(1.5))).epsilon(1e-14));
    CHECK(exact_frac_deriv_power(1.0, half, 0.25) == doctest::Approx(0.5641895835).epsilon(1e-9));
    for (double mu : {0.6, 1.5, 3.0}) {
      CHECK(exact_frac_deriv_power(mu, FracOrder(0.3), 1.0) ==
            doctest::Approx(oracle::power_derivative_coeff(mu, 0.3)).epsilon(1e-13));
    }
    CHECK(exact_frac_deriv_power(1.5, half, 0.0) == 0.0);
    CHECK_THROWS_AS(exact_frac_deriv_power(0.4, half, 0.5), DomainError);
    CHECK_THROWS_AS(exact_frac_deriv_power(1.0, half, 1.5), DomainError);
  }

  TEST_CASE("exact derivative of power-log") {
    const FracOrder alpha(0.3);
    const double mu = 1.5;
    const double expected = oracle::power_derivative_coeff(mu, 0.3) *
                            (oracle::digamma(mu + 1.0) - oracle::digamma(mu + 1.0 - 0.3));
    CHECK(exact_frac_deriv_power_log(mu, alpha, 1.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(exact_frac_deriv_power_log(mu, alpha, 1e-8)) < 1e-3);
    CHECK(exact_frac_deriv_power_log(mu, alpha, 0.0) == 0.0);
  }

  TEST_CASE("RL quadrature oracle agrees with the closed forms") {
    CHECK(rl_quadrature_oracle([](double) { return 0.0; }, FracOrder(0.4), 0.7) == 0.0);
    for (double a : {0.2, 0.5, 0.8}) {
      for (double x : {0.1, 0.6, 1.0}) {
        CHECK(rl_quadrature_oracle([](double) { return 1.0; }, FracOrder(a), x) ==
              doctest::Approx(std::pow(x, 1.0 - a) / std::tgamma(2.0 - a)).epsilon(1e-10));
      }
    }
    const FracOrder half(0.5);
    for (double x : {0.3, 0.7, 1.0}) {
      const double q = rl_quadrature_oracle([](double) { return 1.0; }, half, x);
      CHECK(std::abs(q - exact_frac_deriv_power(1.0, half, x)) <= 1e-7);
      const double q2 = rl_quadrature_oracle([](double t) { return 2.5 * std::pow(t, 1.5); },
                                             half, x);
      CHECK(std::abs(q2 - exact_frac_deriv_power(2.5, half, x)) <= 1e-7);
    }
    const FracOrder alpha(0.3);
    auto fp = [](double t) { return t == 0.0 ? 0.0 : 1.5 * std::sqrt(t) * std::log(t) + std::sqrt(t); };
    for (double x : {0.25, 0.5, 1.0}) {
      CHECK(std::abs(rl_quadrature_oracle(fp, alpha, x) - exact_frac_deriv_power_log(1.5, alpha, x)) <=
            1e-6);
    }
    CHECK_THROWS_AS(rl_quadrature_oracle(fp, alpha, 0.0), DomainError);
  }

  TEST_CASE("nabla-alpha of t converges to the exact derivative") {
    const FracOrder half(0.5);
    double prev = 1e300;
    for (int m = 4; m <= 11; ++m) {
      const UniformGrid grid = UniformGrid::dyadic(m);
      const RealGridFn approx = frac_nabla(sample(power_fn(1.0), grid), half);
      const RealGridFn exact =
          sample([&](double t) { return exact_frac_deriv_power(1.0, half, t); }, grid);
      const double err = sup_norm(approx - exact);
      CHECK(err < prev);
      prev = err;
    }
  }
}
