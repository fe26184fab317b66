#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fracnabla/grid.hpp"

/// Seeded test inputs for audits of the H^beta estimates.
namespace fracnabla::samples {

/// f(t) = sum_i c_i t^{p_i} + sum_i a_i sin(w_i t), so f(0) = 0 and f is
/// Hoelder of every order up to min(1, min p_i).
struct HolderTestFunction {
  std::vector<double> power_coeffs;
  std::vector<double> powers;
  std::vector<double> sine_coeffs;
  std::vector<double> frequencies;

  double operator()(double t) const;
};

/// Random HolderTestFunction with powers in [beta, 2.5] and frequencies up to 20.
HolderTestFunction random_holder_function(std::mt19937_64& rng, double beta);

/// Random walk v_0 = 0, v_k = v_{k-1} + sqrt(h) N(0,1).
RealGridFn random_walk(const UniformGrid& grid, std::mt19937_64& rng);

}  // namespace fracnabla::samples
