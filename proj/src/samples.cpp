#include "fracnabla/samples.hpp"

#include <cmath>

namespace fracnabla::samples {

double HolderTestFunction::operator()(double t) const {
  double s = 0.0;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    s += t == 0.0 ? 0.0 : power_coeffs[i] * std::pow(t, powers[i]);
  }
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    s += sine_coeffs[i] * std::sin(frequencies[i] * t);
  }
  return s;
}

HolderTestFunction random_holder_function(std::mt19937_64& rng, double beta) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> power(beta, 2.5);
  std::uniform_real_distribution<double> freq(0.5, 20.0);
  HolderTestFunction f;
  for (int i = 0; i < 3; ++i) {
    f.power_coeffs.push_back(coeff(rng));
    f.powers.push_back(power(rng));
  }
  for (int i = 0; i < 2; ++i) {
    f.sine_coeffs.push_back(coeff(rng) / 4.0);
    f.frequencies.push_back(freq(rng));
  }
  return f;
}

RealGridFn random_walk(const UniformGrid& grid, std::mt19937_64& rng) {
  std::normal_distribution<double> step(0.0, 1.0);
  Eigen::VectorXd v(static_cast<Eigen::Index>(grid.size()));
  v(0) = 0.0;
  const double scale = std::sqrt(grid.h());
  for (Eigen::Index k = 1; k < v.size(); ++k) v(k) = v(k - 1) + scale * step(rng);
  return RealGridFn(grid, std::move(v));
}

}  // namespace fracnabla::samples
