#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <type_traits>
#include <utility>

#include <Eigen/Core>

#include "fracnabla/errors.hpp"
#include "fracnabla/scalars.hpp"

namespace fracnabla {

/// Uniform subdivision of [0,1] with step h, n = floor(1/h) and t_k = k h.
class UniformGrid {
 public:
  explicit UniformGrid(double h);

  /// Grid with h = 2^-m; n h = 1 exactly.
  static UniformGrid dyadic(int m);

  double h() const noexcept { return h_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ + 1; }
  double node(std::size_t k) const noexcept { return static_cast<double>(k) * h_; }
  Eigen::VectorXd nodes() const;

  /// Same grid refined by an integer factor (step h / factor).
  UniformGrid refined(std::size_t factor) const;

  friend bool operator==(const UniformGrid& a, const UniformGrid& b) noexcept {
    return a.h_ == b.h_ && a.n_ == b.n_;
  }

 private:
  double h_;
  std::size_t n_;
};

template <typename Scalar>
using NodeVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Values of a function at the nodes of a UniformGrid.
///
/// A GridFn also stands for the polygonal line through its vertices
/// (t_k, v_k); see ops::interpolate.
template <typename Scalar>
class GridFn {
 public:
  using scalar_type = Scalar;
  using vector_type = NodeVector<Scalar>;

  explicit GridFn(UniformGrid grid) : grid_(grid), values_(vector_type::Zero(index(grid.size()))) {}

  GridFn(UniformGrid grid, vector_type values) : grid_(grid), values_(std::move(values)) {
    if (static_cast<std::size_t>(values_.size()) != grid_.size()) {
      throw DimensionError("GridFn: expected " + std::to_string(grid_.size()) + " values, got " +
                           std::to_string(values_.size()));
    }
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
      if (!is_finite(values_(k))) {
        throw EvaluationError("GridFn: non-finite value at node " + std::to_string(k),
                              static_cast<std::size_t>(k));
      }
    }
  }

  const UniformGrid& grid() const noexcept { return grid_; }
  const vector_type& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return grid_.size(); }

  Scalar operator[](std::size_t k) const { return values_(index(k)); }

  /// True when v_0 = 0, the anchoring condition of H^beta.
  bool anchored() const { return values_(0) == Scalar(0); }

  GridFn& operator+=(const GridFn& o) {
    require_same_grid(o);
    values_ += o.values_;
    return *this;
  }
  GridFn& operator-=(const GridFn& o) {
    require_same_grid(o);
    values_ -= o.values_;
    return *this;
  }
  GridFn& operator*=(Scalar c) {
    values_ *= c;
    return *this;
  }

  friend GridFn operator+(GridFn a, const GridFn& b) { return a += b; }
  friend GridFn operator-(GridFn a, const GridFn& b) { return a -= b; }
  friend GridFn operator*(Scalar c, GridFn a) { return a *= c; }
  friend GridFn operator*(GridFn a, Scalar c) { return a *= c; }

  void require_same_grid(const GridFn& o) const {
    if (!(grid_ == o.grid_)) throw DimensionError("GridFn: operands live on different grids");
  }

 private:
  static Eigen::Index index(std::size_t k) { return static_cast<Eigen::Index>(k); }
  static bool is_finite(const Scalar& v) {
    if constexpr (std::is_floating_point_v<Scalar>) {
      return std::isfinite(v);
    } else {
      return std::isfinite(v.real()) && std::isfinite(v.imag());
    }
  }

  UniformGrid grid_;
  vector_type values_;
};

using RealGridFn = GridFn<double>;
using ComplexGridFn = GridFn<std::complex<double>>;

/// Promotes a real grid function to complex values.
inline ComplexGridFn to_complex(const RealGridFn& g) {
  return ComplexGridFn(g.grid(), g.values().cast<std::complex<double>>());
}

/// v_k = f(t_k). Throws EvaluationError naming the first non-finite node.
template <typename F>
RealGridFn sample(F&& f, const UniformGrid& grid) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid.node(k);
    const double y = f(t);
    if (!std::isfinite(y)) {
      throw EvaluationError("sample: non-finite value at node " + std::to_string(k) +
                                " (t = " + std::to_string(t) + ")",
                            k);
    }
    v(static_cast<Eigen::Index>(k)) = y;
  }
  return RealGridFn(grid, std::move(v));
}

namespace detail {

// max over node pairs with gap index 1 <= d <= max_gap of |v_{i+d} - v_i| / (d h)^beta.
template <typename Scalar>
double max_holder_quotient(const GridFn<Scalar>& g, double beta, std::size_t max_gap) {
  const auto& v = g.values();
  const Eigen::Index size = v.size();
  const Eigen::Index top = std::min<Eigen::Index>(static_cast<Eigen::Index>(max_gap), size - 1);
  const double h = g.grid().h();
  double best = 0.0;
  for (Eigen::Index d = 1; d <= top; ++d) {
    const Eigen::Index len = size - d;
    const double diff = (v.tail(len) - v.head(len)).cwiseAbs().maxCoeff();
    const double q = diff / std::pow(static_cast<double>(d) * h, beta);
    if (q > best) best = q;
  }
  return best;
}

}  // namespace detail

/// Hoelder seminorm of the polygonal line through g's vertices, which equals
/// the maximum of the Hoelder quotient over vertex pairs.
template <typename Scalar>
double holder_seminorm(const GridFn<Scalar>& g, HolderExponent beta) {
  if (g.size() < 2) throw DomainError("holder_seminorm: need at least two nodes");
  return detail::max_holder_quotient(g, beta.value(), g.size() - 1);
}

/// Hoelder seminorm restricted to node pairs with 0 < t_j - t_i <= delta.
template <typename Scalar>
double modulus(const GridFn<Scalar>& g, HolderExponent beta, double delta) {
  if (!(delta > 0.0)) throw DomainError("modulus: delta must be positive");
  const double gaps = delta / g.grid().h();
  // Tolerate rounding in delta / h when delta is an exact multiple of h.
  const double rounded = std::floor(gaps * (1.0 + 1e-12));
  const std::size_t max_gap =
      rounded >= static_cast<double>(g.size()) ? g.size() : static_cast<std::size_t>(rounded);
  return detail::max_holder_quotient(g, beta.value(), max_gap);
}

/// Hoelder seminorm of the nodewise difference g1 - g2.
template <typename Scalar>
double holder_error(const GridFn<Scalar>& g1, const GridFn<Scalar>& g2, HolderExponent beta) {
  g1.require_same_grid(g2);
  return holder_seminorm(g1 - g2, beta);
}

/// Sup norm over nodes.
template <typename Scalar>
double sup_norm(const GridFn<Scalar>& g) {
  return g.values().cwiseAbs().maxCoeff();
}

/// Writes `t,value` rows with 17 significant digits.
void write_csv(std::ostream& os, const RealGridFn& g);

/// Reads `t,value` rows written by write_csv. The t column must start at 0
/// and be uniformly spaced; blank lines are ignored.
RealGridFn read_csv(std::istream& is);

/// Formats a double with 17 significant digits.
std::string format_full(double x);

}  // namespace fracnabla
