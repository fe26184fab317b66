#include "fracnabla/grid.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace fracnabla {

UniformGrid::UniformGrid(double h) : h_(h), n_(0) {
  if (!(h > 0.0 && h < 1.0)) {
    throw DomainError("UniformGrid: step must lie in (0,1), got " + std::to_string(h));
  }
  auto n = static_cast<std::size_t>(std::floor(1.0 / h));
  while (static_cast<double>(n + 1) * h <= 1.0) ++n;
  while (n > 1 && static_cast<double>(n) * h > 1.0 + 1e-12) --n;
  n_ = n;
}

UniformGrid UniformGrid::dyadic(int m) {
  if (m < 1 || m > 30) throw DomainError("UniformGrid::dyadic: exponent must be in [1,30]");
  return UniformGrid(std::ldexp(1.0, -m));
}

Eigen::VectorXd UniformGrid::nodes() const {
  Eigen::VectorXd t(static_cast<Eigen::Index>(size()));
  for (std::size_t k = 0; k < size(); ++k) t(static_cast<Eigen::Index>(k)) = node(k);
  return t;
}

UniformGrid UniformGrid::refined(std::size_t factor) const {
  if (factor < 1) throw DomainError("UniformGrid::refined: factor must be >= 1");
  return UniformGrid(h_ / static_cast<double>(factor));
}

std::string format_full(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const RealGridFn& g) {
  os << "t,value\n";
  for (std::size_t k = 0; k < g.size(); ++k) {
    os << format_full(g.grid().node(k)) << ',' << format_full(g[k]) << '\n';
  }
}

namespace {

bool parse_double(std::string_view text, double& out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

RealGridFn read_csv(std::istream& is) {
  std::vector<double> ts;
  std::vector<double> vs;
  std::string line;
  std::size_t lineno = 0;
  bool seen_content = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected two comma-separated fields",
                       lineno);
    }
    double t = 0.0;
    double v = 0.0;
    const bool ok_t = parse_double(std::string_view(line).substr(0, comma), t);
    const bool ok_v = parse_double(std::string_view(line).substr(comma + 1), v);
    if (!seen_content && !ok_t && !ok_v) {
      seen_content = true;  // header row
      continue;
    }
    seen_content = true;
    if (!ok_t || !ok_v || !std::isfinite(t) || !std::isfinite(v)) {
      throw ParseError("line " + std::to_string(lineno) + ": malformed number", lineno);
    }
    ts.push_back(t);
    vs.push_back(v);
  }
  if (ts.size() < 2) throw ParseError("csv: need at least two data rows", lineno);
  if (ts.front() != 0.0) throw ParseError("csv: first node must be t = 0", lineno);
  const std::size_t n = ts.size() - 1;
  const double h = ts.back() / static_cast<double>(n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (std::abs(ts[k] - static_cast<double>(k) * h) > 1e-9 * h) {
      throw ParseError("csv: nodes are not uniformly spaced at row " + std::to_string(k), lineno);
    }
  }
  UniformGrid grid = [&] {
    try {
      return UniformGrid(h);
    } catch (const DomainError& e) {
      throw ParseError(std::string("csv: ") + e.what(), lineno);
    }
  }();
  if (grid.size() != ts.size()) {
    throw ParseError("csv: nodes do not cover [0,1] (expected " + std::to_string(grid.size()) +
                         " rows for h = " + format_full(h) + ")",
                     lineno);
  }
  return RealGridFn(grid, Eigen::Map<const Eigen::VectorXd>(vs.data(), static_cast<Eigen::Index>(vs.size())));
}

}  // namespace fracnabla
