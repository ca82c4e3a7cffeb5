#include <cmath>
#include <string>

#include "gsedf/error.hpp"
#include "gsedf/feasibility.hpp"

namespace gsedf {

namespace {

constexpr std::size_t kMaxBracketsPerPattern = 16;
constexpr double kBisectionRelWidth = 1e-12;

// sum_j 1/2 (1 + eps_j sqrt(1 + c l_j)) - 1
double pattern_value(std::span<const std::int64_t> lambdas, const std::vector<int>& signs, double c) {
  double sum = 0.5 * static_cast<double>(lambdas.size()) - 1.0;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    sum += 0.5 * signs[j] * std::sqrt(1.0 + c * static_cast<double>(lambdas[j]));
  }
  return sum;
}

std::pair<double, double> bisect(std::span<const std::int64_t> lambdas, const std::vector<int>& signs,
                                 double lo, double hi, double f_lo) {
  while (hi - lo > kBisectionRelWidth * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = pattern_value(lambdas, signs, mid);
    if (f_mid == 0.0) return {mid, mid};
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace

bool AlphaReport::any_root() const {
  for (const auto& p : patterns) {
    if (p.root_found) return true;
  }
  return false;
}

AlphaReport alpha_scan(std::span<const std::int64_t> lambdas, std::int64_t k, double c_max,
                       std::size_t grid) {
  if (lambdas.size() < 2 || lambdas.size() > 20) {
    throw Error(ErrorKind::invalid, "alpha_scan needs between 2 and 20 lambdas");
  }
  for (auto l : lambdas) {
    if (l < 1) throw Error(ErrorKind::invalid, "lambda values must be positive");
  }
  if (k < 1) throw Error(ErrorKind::invalid, "k must be positive");
  if (grid < 2) throw Error(ErrorKind::invalid, "grid needs at least two points");
  const double c_min = 4.0 / (static_cast<double>(k) * static_cast<double>(k));
  if (!(c_max > c_min)) {
    throw Error(ErrorKind::empty_range, "c_max must exceed 4/k^2 = " + std::to_string(c_min));
  }

  AlphaReport report;
  report.lambdas.assign(lambdas.begin(), lambdas.end());
  report.c_min = c_min;
  report.c_max = c_max;
  report.grid = grid;
  report.informational = lambdas.size() == 2;

  const std::size_t m = lambdas.size();
  std::vector<double> cs(grid);
  const double ratio = std::log(c_max / c_min);
  for (std::size_t i = 0; i < grid; ++i) {
    cs[i] = c_min * std::exp(ratio * static_cast<double>(i) / static_cast<double>(grid - 1));
  }
  cs.back() = c_max;
  std::vector<std::vector<double>> roots(m, std::vector<double>(grid));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < grid; ++i) {
      roots[j][i] = std::sqrt(1.0 + cs[i] * static_cast<double>(lambdas[j]));
    }
  }

  const double base = 0.5 * static_cast<double>(m) - 1.0;
  std::vector<double> values(grid);
  const std::uint32_t all_plus = (1U << m) - 1;
  for (std::uint32_t mask = 1; mask < all_plus; ++mask) {
    AlphaPattern pattern;
    for (std::size_t j = 0; j < m; ++j) pattern.signs.push_back((mask >> j) & 1U ? 1 : -1);

    for (std::size_t i = 0; i < grid; ++i) {
      double s = base;
      for (std::size_t j = 0; j < m; ++j) s += 0.5 * pattern.signs[j] * roots[j][i];
      values[i] = s;
    }
    for (std::size_t i = 0; i < grid && pattern.brackets.size() < kMaxBracketsPerPattern; ++i) {
      if (values[i] == 0.0) {
        pattern.brackets.emplace_back(cs[i], cs[i]);
      } else if (i + 1 < grid && values[i + 1] != 0.0 && (values[i] < 0) != (values[i + 1] < 0)) {
        pattern.brackets.push_back(bisect(lambdas, pattern.signs, cs[i], cs[i + 1], values[i]));
      }
    }
    pattern.root_found = !pattern.brackets.empty();
    report.patterns.push_back(std::move(pattern));
  }
  return report;
}

}  // namespace gsedf
