#include "glab/window_sum.hpp"

#include <algorithm>
#include <cmath>

#include "glab/error.hpp"
#include "glab/summation.hpp"

namespace glab {

WindowSum::WindowSum(std::span<const std::complex<double>> coeffs, double y)
    : y_(y), prefix_(coeffs.size() + 1) {
  if (!(y > 0.0)) fail(ErrorKind::domain, "window scale must be positive");
  for (std::size_t n = 0; n < coeffs.size(); ++n) prefix_[n + 1] = prefix_[n] + coeffs[n];
}

std::complex<double> WindowSum::range_sum(long long lo, long long hi) const {
  const auto n = static_cast<long long>(size());
  lo = std::max(lo, 1LL);
  hi = std::min(hi, n);
  if (lo > hi) return {};
  return prefix_[static_cast<std::size_t>(hi)] - prefix_[static_cast<std::size_t>(lo - 1)];
}

std::complex<double> WindowSum::centered(double t) const {
  const double r = y_ / 4.0;
  return range_sum(static_cast<long long>(std::ceil(t - r)), static_cast<long long>(std::floor(t + r)));
}

std::complex<double> WindowSum::one_sided(double t) const {
  return range_sum(static_cast<long long>(std::floor(t)) + 1,
                   static_cast<long long>(std::floor(t + y_ / 2.0)));
}

double WindowSum::piecewise_l2(std::vector<double> breaks, bool centered_window) const {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  CompensatedSum acc;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    const double mid = 0.5 * (a + b);
    const std::complex<double> v = centered_window ? centered(mid) : one_sided(mid);
    acc.add((b - a) * std::norm(v));
  }
  return acc.value();
}

double WindowSum::centered_l2() const {
  const double r = y_ / 4.0;
  std::vector<double> breaks;
  breaks.reserve(2 * size());
  for (std::size_t n = 1; n <= size(); ++n) {
    breaks.push_back(static_cast<double>(n) - r);
    breaks.push_back(static_cast<double>(n) + r);
  }
  return piecewise_l2(std::move(breaks), true);
}

double WindowSum::one_sided_l2() const {
  const double h = y_ / 2.0;
  std::vector<double> breaks;
  breaks.reserve(2 * size());
  for (std::size_t n = 1; n <= size(); ++n) {
    breaks.push_back(static_cast<double>(n));
    breaks.push_back(static_cast<double>(n) - h);
  }
  return piecewise_l2(std::move(breaks), false);
}

}  // namespace glab
