#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace glab {

// Window sums of coefficients c_1..c_N at scale y:
//   centered(t)  = sum_{|n - t| <= y/4, n <= N} c_n
//   one_sided(t) = sum_{t < n <= t + y/2, n <= N} c_n
// Both are piecewise constant; their L2 norms over the real line are
// computed exactly from the breakpoints.
class WindowSum {
public:
  // coeffs[0] is c_1.
  WindowSum(std::span<const std::complex<double>> coeffs, double y);

  double y() const noexcept { return y_; }
  std::size_t size() const noexcept { return prefix_.size() - 1; }

  std::complex<double> centered(double t) const;
  std::complex<double> one_sided(double t) const;

  double centered_l2() const;
  double one_sided_l2() const;

private:
  // Sum of c_n for lo <= n <= hi (clipped to [1, N]).
  std::complex<double> range_sum(long long lo, long long hi) const;
  double piecewise_l2(std::vector<double> breaks, bool centered_window) const;

  double y_;
  std::vector<std::complex<double>> prefix_;
};

}  // namespace glab
