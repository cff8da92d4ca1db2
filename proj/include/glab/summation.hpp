#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace glab {

// Kahan-Babuska (Neumaier) compensated accumulator.
class CompensatedSum {
public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (v >= 0 ? v : -v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }

  double value() const noexcept { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Pairwise reduction with a tree shape fixed by the number of leaves only,
// so the result does not depend on how the leaves were produced.
inline double tree_reduce(std::span<const double> leaves) {
  if (leaves.empty()) return 0.0;
  std::vector<double> level(leaves.begin(), leaves.end());
  while (level.size() > 1) {
    std::vector<double> next((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2)
      next[i / 2] = level[i] + level[i + 1];
    if (level.size() % 2 == 1) next.back() = level.back();
    level.swap(next);
  }
  return level.front();
}

}  // namespace glab
