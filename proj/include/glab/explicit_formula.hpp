#pragma once

// The oscillatory term H(x) = -2 sum_rho x^{1+rho} / (rho (1+rho)) and the
// truncated explicit formula for Psi, both over zeros with 0 < gamma <= T.
//
// Sums run over gamma in ascending order, split into fixed chunks of
// `chunk` zeros. Each chunk is Kahan-summed; chunk partials are combined by
// tree_reduce. The chunk layout depends only on (table, T, chunk), so the
// parallel and serial evaluations agree bitwise.

#include <cstddef>
#include <vector>

#include "glab/zeros.hpp"

namespace glab {

inline constexpr std::size_t kDefaultChunk = 4096;

// Largest x for which the double-precision phase gamma*log(x) is trusted.
inline constexpr double kMaxExplicitX = 1e12;

struct HTermResult {
  double x = 0.0;
  double height = 0.0;  // truncation T
  double value = 0.0;   // H_T(x)
  std::size_t terms_used = 0;
  double tail_estimate = 0.0;  // tail_bound(T, x); 0 when T < 2 pi
};

struct SumOptions {
  std::size_t chunk = kDefaultChunk;
  bool parallel = true;
};

// Re( x^{i gamma} / (rho (1+rho)) ) for rho = 1/2 + i gamma.
double h_term_coefficient(double log_x, double gamma);

// H_T(x) = -4 x^{3/2} sum_{0<gamma<=T} Re(x^{i gamma} / (rho (1+rho))).
// Range error if T exceeds the last ordinate.
HTermResult h_term(double x, const ZeroTable& zeros, double height, const SumOptions& opts = {});

// Same sum evaluated for many x, parallel over x when opts.parallel.
std::vector<HTermResult> h_term_many(const std::vector<double>& xs, const ZeroTable& zeros,
                                     double height, const SumOptions& opts = {});

// x - 2 sqrt(x) sum_{0<gamma<=T} Re(x^{i gamma} / rho) - log(2 pi)
//   - log(1 - x^{-2}) / 2.
double psi_explicit(double x, const ZeroTable& zeros, double height, const SumOptions& opts = {});

}  // namespace glab
