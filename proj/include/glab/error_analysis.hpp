#pragma once

// E(x) = sum_{n<=x} G(n) - x^2/2 - H_T(x) at half-integers, ratio tables
// against the x log^5 x, x log log x and (x log x)^{4/3} scales, and the
// arithmetic-progression checks behind the Omega mechanism.

#include <cstdint>
#include <string>
#include <vector>

#include "glab/explicit_formula.hpp"
#include "glab/goldbach.hpp"
#include "glab/sieve.hpp"
#include "glab/zeros.hpp"

namespace glab {

struct ErrorRecord {
  double x = 0.0;
  double sum_g = 0.0;
  double h_value = 0.0;
  double h_tail = 0.0;
  double e_value = 0.0;
  double ratio_upper = 0.0;  // e / (x log^5 x)
  double ratio_lower = 0.0;  // e / (x log log x)
  double ratio_fujii = 0.0;  // e / (x log x)^{4/3}
  std::size_t terms = 0;
};

// x must be N + 1/2 with integer N >= 16. height = 0 means no zeros.
ErrorRecord error_term(double x, const GTable& table, const ZeroTable& zeros, double height,
                       const SumOptions& opts = {});

// xs ascending. Parallel over x; each record is computed exactly as by
// error_term, so the table does not depend on the thread count.
std::vector<ErrorRecord> error_ratio_table(const std::vector<double>& xs, const GTable& table,
                                           const ZeroTable& zeros, double height,
                                           const SumOptions& opts = {});

// `count` points N + 1/2 with N = floor(lo * (hi/lo)^{i/(count-1)}),
// strictly ascending after deduplication.
std::vector<double> half_integer_log_grid(double lo, double hi, std::size_t count);

// sum_{n<=x, n = a mod q} Lambda(n).
double ap_chebyshev(double x, std::uint64_t q, std::uint64_t a, const LambdaTable& lambda);

struct OmegaCheck {
  double lhs = 0.0;  // sum_{q | n, n <= 4x} G(n)
  double mid = 0.0;  // sum_{(a,q)=1} S(x,q,a) S(x,q,q-a)
  double rhs = 0.0;  // x^2 / (4 phi(q))
  bool degenerate = false;  // q == 1
};

OmegaCheck omega_lower_check(double x, std::uint64_t q, const GTable& table,
                             const LambdaTable& lambda);

inline constexpr double kTwinPrimeConstant = 0.6601618158;

// 0 for odd n, else 2 C_2 prod_{p | n, p > 2} (p-1)/(p-2).
double singular_series(std::uint64_t n);

}  // namespace glab
