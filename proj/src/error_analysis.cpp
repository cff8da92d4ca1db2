#include "glab/error_analysis.hpp"

#include <cmath>
#include <numeric>

#include "glab/error.hpp"
#include "glab/summation.hpp"
#include "parallel.hpp"

namespace glab {

ErrorRecord error_term(double x, const GTable& table, const ZeroTable& zeros, double height,
                       const SumOptions& opts) {
  const double base = std::floor(x);
  if (x - base != 0.5 || base < 16.0)
    fail(ErrorKind::domain, "error_term: x must be N + 1/2 with N >= 16");
  ErrorRecord r;
  r.x = x;
  r.sum_g = g_partial_sum(x, table);
  if (height > 0.0) {
    const HTermResult h = h_term(x, zeros, height, opts);
    r.h_value = h.value;
    r.h_tail = h.tail_estimate;
    r.terms = h.terms_used;
  }
  r.e_value = r.sum_g - x * x / 2.0 - r.h_value;
  const double lx = std::log(x);
  r.ratio_upper = r.e_value / (x * std::pow(lx, 5));
  r.ratio_lower = r.e_value / (x * std::log(lx));
  r.ratio_fujii = r.e_value / std::pow(x * lx, 4.0 / 3.0);
  return r;
}

std::vector<ErrorRecord> error_ratio_table(const std::vector<double>& xs, const GTable& table,
                                           const ZeroTable& zeros, double height,
                                           const SumOptions& opts) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1])) fail(ErrorKind::order, "error_ratio_table: xs must ascend");
  std::vector<ErrorRecord> out(xs.size());
  SumOptions inner = opts;
  inner.parallel = false;
  const auto n = static_cast<std::int64_t>(xs.size());
  detail::parallel_for_index(n, opts.parallel, [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] =
        error_term(xs[static_cast<std::size_t>(i)], table, zeros, height, inner);
  });
  return out;
}

std::vector<double> half_integer_log_grid(double lo, double hi, std::size_t count) {
  if (count == 0 || !(lo > 0.0) || hi < lo) fail(ErrorKind::domain, "bad log grid");
  std::vector<double> xs;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    const double v = std::floor(lo * std::pow(hi / lo, t) + 1e-9) + 0.5;
    if (xs.empty() || v > xs.back()) xs.push_back(v);
  }
  return xs;
}

double ap_chebyshev(double x, std::uint64_t q, std::uint64_t a, const LambdaTable& lambda) {
  if (q == 0 || a >= q) fail(ErrorKind::domain, "ap_chebyshev needs q >= 1 and 0 <= a < q");
  if (!(x >= 0.0)) fail(ErrorKind::domain, "ap_chebyshev: x must be nonnegative");
  if (x > static_cast<double>(lambda.limit())) fail(ErrorKind::range, "ap_chebyshev: x beyond sieve");
  const auto top = static_cast<std::uint64_t>(std::floor(x));
  double sum = 0.0;
  for (std::uint64_t n = a == 0 ? q : a; n <= top; n += q) sum += lambda[n];
  return sum;
}

OmegaCheck omega_lower_check(double x, std::uint64_t q, const GTable& table,
                             const LambdaTable& lambda) {
  if (!is_squarefree(q)) fail(ErrorKind::domain, "omega_lower_check: q must be squarefree");
  if (!(x >= 1.0)) fail(ErrorKind::domain, "omega_lower_check: x must be at least 1");
  const auto top = static_cast<std::uint64_t>(std::floor(4.0 * x));
  if (top > table.limit() + 1) fail(ErrorKind::range, "omega_lower_check: 4x beyond G table");

  OmegaCheck out;
  out.degenerate = q == 1;
  CompensatedSum lhs;
  for (std::uint64_t n = q; n <= top; n += q) lhs.add(table.g(n));
  out.lhs = lhs.value();

  // S(x, q, a) for every residue once, then pair a with q - a.
  std::vector<double> s(q);
  for (std::uint64_t a = 0; a < q; ++a)
    if (std::gcd(a, q) == 1) s[a] = ap_chebyshev(x, q, a, lambda);
  CompensatedSum mid;
  for (std::uint64_t a = 0; a < q; ++a)
    if (std::gcd(a, q) == 1) mid.add(s[a] * s[(q - a) % q]);
  out.mid = mid.value();
  out.rhs = x * x / (4.0 * static_cast<double>(euler_phi(q)));
  return out;
}

double singular_series(std::uint64_t n) {
  if (n < 2) fail(ErrorKind::domain, "singular_series: n must be at least 2");
  if (n % 2 == 1) return 0.0;
  double product = 2.0 * kTwinPrimeConstant;
  while (n % 2 == 0) n /= 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    product *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
  }
  if (n > 1) product *= static_cast<double>(n - 1) / static_cast<double>(n - 2);
  return product;
}

}  // namespace glab
