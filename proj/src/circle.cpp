#include "glab/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "glab/error.hpp"
#include "glab/fft.hpp"
#include "glab/goldbach.hpp"
#include "glab/summation.hpp"
#include "glab/window_sum.hpp"

namespace glab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kReduceChunk = 4096;

// sum_{i<count} term(i): fixed chunks, Kahan inside, tree across.
template <typename Term>
double ordered_sum(std::size_t count, Term term) {
  const std::size_t nchunks = (count + kReduceChunk - 1) / kReduceChunk;
  std::vector<double> partial(nchunks, 0.0);
  const auto nc = static_cast<std::int64_t>(nchunks);
#pragma omp parallel for schedule(static) if (nchunks > 1)
  for (std::int64_t c = 0; c < nc; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kReduceChunk;
    const std::size_t hi = std::min(count, lo + kReduceChunk);
    CompensatedSum acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
    partial[static_cast<std::size_t>(c)] = acc.value();
  }
  return tree_reduce(partial);
}

std::uint64_t integer_cutoff(double x, const LambdaTable& lambda) {
  if (!(x >= 1.0)) fail(ErrorKind::domain, "x must be at least 1");
  const auto k = static_cast<std::uint64_t>(std::floor(x));
  if (k > lambda.limit()) fail(ErrorKind::range, "floor(x) beyond sieve limit");
  return k;
}

std::vector<double> ones(std::uint64_t k) { return std::vector<double>(k, 1.0); }

// A grid of S and T on M points for the integer cutoff k.
struct SumGrids {
  ExpSumGrid s;
  ExpSumGrid t;
};

SumGrids s_and_t(std::uint64_t k, const LambdaTable& lambda, std::size_t M) {
  const auto lam = lambda.values().subspan(1, k);
  const auto one = ones(k);
  return {exp_sum_grid(lam, M), exp_sum_grid(std::span<const double>(one), M)};
}

}  // namespace

ExpSumGrid exp_sum_grid(std::span<const cplx> coeffs, std::size_t M) {
  if (M < coeffs.size() + 1)
    fail(ErrorKind::degree, "grid size " + std::to_string(M) + " below degree + 1");
  std::vector<cplx> shifted(coeffs.size() + 1);
  std::copy(coeffs.begin(), coeffs.end(), shifted.begin() + 1);
  return {M, coeffs.size(), fft::positive_frequency_dft(shifted, M)};
}

ExpSumGrid exp_sum_grid(std::span<const double> coeffs, std::size_t M) {
  std::vector<cplx> c(coeffs.begin(), coeffs.end());
  return exp_sum_grid(std::span<const cplx>(c), M);
}

cplx t_closed_form(double alpha, double y) {
  if (!(y >= 0.0)) fail(ErrorKind::domain, "t_closed_form: y must be nonnegative");
  const double k = std::floor(y);
  const double f = alpha - std::nearbyint(alpha);
  if (f == 0.0) return {k, 0.0};
  // e(f (k+1)/2) sin(pi f k) / sin(pi f)
  const double amp = std::sin(std::numbers::pi * f * k) / std::sin(std::numbers::pi * f);
  return std::polar(amp, std::numbers::pi * f * (k + 1.0));
}

cplx grid_mean(std::span<const cplx> values) {
  const double re = ordered_sum(values.size(), [&](std::size_t j) { return values[j].real(); });
  const double im = ordered_sum(values.size(), [&](std::size_t j) { return values[j].imag(); });
  const auto m = static_cast<double>(values.size());
  return {re / m, im / m};
}

IntegralCheck total_integral_check(double x, const LambdaTable& lambda) {
  const std::uint64_t k = integer_cutoff(x, lambda);
  const std::size_t M = fft::next_pow2(4 * k + 2);
  const auto [s, t] = s_and_t(k, lambda, M);
  std::vector<cplx> integrand(M);
  for (std::size_t j = 0; j < M; ++j) integrand[j] = std::conj(t.values[j]) * s.values[j] * s.values[j];

  const auto head = lambda.values().first(k + 1);
  const GTable g = g_table_fft(LambdaTable(k, std::vector<double>(head.begin(), head.end())));
  return {grid_mean(integrand).real(), g_partial_sum(x, g), M};
}

Decomposition decomposition_terms(double x, const LambdaTable& lambda) {
  const std::uint64_t k = integer_cutoff(x, lambda);
  const std::size_t M = fft::next_pow2(4 * k + 2);
  const auto [s, t] = s_and_t(k, lambda, M);
  std::vector<cplx> main(M), second(M), third(M), total(M);
  for (std::size_t j = 0; j < M; ++j) {
    const cplx tv = t.values[j];
    const cplx r = s.values[j] - tv;
    const cplx tc = std::conj(tv);
    main[j] = tc * tv * tv;
    second[j] = 2.0 * std::norm(tv) * r;
    third[j] = tc * r * r;
    total[j] = tc * s.values[j] * s.values[j];
  }
  Decomposition d;
  d.M = M;
  d.main = grid_mean(main).real();
  d.second = grid_mean(second).real();
  d.third = grid_mean(third).real();
  d.total = grid_mean(total).real();

  const PsiTable psi_table(lambda);
  CompensatedSum acc;
  for (std::uint64_t n = 1; n + 1 <= k; ++n) acc.add(psi_table[n] - static_cast<double>(n));
  d.second_closed = 2.0 * acc.value();
  return d;
}

std::size_t local_l2_grid_size(double x, double y) {
  const auto k = static_cast<std::size_t>(std::floor(x));
  const auto windows = static_cast<std::size_t>(std::ceil(x / y));
  const auto per_window = static_cast<std::size_t>(64.0 * std::ceil(y));
  return fft::next_pow2(std::max({2 * k + 2, 64 * windows, per_window}));
}

double window_trapezoid(const ExpSumGrid& grid, double half_width) {
  const double M = static_cast<double>(grid.M);
  const double step = 1.0 / M;
  const auto J = static_cast<long long>(std::floor(half_width * M));
  auto f = [&](long long j) { return std::norm(grid.values[grid.wrap(j)]); };

  const auto count = static_cast<std::size_t>(2 * J + 1);
  double interior = ordered_sum(count, [&](std::size_t i) {
    const long long j = static_cast<long long>(i) - J;
    const double w = (j == -J || j == J) ? 0.5 : 1.0;
    return w * f(j);
  });
  if (J == 0) interior = 0.0;  // single point, zero-width trapezoid
  double total = step * interior;

  const double w = half_width - static_cast<double>(J) * step;
  if (w > 0.0) {
    const double frac = w * M;
    const double right_edge = f(J) + frac * (f(J + 1) - f(J));
    const double left_edge = f(-J) + frac * (f(-J - 1) - f(-J));
    total += 0.5 * w * (f(J) + right_edge) + 0.5 * w * (f(-J) + left_edge);
  }
  return total;
}

double local_l2(double x, double y, const LambdaTable& lambda, std::size_t grid_size) {
  if (!(y >= 1.0) || y > x) fail(ErrorKind::domain, "local_l2 needs 1 <= y <= x");
  const std::uint64_t k = integer_cutoff(x, lambda);
  const std::size_t M = grid_size ? grid_size : local_l2_grid_size(x, y);
  std::vector<double> c(k);
  for (std::uint64_t n = 1; n <= k; ++n) c[n - 1] = lambda[n] - 1.0;
  const ExpSumGrid r = exp_sum_grid(std::span<const double>(c), M);
  return window_trapezoid(r, 1.0 / y);
}

double selberg_integral(double x, double h, const PsiTable& psi_table) {
  if (!(h >= 0.0)) fail(ErrorKind::domain, "selberg_integral: h must be nonnegative");
  if (!(x >= 1.0)) fail(ErrorKind::domain, "selberg_integral: x must be at least 1");
  if (x + h > static_cast<double>(psi_table.limit()))
    fail(ErrorKind::range, "selberg_integral: x + h beyond Psi table");
  const double whole = std::floor(h);
  const double frac = h - whole;
  const auto H = static_cast<std::uint64_t>(whole);
  const auto last = static_cast<std::uint64_t>(std::floor(x));

  // Unit interval [n, n+1) clipped to x: Psi(t) = P[n]; Psi(t+h) = P[n+H]
  // before n + 1 - frac and P[n+H+1] after.
  return ordered_sum(last, [&](std::size_t i) {
    const std::uint64_t n = i + 1;
    const double a = static_cast<double>(n);
    const double b = std::min(a + 1.0, x);
    if (!(b > a)) return 0.0;
    const double split = std::min(b, a + 1.0 - frac);
    double v = 0.0;
    const double d1 = psi_table[n + H] - psi_table[n] - h;
    v += (split - a) * d1 * d1;
    if (b > split) {
      const double d2 = psi_table[n + H + 1] - psi_table[n] - h;
      v += (b - split) * d2 * d2;
    }
    return v;
  });
}

GallagherCheck gallagher_check(std::span<const cplx> coeffs, double y) {
  if (coeffs.empty()) fail(ErrorKind::domain, "gallagher_check needs at least one coefficient");
  if (!(y > 0.0)) fail(ErrorKind::domain, "gallagher_check: y must be positive");
  GallagherCheck out;
  const auto N = coeffs.size();
  const double a = 1.0 / y;
  // step <= 1/(64 N) over [-a, a], even panel count for Simpson
  auto panels = static_cast<std::size_t>(std::ceil(2.0 * a * 64.0 * static_cast<double>(N)));
  panels += panels % 2;
  panels = std::max<std::size_t>(panels, 2);
  const double step = 2.0 * a / static_cast<double>(panels);
  auto f = [&](std::size_t i) {
    const double t = -a + step * static_cast<double>(i);
    cplx s{};
    for (std::size_t n = 0; n < N; ++n)
      s += coeffs[n] * std::polar(1.0, kTwoPi * t * static_cast<double>(n + 1));
    const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    return w * std::norm(s);
  };
  out.lhs = ordered_sum(panels + 1, f) * step / 3.0;
  out.rhs = WindowSum(coeffs, y).centered_l2() / (y * y);
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  return out;
}

std::vector<GallagherTrial> gallagher_random_trials(std::size_t trials, std::size_t max_n,
                                                    std::span<const double> ys, std::uint64_t seed) {
  if (ys.empty() || max_n == 0) fail(ErrorKind::domain, "gallagher trials need ys and max_n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<GallagherTrial> out;
  out.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_n);
    std::vector<cplx> c(n);
    // 53-bit uniform in [-1, 1) without distribution objects, so the stream
    // is the same on every standard library
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1p-52 - 1.0; };
    for (auto& v : c) v = {uniform(), uniform()};
    const double y = ys[i % ys.size()];
    out.push_back({i, n, y, gallagher_check(c, y)});
  }
  return out;
}

std::vector<DyadicShell> dyadic_report(double x, const LambdaTable& lambda) {
  const std::uint64_t k = integer_cutoff(x, lambda);
  const std::size_t M = fft::next_pow2(2 * k + 2);
  const auto [s, t] = s_and_t(k, lambda, M);

  std::vector<DyadicShell> shells;
  auto shell_of = [&](double a) -> std::size_t {
    if (a * x <= 1.0) return 0;
    return static_cast<std::size_t>(std::ceil(std::log2(a * x)));
  };
  const std::size_t top = shell_of(0.5);
  for (std::size_t i = 0; i <= top; ++i) {
    DyadicShell sh;
    sh.k = static_cast<int>(i);
    sh.lo = i == 0 ? 0.0 : std::ldexp(1.0, static_cast<int>(i) - 1) / x;
    sh.hi = std::min(0.5, std::ldexp(1.0, static_cast<int>(i)) / x);
    sh.t_bound = i == 0 ? x : std::min(x, 1.0 / sh.lo);
    shells.push_back(sh);
  }
  const double step = 1.0 / static_cast<double>(M);
  const auto half = static_cast<long long>(M / 2);
  for (long long j = -half; j < half; ++j) {
    const double a = std::abs(static_cast<double>(j) * step);
    const std::size_t idx = std::min(shell_of(a), top);
    const std::size_t w = s.wrap(j);
    const double r2 = std::norm(s.values[w] - t.values[w]);
    shells[idx].r2 += r2 * step;
    shells[idx].abs_t_r2 += std::abs(t.values[w]) * r2 * step;
  }
  return shells;
}

}  // namespace glab
