#include "glab/explicit_formula.hpp"

#include <cmath>
#include <numbers>
#include <span>

#include "glab/error.hpp"
#include "glab/summation.hpp"
#include "parallel.hpp"

namespace glab {
namespace {

std::size_t terms_below(const ZeroTable& zeros, double height) {
  if (height > zeros.back())
    fail(ErrorKind::range, "truncation height beyond the last tabulated ordinate");
  return height < zeros.front() ? 0 : zeros.count_up_to(height);
}

void check_x(double x) {
  if (!(x <= kMaxExplicitX)) fail(ErrorKind::domain, "x beyond the supported phase-precision range");
}

// sum_{i<count} term(gammas[i]) with the chunked Kahan / tree layout.
template <typename Term>
double chunked_sum(std::span<const double> gammas, std::size_t chunk, bool parallel, Term term) {
  if (chunk == 0) fail(ErrorKind::domain, "chunk size must be positive");
  const std::size_t nchunks = (gammas.size() + chunk - 1) / chunk;
  std::vector<double> partial(nchunks, 0.0);
  const auto nc = static_cast<std::int64_t>(nchunks);
#pragma omp parallel for schedule(static) if (parallel && nchunks > 1)
  for (std::int64_t c = 0; c < nc; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * chunk;
    const std::size_t hi = std::min(gammas.size(), lo + chunk);
    CompensatedSum acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(term(gammas[i]));
    partial[static_cast<std::size_t>(c)] = acc.value();
  }
  return tree_reduce(partial);
}

}  // namespace

double h_term_coefficient(double log_x, double gamma) {
  // rho (1 + rho) = (3/4 - gamma^2) + 2 i gamma
  const double a = 0.75 - gamma * gamma;
  const double b = 2.0 * gamma;
  const double phase = gamma * log_x;
  return (a * std::cos(phase) + b * std::sin(phase)) / (a * a + b * b);
}

HTermResult h_term(double x, const ZeroTable& zeros, double height, const SumOptions& opts) {
  if (!(x >= 1.0)) fail(ErrorKind::domain, "h_term: x must be at least 1");
  check_x(x);
  HTermResult r;
  r.x = x;
  r.height = height;
  r.terms_used = terms_below(zeros, height);
  const double log_x = std::log(x);
  const double s = chunked_sum(zeros.gammas().first(r.terms_used), opts.chunk, opts.parallel,
                               [log_x](double g) { return h_term_coefficient(log_x, g); });
  r.value = -4.0 * std::pow(x, 1.5) * s;
  r.tail_estimate = height >= 2.0 * std::numbers::pi ? tail_bound(height, x) : 0.0;
  return r;
}

std::vector<HTermResult> h_term_many(const std::vector<double>& xs, const ZeroTable& zeros,
                                     double height, const SumOptions& opts) {
  std::vector<HTermResult> out(xs.size());
  SumOptions inner = opts;
  inner.parallel = false;
  const auto n = static_cast<std::int64_t>(xs.size());
  // Parallel over x; each sum keeps the same chunk layout, so the values
  // match a single-x call bitwise.
  detail::parallel_for_index(n, opts.parallel, [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] = h_term(xs[static_cast<std::size_t>(i)], zeros, height, inner);
  });
  return out;
}

double psi_explicit(double x, const ZeroTable& zeros, double height, const SumOptions& opts) {
  if (!(x > 1.0)) fail(ErrorKind::domain, "psi_explicit: x must exceed 1");
  check_x(x);
  const std::size_t terms = terms_below(zeros, height);
  const double log_x = std::log(x);
  // Re(x^{i gamma} / rho) = (cos/2 + gamma sin) / (1/4 + gamma^2)
  const double s = chunked_sum(zeros.gammas().first(terms), opts.chunk, opts.parallel,
                               [log_x](double g) {
                                 const double phase = g * log_x;
                                 return (0.5 * std::cos(phase) + g * std::sin(phase)) /
                                        (0.25 + g * g);
                               });
  return x - 2.0 * std::sqrt(x) * s - std::log(2.0 * std::numbers::pi) -
         0.5 * std::log1p(-1.0 / (x * x));
}

}  // namespace glab
