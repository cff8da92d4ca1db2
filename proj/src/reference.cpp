#include "glab/reference.hpp"

#include <cmath>
#include <numbers>

#include "glab/summation.hpp"

namespace glab::reference {

LambdaTable lambda_spf(std::uint64_t limit) {
  std::vector<std::uint64_t> spf(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j <= limit; j += i)
      if (!spf[j]) spf[j] = i;
  }
  std::vector<double> values(limit + 1, 0.0);
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    if (m == 1) values[n] = std::log(static_cast<double>(p));
  }
  return LambdaTable(limit, std::move(values));
}

std::vector<double> g_serial(const LambdaTable& lambda) {
  const std::uint64_t limit = lambda.limit();
  std::vector<double> g(2 * limit + 1, 0.0);
  for (std::uint64_t n = 2; n <= 2 * limit; ++n) {
    double sum = 0.0;
    for (std::uint64_t k = 1; k < n; ++k)
      if (k <= limit && n - k <= limit) sum += lambda[k] * lambda[n - k];
    g[n] = sum;
  }
  return g;
}

std::vector<std::complex<double>> exp_sum_direct(std::span<const std::complex<double>> coeffs,
                                                 std::size_t M) {
  std::vector<std::complex<double>> out(M);
  for (std::size_t j = 0; j < M; ++j) {
    std::complex<double> s{};
    for (std::size_t n = 1; n <= coeffs.size(); ++n) {
      // reduce n j mod M in integers to keep the phase exact
      const auto r = static_cast<double>((n * j) % M);
      s += coeffs[n - 1] * std::polar(1.0, 2.0 * std::numbers::pi * r / static_cast<double>(M));
    }
    out[j] = s;
  }
  return out;
}

double h_term_complex(double x, const ZeroTable& zeros, double height) {
  using C = std::complex<double>;
  C sum{};
  const double lx = std::log(x);
  for (double g : zeros.gammas()) {
    if (g > height) break;
    for (double sign : {1.0, -1.0}) {
      const C rho{0.5, sign * g};
      const C power = std::exp(C{1.5 * lx, sign * g * lx});
      sum += power / (rho * (1.0 + rho));
    }
  }
  return -2.0 * sum.real();
}

double h_term_serial(double x, const ZeroTable& zeros, double height, std::size_t chunk) {
  const auto gammas = zeros.gammas();
  const std::size_t terms = height < zeros.front() ? 0 : zeros.count_up_to(height);
  const double lx = std::log(x);
  std::vector<double> partial;
  for (std::size_t lo = 0; lo < terms; lo += chunk) {
    CompensatedSum acc;
    for (std::size_t i = lo; i < std::min(terms, lo + chunk); ++i)
      acc.add(h_term_coefficient(lx, gammas[i]));
    partial.push_back(acc.value());
  }
  return -4.0 * std::pow(x, 1.5) * tree_reduce(partial);
}

}  // namespace glab::reference
