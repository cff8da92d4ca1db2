#pragma once

// Exponential sums S, T, R on uniform grids j/M and the integral identities
// built from them.
//
//   S(a) = sum_{n<=x} Lambda(n) e(a n),  T_y(a) = sum_{n<=y} e(a n),
//   R(a) = S(a) - T(a),                   e(a) = exp(2 pi i a).
//
// A trigonometric polynomial whose frequencies lie in (-M, M) with no
// nonzero frequency divisible by M integrates exactly over [0, 1) as the
// mean of its grid values.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "glab/sieve.hpp"

namespace glab {

using cplx = std::complex<double>;

struct ExpSumGrid {
  std::size_t M = 0;
  std::size_t degree = 0;
  std::vector<cplx> values;  // values[j] = P(j / M)

  std::size_t wrap(long long j) const {
    const auto m = static_cast<long long>(M);
    return static_cast<std::size_t>(((j % m) + m) % m);
  }
};

// values[j] = sum_{n=1}^{N} c_n e(n j / M); coeffs[0] is c_1. Degree error
// if M < N + 1.
ExpSumGrid exp_sum_grid(std::span<const double> coeffs, std::size_t M);
ExpSumGrid exp_sum_grid(std::span<const cplx> coeffs, std::size_t M);

// T_y(alpha) in closed form; returns floor(y) when alpha is an integer.
cplx t_closed_form(double alpha, double y);

// Mean of grid values with a thread-count independent reduction.
cplx grid_mean(std::span<const cplx> values);

struct IntegralCheck {
  double lhs = 0.0;  // grid integral of T(-a) S(a)^2
  double rhs = 0.0;  // sum_{n<=x} G(n)
  std::size_t M = 0;
};

IntegralCheck total_integral_check(double x, const LambdaTable& lambda);

struct Decomposition {
  double main = 0.0;    // int T(-a) T(a)^2
  double second = 0.0;  // 2 int |T|^2 R
  double third = 0.0;   // int T(-a) R(a)^2
  double second_closed = 0.0;  // 2 sum_{n<=floor(x)-1} (Psi(n) - n)
  double total = 0.0;   // int T(-a) S(a)^2 on the same grid
  std::size_t M = 0;
};

Decomposition decomposition_terms(double x, const LambdaTable& lambda);

// Grid size used by local_l2: smallest power of two >=
// max(2N+2, 64 ceil(x/y), 64 ceil(y)). The last term keeps at least 128
// grid points inside the window [-1/y, 1/y].
std::size_t local_l2_grid_size(double x, double y);

// int_{-1/y}^{1/y} |R(a)|^2 da by the trapezoid rule on the grid, with the
// partial cells at both ends integrated against the linear interpolant.
// grid_size = 0 selects local_l2_grid_size(x, y).
double local_l2(double x, double y, const LambdaTable& lambda, std::size_t grid_size = 0);

// Same quadrature for an arbitrary grid of R values.
double window_trapezoid(const ExpSumGrid& grid, double half_width);

// int_1^x |Psi(t+h) - Psi(t) - h|^2 dt, exact: on each unit interval the
// integrand takes two constant values split at n + 1 - frac(h).
double selberg_integral(double x, double h, const PsiTable& psi);

struct GallagherCheck {
  double lhs = 0.0;    // int_{-1/y}^{1/y} |S(t)|^2 dt, composite Simpson
  double rhs = 0.0;    // y^{-2} int |A(x)|^2 dx, exact
  double ratio = 0.0;  // lhs / rhs, or 0 when rhs == 0
};

// coeffs[0] is c_1.
GallagherCheck gallagher_check(std::span<const cplx> coeffs, double y);

struct GallagherTrial {
  std::size_t index = 0;
  std::size_t size = 0;  // N
  double y = 0.0;
  GallagherCheck check;
};

// Trial i uses y = ys[i % ys.size()], N uniform in [1, max_n] and
// coefficients with real and imaginary parts uniform in [-1, 1), all drawn
// from one mt19937_64 stream seeded with `seed`.
std::vector<GallagherTrial> gallagher_random_trials(std::size_t trials, std::size_t max_n,
                                                    std::span<const double> ys, std::uint64_t seed);

// Per-shell grid sums of |T| |R|^2 and |R|^2: shell 0 is |a| <= 1/x, shell
// k >= 1 is 2^{k-1}/x < |a| <= 2^k / x (capped at 1/2).
struct DyadicShell {
  int k = 0;
  double lo = 0.0;
  double hi = 0.0;
  double abs_t_r2 = 0.0;
  double r2 = 0.0;
  double t_bound = 0.0;  // max over the shell of min(x, 1/||a||)
};

std::vector<DyadicShell> dyadic_report(double x, const LambdaTable& lambda);

}  // namespace glab
