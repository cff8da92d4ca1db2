#pragma once

// Serial reference implementations of the parallel kernels. They are slow
// on purpose and share no code path with the kernels they check, apart from
// the per-term formulas.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "glab/explicit_formula.hpp"
#include "glab/goldbach.hpp"
#include "glab/sieve.hpp"
#include "glab/zeros.hpp"

namespace glab::reference {

// Lambda from a smallest-prime-factor table, no segmentation.
LambdaTable lambda_spf(std::uint64_t limit);

// g_direct for every n in [2, 2N] (parts restricted to <= N), one thread.
std::vector<double> g_serial(const LambdaTable& lambda);

// sum_n coeffs[n-1] e(n j / M) by direct summation, O(N M).
std::vector<std::complex<double>> exp_sum_direct(std::span<const std::complex<double>> coeffs,
                                                 std::size_t M);

// -2 sum over rho = 1/2 +- i gamma of x^{1+rho} / (rho (1+rho)) in complex
// arithmetic, gammas ascending, no pairing.
double h_term_complex(double x, const ZeroTable& zeros, double height);

// h_term with the same chunk layout, evaluated without OpenMP.
double h_term_serial(double x, const ZeroTable& zeros, double height,
                     std::size_t chunk = kDefaultChunk);

}  // namespace glab::reference
