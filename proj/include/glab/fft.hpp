#pragma once

// Thin RAII layer over FFTW. Plans use FFTW_ESTIMATE on fftw_malloc'd
// buffers so that the same input always produces the same bits.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace glab::fft {

// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

// Linear convolution a*a, returned with length 2*a.size()-1, computed on a
// real transform of length `size` (power of two >= 2*a.size()-1).
std::vector<double> self_convolve(std::span<const double> a, std::size_t size);

// Linear correlation r[k] = sum_n a[n] * a[n+k] for k in [0, a.size()).
std::vector<double> autocorrelate(std::span<const double> a);

// out[j] = sum_{n} coeffs[n] * e(n j / M), n counted from 0, for j < M.
// Requires coeffs.size() <= M.
std::vector<std::complex<double>> positive_frequency_dft(std::span<const std::complex<double>> coeffs,
                                                         std::size_t M);

}  // namespace glab::fft
