#include "glab/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>

#include "glab/error.hpp"

namespace glab::fft {
namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <typename T>
struct FftwBuffer {
  explicit FftwBuffer(std::size_t n) : n(n), data(static_cast<T*>(fftw_malloc(sizeof(T) * n))) {
    if (!data) fail(ErrorKind::capacity, "fftw_malloc failed");
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  std::size_t n;
  T* data;
};

struct Plan {
  explicit Plan(fftw_plan p) : p(p) {
    if (!p) fail(ErrorKind::capacity, "fftw plan creation failed");
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void execute() const { fftw_execute(p); }

  fftw_plan p;
};

constexpr std::size_t kMaxTransform = std::size_t{1} << 29;

void check_size(std::size_t size) {
  if (size == 0 || (size & (size - 1)) != 0)
    fail(ErrorKind::capacity, "transform size must be a power of two");
  if (size > kMaxTransform) fail(ErrorKind::capacity, "transform size exceeds budget");
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> self_convolve(std::span<const double> a, std::size_t size) {
  if (a.empty()) return {};
  check_size(size);
  if (size < 2 * a.size() - 1) fail(ErrorKind::capacity, "transform too short for linear convolution");

  FftwBuffer<double> real(size);
  FftwBuffer<fftw_complex> spec(size / 2 + 1);
  std::unique_ptr<Plan> forward, backward;
  {
    std::lock_guard lock(planner_mutex());
    forward = std::make_unique<Plan>(fftw_plan_dft_r2c_1d(static_cast<int>(size), real.data,
                                                          spec.data, FFTW_ESTIMATE));
    backward = std::make_unique<Plan>(fftw_plan_dft_c2r_1d(static_cast<int>(size), spec.data,
                                                           real.data, FFTW_ESTIMATE));
  }
  std::copy(a.begin(), a.end(), real.data);
  std::fill(real.data + a.size(), real.data + size, 0.0);
  forward->execute();
  for (std::size_t k = 0; k < spec.n; ++k) {
    const double re = spec.data[k][0], im = spec.data[k][1];
    spec.data[k][0] = re * re - im * im;
    spec.data[k][1] = 2.0 * re * im;
  }
  backward->execute();
  const double scale = 1.0 / static_cast<double>(size);
  std::vector<double> out(2 * a.size() - 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = real.data[i] * scale;
  return out;
}

std::vector<double> autocorrelate(std::span<const double> a) {
  if (a.empty()) return {};
  const std::size_t size = next_pow2(2 * a.size());
  check_size(size);
  FftwBuffer<double> real(size);
  FftwBuffer<fftw_complex> spec(size / 2 + 1);
  std::unique_ptr<Plan> forward, backward;
  {
    std::lock_guard lock(planner_mutex());
    forward = std::make_unique<Plan>(fftw_plan_dft_r2c_1d(static_cast<int>(size), real.data,
                                                          spec.data, FFTW_ESTIMATE));
    backward = std::make_unique<Plan>(fftw_plan_dft_c2r_1d(static_cast<int>(size), spec.data,
                                                           real.data, FFTW_ESTIMATE));
  }
  std::copy(a.begin(), a.end(), real.data);
  std::fill(real.data + a.size(), real.data + size, 0.0);
  forward->execute();
  for (std::size_t k = 0; k < spec.n; ++k) {
    const double re = spec.data[k][0], im = spec.data[k][1];
    spec.data[k][0] = re * re + im * im;
    spec.data[k][1] = 0.0;
  }
  backward->execute();
  const double scale = 1.0 / static_cast<double>(size);
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = real.data[k] * scale;
  return out;
}

std::vector<std::complex<double>> positive_frequency_dft(std::span<const std::complex<double>> coeffs,
                                                         std::size_t M) {
  if (M == 0 || M > kMaxTransform) fail(ErrorKind::capacity, "grid size out of range");
  if (coeffs.size() > M) fail(ErrorKind::degree, "grid smaller than coefficient count");
  FftwBuffer<fftw_complex> buf(M);
  std::unique_ptr<Plan> plan;
  {
    std::lock_guard lock(planner_mutex());
    // FFTW_BACKWARD carries the positive exponent.
    plan = std::make_unique<Plan>(
        fftw_plan_dft_1d(static_cast<int>(M), buf.data, buf.data, FFTW_BACKWARD, FFTW_ESTIMATE));
  }
  for (std::size_t n = 0; n < M; ++n) {
    const std::complex<double> c = n < coeffs.size() ? coeffs[n] : 0.0;
    buf.data[n][0] = c.real();
    buf.data[n][1] = c.imag();
  }
  plan->execute();
  std::vector<std::complex<double>> out(M);
  for (std::size_t j = 0; j < M; ++j) out[j] = {buf.data[j][0], buf.data[j][1]};
  return out;
}

}  // namespace glab::fft
