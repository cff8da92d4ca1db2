#include "glab/goldbach.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "binio.hpp"
#include "glab/error.hpp"
#include "glab/fft.hpp"
#include "glab/summation.hpp"

namespace glab {

GTable::GTable(std::uint64_t limit, std::vector<double> g)
    : limit_(limit), g_(std::move(g)), prefix_(g_.size(), 0.0) {
  if (g_.size() != 2 * limit_ + 1) fail(ErrorKind::capacity, "G table size mismatch");
  CompensatedSum acc;
  for (std::size_t n = 0; n < g_.size(); ++n) {
    acc.add(g_[n]);
    prefix_[n] = acc.value();
  }
}

double g_direct(std::uint64_t n, const LambdaTable& lambda) {
  if (n < 2 || n > lambda.limit() + 1)
    fail(ErrorKind::range, "g_direct: n=" + std::to_string(n) + " outside [2, limit+1]");
  double sum = 0.0;
  for (std::uint64_t k = 1; k < n; ++k) sum += lambda[k] * lambda[n - k];
  return sum;
}

GTable g_table_fft(const LambdaTable& lambda) {
  const std::uint64_t limit = lambda.limit();
  const std::size_t size = fft::next_pow2(2 * limit + 2);
  std::vector<double> conv = fft::self_convolve(lambda.values(), size);
  // A nonzero G(n) is a sum of products Lambda(a)Lambda(b) >= (log 2)^2, so
  // anything below half of that is transform noise around an exact zero.
  const double floor_value = 0.5 * std::log(2.0) * std::log(2.0);
  for (double& v : conv)
    if (v < floor_value) v = 0.0;
  return GTable(limit, std::move(conv));
}

GTable g_table_direct(const LambdaTable& lambda) {
  const std::uint64_t limit = lambda.limit();
  std::vector<double> g(2 * limit + 1, 0.0);
  const auto v = lambda.values();
  const std::int64_t top = static_cast<std::int64_t>(2 * limit);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t n = 2; n <= top; ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    const std::uint64_t k_lo = un > limit ? un - limit : 1;
    const std::uint64_t k_hi = std::min(un - 1, limit);
    double sum = 0.0;
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) sum += v[k] * v[un - k];
    g[un] = sum;
  }
  return GTable(limit, std::move(g));
}

double g_partial_sum(double x, const GTable& table) {
  if (!(x >= 0.0)) fail(ErrorKind::domain, "g_partial_sum: x must be nonnegative");
  if (x > static_cast<double>(table.limit() + 1))
    fail(ErrorKind::range, "g_partial_sum: x beyond limit+1");
  return table.gprefix(static_cast<std::uint64_t>(std::floor(x)));
}

GScanResult max_g_scan(std::uint64_t lo, std::uint64_t hi, const GTable& table,
                       std::optional<std::uint64_t> modulus) {
  if (hi > table.max_n()) fail(ErrorKind::range, "max_g_scan: hi beyond table");
  if (modulus && *modulus == 0) fail(ErrorKind::domain, "max_g_scan: modulus must be positive");
  lo = std::max<std::uint64_t>(lo, 2);
  const std::uint64_t step = modulus.value_or(1);
  std::uint64_t first = (lo + step - 1) / step * step;
  if (first > hi || lo > hi) fail(ErrorKind::domain, "max_g_scan: empty range");
  GScanResult best{first, table.g(first), 0.0};
  for (std::uint64_t n = first + step; n <= hi; n += step)
    if (table.g(n) > best.g) best = {n, table.g(n), 0.0};
  best.g_over_n = best.g / static_cast<double>(best.n);
  return best;
}

void save_gtable_cache(const std::filesystem::path& path, const GTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, "cannot write G cache " + path.string());
  out.write(binio::kMagic, 4);
  binio::put<std::uint32_t>(out, kGTableCacheVersion);
  binio::put<std::uint64_t>(out, table.limit());
  binio::put_doubles(out, table.values());
  if (!out) fail(ErrorKind::io, "short write to G cache " + path.string());
}

GTable load_gtable_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open G cache " + path.string());
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t n = 0;
  if (!in.read(magic, 4) || !std::equal(magic, magic + 4, binio::kMagic))
    fail(ErrorKind::integrity, "G cache has bad magic");
  if (!binio::get(in, version) || version != kGTableCacheVersion)
    fail(ErrorKind::integrity, "G cache version mismatch");
  if (!binio::get(in, n) || n == 0 || n > kDefaultSieveCap)
    fail(ErrorKind::integrity, "G cache has bad length");
  std::vector<double> g(2 * n + 1);
  if (!binio::get_doubles(in, g)) fail(ErrorKind::integrity, "G cache truncated");
  return GTable(n, std::move(g));
}

}  // namespace glab
