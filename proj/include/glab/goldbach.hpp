#pragma once

// G(n) = sum_{k1+k2=n} Lambda(k1) Lambda(k2): the direct oracle, the
// transform fast path, partial sums and argmax scans.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "glab/sieve.hpp"

namespace glab {

class GTable {
public:
  GTable() = default;
  // g has length 2*limit+1 and is indexed directly by n.
  GTable(std::uint64_t limit, std::vector<double> g);

  // Limit of the source Lambda table; g is defined for n <= 2*limit.
  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t max_n() const noexcept { return 2 * limit_; }

  double g(std::uint64_t n) const noexcept { return g_[n]; }
  // gprefix(m) = sum_{n<=m} g(n), Kahan-compensated in ascending n.
  double gprefix(std::uint64_t m) const noexcept { return prefix_[m]; }

  std::span<const double> values() const noexcept { return g_; }
  std::span<const double> prefix() const noexcept { return prefix_; }

private:
  std::uint64_t limit_ = 0;
  std::vector<double> g_;
  std::vector<double> prefix_;
};

// sum_{k=1}^{n-1} Lambda(k) Lambda(n-k) in ascending k. Requires
// 2 <= n <= limit+1.
double g_direct(std::uint64_t n, const LambdaTable& lambda);

// G via real transform of length next_pow2(2N+2). Values below (log 2)^2 / 2
// are set to exactly zero: no nonzero G(n) is smaller than (log 2)^2.
GTable g_table_fft(const LambdaTable& lambda);

// Same table from g_direct over every n, OpenMP-parallel over n. O(N^2);
// used as the oracle on small tables.
GTable g_table_direct(const LambdaTable& lambda);

double g_partial_sum(double x, const GTable& table);

struct GScanResult {
  std::uint64_t n = 0;
  double g = 0.0;
  double g_over_n = 0.0;
};

// Argmax of g over [lo, hi] (optionally only n divisible by `modulus`);
// ties go to the smaller n.
GScanResult max_g_scan(std::uint64_t lo, std::uint64_t hi, const GTable& table,
                       std::optional<std::uint64_t> modulus = std::nullopt);

// Same container as the Lambda cache with version kGTableCacheVersion and the
// 2N+1 values g(0..2N) as payload.
inline constexpr std::uint32_t kGTableCacheVersion = 0x00010001;

void save_gtable_cache(const std::filesystem::path& path, const GTable& table);
GTable load_gtable_cache(const std::filesystem::path& path);

}  // namespace glab
