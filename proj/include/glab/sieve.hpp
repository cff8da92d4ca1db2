#pragma once

// von Mangoldt values, Chebyshev prefix sums and small arithmetic helpers.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace glab {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;
inline constexpr std::size_t kDefaultSegment = std::size_t{1} << 20;

struct SieveOptions {
  std::size_t segment = kDefaultSegment;
  std::uint64_t cap = kDefaultSieveCap;
};

// Lambda(n) for 1 <= n <= limit, in natural-log units. Entry 0 is stored
// and is always zero so that indices match n.
class LambdaTable {
public:
  LambdaTable() = default;
  LambdaTable(std::uint64_t limit, std::vector<double> values);

  std::uint64_t limit() const noexcept { return limit_; }
  double operator[](std::uint64_t n) const noexcept { return values_[n]; }
  double at(std::uint64_t n) const;

  // values()[n] == Lambda(n), size limit+1.
  std::span<const double> values() const noexcept { return values_; }

private:
  std::uint64_t limit_ = 0;
  std::vector<double> values_;
};

// prefix[n] = sum_{m<=n} Lambda(m), accumulated in ascending n so that
// prefix[n] == prefix[n-1] + Lambda(n) holds bitwise.
class PsiTable {
public:
  PsiTable() = default;
  explicit PsiTable(const LambdaTable& lambda);

  std::uint64_t limit() const noexcept { return limit_; }
  double operator[](std::uint64_t n) const noexcept { return prefix_[n]; }
  std::span<const double> prefix() const noexcept { return prefix_; }

private:
  std::uint64_t limit_ = 0;
  std::vector<double> prefix_;
};

// Segmented sieve over prime powers; segments are processed in parallel and
// write disjoint index ranges, so the table is independent of the segment
// length and thread count.
LambdaTable build_lambda(std::uint64_t limit, const SieveOptions& opts = {});

// Psi(x) with Psi(x) = sum_{n<=x} Lambda(n). Range error for x > limit.
double psi(double x, const PsiTable& table);

// Primes up to limit (plain sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

// Totient by trial factorization.
std::uint64_t euler_phi(std::uint64_t q);

// Product of the first k primes; overflow error when it exceeds 64 bits.
std::uint64_t primorial(unsigned k);

bool is_squarefree(std::uint64_t q);

// Binary cache: "GLAB", u32 version, u64 N, then N little-endian doubles
// holding Lambda(1..N).
inline constexpr std::uint32_t kLambdaCacheVersion = 1;

void save_lambda_cache(const std::filesystem::path& path, const LambdaTable& table);
LambdaTable load_lambda_cache(const std::filesystem::path& path);

// Loads the cache when it exists and covers `limit` with the current format
// version, otherwise sieves and rewrites it.
LambdaTable cached_lambda(std::uint64_t limit, const std::filesystem::path& path,
                          const SieveOptions& opts = {});

}  // namespace glab
