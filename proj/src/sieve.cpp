#include "glab/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include "binio.hpp"
#include "glab/error.hpp"

namespace glab {

LambdaTable::LambdaTable(std::uint64_t limit, std::vector<double> values)
    : limit_(limit), values_(std::move(values)) {
  if (values_.size() != limit_ + 1)
    fail(ErrorKind::capacity, "lambda table size does not match its limit");
}

double LambdaTable::at(std::uint64_t n) const {
  if (n > limit_) fail(ErrorKind::range, "Lambda(" + std::to_string(n) + ") beyond sieve limit");
  return values_[n];
}

PsiTable::PsiTable(const LambdaTable& lambda)
    : limit_(lambda.limit()), prefix_(lambda.limit() + 1, 0.0) {
  const auto v = lambda.values();
  for (std::uint64_t n = 1; n <= limit_; ++n) prefix_[n] = prefix_[n - 1] + v[n];
}

double psi(double x, const PsiTable& table) {
  if (!(x >= 0.0)) fail(ErrorKind::domain, "psi: x must be nonnegative");
  if (x > static_cast<double>(table.limit()))
    fail(ErrorKind::range, "psi: x beyond table limit");
  return table[static_cast<std::uint64_t>(std::floor(x))];
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

LambdaTable build_lambda(std::uint64_t limit, const SieveOptions& opts) {
  if (limit == 0) fail(ErrorKind::capacity, "sieve limit must be at least 1");
  if (limit > opts.cap)
    fail(ErrorKind::capacity, "sieve limit " + std::to_string(limit) + " exceeds budget " +
                                  std::to_string(opts.cap));
  if (opts.segment == 0) fail(ErrorKind::capacity, "segment length must be positive");

  std::vector<double> values(limit + 1, 0.0);
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint32_t> small = primes_up_to(root);

  // Primes in [2, limit], one segment per iteration.
  const std::uint64_t seg = opts.segment;
  const std::int64_t nseg = static_cast<std::int64_t>((limit - 1) / seg + 1);
#pragma omp parallel
  {
    std::vector<char> composite(seg);
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < nseg; ++s) {
      const std::uint64_t lo = 2 + static_cast<std::uint64_t>(s) * seg;
      const std::uint64_t hi = std::min(limit, lo + seg - 1);
      std::fill(composite.begin(), composite.end(), 0);
      for (std::uint32_t p : small) {
        const std::uint64_t pp = std::uint64_t{p} * p;
        if (pp > hi) break;
        std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
        for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = 1;
      }
      for (std::uint64_t n = lo; n <= hi; ++n)
        if (!composite[n - lo]) values[n] = std::log(static_cast<double>(n));
    }
  }

  // Higher prime powers only come from primes up to sqrt(limit).
  for (std::uint32_t p : small) {
    if (std::uint64_t{p} * p > limit) break;
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = std::uint64_t{p} * p; q <= limit; q *= p) {
      values[q] = lp;
      if (q > limit / p) break;
    }
  }
  return LambdaTable(limit, std::move(values));
}

std::uint64_t euler_phi(std::uint64_t q) {
  if (q == 0) fail(ErrorKind::domain, "euler_phi: q must be positive");
  std::uint64_t result = q;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    result -= result / p;
  }
  if (q > 1) result -= result / q;
  return result;
}

std::uint64_t primorial(unsigned k) {
  if (k == 0) fail(ErrorKind::domain, "primorial: k must be positive");
  std::uint64_t product = 1;
  unsigned found = 0;
  for (std::uint64_t n = 2; found < k; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) { prime = false; break; }
    if (!prime) continue;
    if (product > std::numeric_limits<std::uint64_t>::max() / n)
      fail(ErrorKind::overflow, "primorial(" + std::to_string(k) + ") exceeds 64 bits");
    product *= n;
    ++found;
  }
  return product;
}

bool is_squarefree(std::uint64_t q) {
  if (q == 0) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    q /= p;
    if (q % p == 0) return false;
  }
  return true;
}

void save_lambda_cache(const std::filesystem::path& path, const LambdaTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, "cannot write sieve cache " + path.string());
  out.write(binio::kMagic, 4);
  binio::put<std::uint32_t>(out, kLambdaCacheVersion);
  binio::put<std::uint64_t>(out, table.limit());
  binio::put_doubles(out, table.values().subspan(1));
  if (!out) fail(ErrorKind::io, "short write to sieve cache " + path.string());
}

LambdaTable load_lambda_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open sieve cache " + path.string());
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t n = 0;
  if (!in.read(magic, 4) || !std::equal(magic, magic + 4, binio::kMagic))
    fail(ErrorKind::integrity, "sieve cache has bad magic: " + path.string());
  if (!binio::get(in, version) || version != kLambdaCacheVersion)
    fail(ErrorKind::integrity, "sieve cache version mismatch: " + path.string());
  if (!binio::get(in, n) || n == 0 || n > kDefaultSieveCap)
    fail(ErrorKind::integrity, "sieve cache has bad length: " + path.string());
  std::vector<double> values(n + 1, 0.0);
  if (!binio::get_doubles(in, std::span<double>(values).subspan(1)))
    fail(ErrorKind::integrity, "sieve cache truncated: " + path.string());
  return LambdaTable(n, std::move(values));
}

LambdaTable cached_lambda(std::uint64_t limit, const std::filesystem::path& path,
                          const SieveOptions& opts) {
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      LambdaTable cached = load_lambda_cache(path);
      if (cached.limit() == limit) return cached;
      if (cached.limit() > limit) {
        auto v = cached.values().first(limit + 1);
        return LambdaTable(limit, std::vector<double>(v.begin(), v.end()));
      }
    } catch (const Error&) {
      // stale or foreign file, rebuild below
    }
  }
  LambdaTable table = build_lambda(limit, opts);
  save_lambda_cache(path, table);
  return table;
}

}  // namespace glab
