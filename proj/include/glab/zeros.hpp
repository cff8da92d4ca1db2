#pragma once

// Tables of ordinates gamma of nontrivial zeta zeros rho = 1/2 + i*gamma.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace glab {

class ZeroTable {
public:
  ZeroTable() = default;
  // Enforces: nonempty, strictly ascending, every ordinate > 14.
  ZeroTable(std::vector<double> gammas, std::string source, int precision_digits);

  std::span<const double> gammas() const noexcept { return gammas_; }
  std::size_t size() const noexcept { return gammas_.size(); }
  double front() const { return gammas_.front(); }
  double back() const { return gammas_.back(); }
  const std::string& source() const noexcept { return source_; }
  int precision_digits() const noexcept { return precision_digits_; }

  // Number of ordinates <= height.
  std::size_t count_up_to(double height) const;
  // Table of the first k zeros (k <= size()).
  ZeroTable prefix(std::size_t k) const;

private:
  std::vector<double> gammas_;
  std::string source_;
  int precision_digits_ = 0;
};

// One decimal ordinate per line; blank lines and '#' comments are skipped.
// Throws ParseError (with line), order or empty-table errors.
ZeroTable parse_zeros(std::istream& in, std::string source = "<stream>");
ZeroTable parse_zeros(std::string_view text, std::string source = "<string>");
ZeroTable load_zeros_file(const std::filesystem::path& path);

// Shortest round-trip decimal per line; parse(serialize(t)) reproduces the
// ordinates bit for bit.
std::string serialize_zeros(const ZeroTable& table);

// First 100 ordinates, shipped with the library.
const ZeroTable& builtin_zeros();

// Riemann-von Mangoldt main term (T/2pi) log(T/(2 pi e)) + 7/8; domain
// error for T < 2 pi e.
double zero_count_estimate(double height);

struct ValidationReport {
  std::size_t count = 0;
  double height = 0.0;
  double estimate = 0.0;
  bool checked = false;  // false when height < 2 pi e (vacuous pass)
  bool pass = false;
};

// Passes iff |count - estimate| <= 1 + 0.05 * estimate at T = last gamma.
ValidationReport validate_zeros(const ZeroTable& table);

// Upper estimate for |H(x) - H_T(x)|:
// 2 * (2/pi) * x^{3/2} * (log(T/2pi) + 1) / T. Domain error for T < 2 pi.
double tail_bound(double height, double x);

// Download-once cache. Layout inside cache_dir:
//   <key>.txt        raw table as fetched
//   <key>.json       {"url", "sha256", "fetched_at"}
//   .lock            serializes concurrent fetches (flock)
// where key is the hex sha256 of the URL.
struct FetchOptions {
  bool allow_network = true;
  int timeout_seconds = 60;
};

ZeroTable fetch_zeros(const std::string& url, const std::filesystem::path& cache_dir,
                      const FetchOptions& opts = {});

std::string sha256_hex(std::string_view bytes);

}  // namespace glab
