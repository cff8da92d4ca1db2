#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "glab/error.hpp"
#include "glab/reference.hpp"
#include "glab/sieve.hpp"

using namespace glab;

namespace {

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power_trial(std::uint64_t n) {
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    if (!is_prime_trial(p)) return false;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return false;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a glab::Error");
  return ErrorKind::io;
}

}  // namespace

TEST_CASE("build_lambda small values") {
  const LambdaTable t = build_lambda(12);
  CHECK(t[1] == 0.0);
  CHECK(t[8] == doctest::Approx(0.693147).epsilon(1e-6));
  CHECK(t[9] == doctest::Approx(1.098612).epsilon(1e-6));
  CHECK(t[12] == 0.0);
  CHECK(t[8] == std::log(2.0));

  const LambdaTable one = build_lambda(1);
  REQUIRE(one.values().size() == 2);
  CHECK(one[1] == 0.0);

  const LambdaTable ten = build_lambda(10);
  double sum = 0.0;
  for (std::uint64_t n = 1; n <= 10; ++n) sum += ten[n];
  // 3 log 2 + 2 log 3 + log 5 + log 7
  CHECK(sum == doctest::Approx(7.832014180505469).epsilon(1e-14));
}

TEST_CASE("build_lambda errors") {
  CHECK(kind_of([] { build_lambda(0); }) == ErrorKind::capacity);
  SieveOptions small_cap;
  small_cap.cap = 1000;
  CHECK(kind_of([&] { build_lambda(1001, small_cap); }) == ErrorKind::capacity);
  CHECK_NOTHROW(build_lambda(1000, small_cap));
}

TEST_CASE("Lambda positive exactly on prime powers up to 1e5") {
  const LambdaTable t = build_lambda(100000);
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const bool pp = is_prime_power_trial(n);
    if ((t[n] > 0.0) != pp) {
      FAIL_CHECK("mismatch at n = " << n);
      break;
    }
  }
}

TEST_CASE("segmented sieve matches the spf reference and is segment independent") {
  const std::uint64_t N = 300007;
  const LambdaTable ref = reference::lambda_spf(N);
  for (std::size_t seg : {std::size_t{1}, std::size_t{7}, std::size_t{4096}, kDefaultSegment}) {
    SieveOptions o;
    o.segment = seg;
    const LambdaTable t = build_lambda(seg == 1 ? 5000 : N, o);
    const auto v = t.values();
    const auto r = ref.values().first(v.size());
    CHECK(std::equal(v.begin(), v.end(), r.begin()));
  }
}

TEST_CASE("psi") {
  const PsiTable p(build_lambda(10));
  CHECK(psi(10, p) == doctest::Approx(7.832014).epsilon(1e-7));
  CHECK(psi(1.9, p) == 0.0);
  CHECK(psi(2, p) == doctest::Approx(0.693147).epsilon(1e-6));
  CHECK(psi(0, p) == 0.0);
  CHECK(kind_of([&] { psi(10.5, p); }) == ErrorKind::range);
}

TEST_CASE("PsiTable invariants") {
  const LambdaTable lam = build_lambda(200000);
  const PsiTable p(lam);
  auto v = lam.values();
  CHECK(p[1] == 0.0);
  double total = 0.0;
  for (std::uint64_t n = 1; n <= lam.limit(); ++n) total += v[n];
  CHECK(total == p[lam.limit()]);
  for (std::uint64_t n = 1; n <= lam.limit(); ++n) {
    REQUIRE(p[n] >= p[n - 1]);
    REQUIRE(p[n] == p[n - 1] + v[n]);
  }
  for (std::uint64_t n = 1000; n <= lam.limit(); ++n) {
    const double r = p[n] / static_cast<double>(n);
    REQUIRE(r >= 0.8);
    REQUIRE(r <= 1.2);
  }
}

TEST_CASE("euler_phi and primorial") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(210) == 48);
  CHECK(euler_phi(97) == 96);
  CHECK(euler_phi(1024) == 512);
  for (std::uint64_t q = 1; q <= 300; ++q) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= q; ++a) count += std::gcd(a, q) == 1;
    REQUIRE(euler_phi(q) == count);
  }
  CHECK(primorial(1) == 2);
  CHECK(primorial(3) == 30);
  CHECK(primorial(4) == 210);
  CHECK(primorial(15) == 614889782588491410ULL);
  CHECK(kind_of([] { primorial(16); }) == ErrorKind::overflow);
  CHECK(is_squarefree(210));
  CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("lambda cache round trip and header layout") {
  const auto dir = std::filesystem::temp_directory_path() / "glab_sieve_cache_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "lambda.bin";
  const LambdaTable t = build_lambda(5000);
  save_lambda_cache(path, t);
  CHECK(std::filesystem::file_size(path) == 4 + 4 + 8 + 5000 * 8);
  {
    std::ifstream in(path, std::ios::binary);
    char magic[4];
    in.read(magic, 4);
    CHECK(std::string(magic, 4) == "GLAB");
    unsigned char ver[4];
    in.read(reinterpret_cast<char*>(ver), 4);
    CHECK(ver[0] == 1);
    CHECK(ver[1] == 0);
    unsigned char n[8];
    in.read(reinterpret_cast<char*>(n), 8);
    CHECK(n[0] + 256 * n[1] == 5000);
  }
  const LambdaTable back = load_lambda_cache(path);
  CHECK(back.limit() == 5000);
  CHECK(std::equal(back.values().begin(), back.values().end(), t.values().begin()));

  // a larger cache serves a smaller request
  const LambdaTable smaller = cached_lambda(1000, path);
  CHECK(smaller.limit() == 1000);
  CHECK(smaller[997] == t[997]);

  // corrupted header
  {
    std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(0);
    f.write("XXXX", 4);
  }
  CHECK(kind_of([&] { load_lambda_cache(path); }) == ErrorKind::integrity);
  // cached_lambda rebuilds over a bad file
  const LambdaTable rebuilt = cached_lambda(2000, path);
  CHECK(rebuilt.limit() == 2000);
  CHECK(load_lambda_cache(path).limit() == 2000);
  std::filesystem::remove_all(dir);
}
