// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "glab/circle.hpp"
#include "glab/error_analysis.hpp"
#include "glab/explicit_formula.hpp"
#include "glab/goldbach.hpp"
#include "glab/sieve.hpp"
#include "glab/zeros.hpp"

#include "acceptance_goldens.hpp"

using namespace glab;

namespace {

struct Outcome {
  Outcome() { detail.precision(10); }
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const ZeroTable& zeros() {
  static const ZeroTable z = load_zeros_file(GLAB_DATA_DIR "/zeros100k.txt");
  return z;
}

std::string run_binary(const std::string& args, int& code) {
  const std::string cmd = std::string(GLAB_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  if (!pipe) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void crit_fft_vs_direct(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const LambdaTable lam = build_lambda(2000);
  const GTable t = g_table_fft(lam);
  double worst = 0.0;
  for (std::uint64_t n = 2; n <= 2001; ++n) {
    const double d = g_direct(n, lam);
    worst = std::max(worst, std::abs(t.g(n) - d) / (1.0 + d));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.detail << "max |fft - direct|/(1+G) = " << worst << ", " << secs << " s";
  o.require(worst < 1e-9, "tolerance 1e-9");
  o.require(secs < 10.0, "runtime 10 s");
}

void crit_circle_identity(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const LambdaTable lam = build_lambda(2000);
  double worst = 0.0;
  for (double x : {100.5, 500.5, 1000.5}) {
    const IntegralCheck c = total_integral_check(x, lam);
    worst = std::max(worst, std::abs(c.lhs - c.rhs));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.detail << "max |lhs - rhs| = " << worst << ", " << secs << " s";
  o.require(worst < 1e-6, "tolerance 1e-6");
  o.require(secs < 30.0, "runtime 30 s");
}

void crit_second_term(Outcome& o) {
  const LambdaTable lam = build_lambda(2000);
  double worst = 0.0;
  for (double x : {100.5, 500.5, 1000.5}) {
    const Decomposition d = decomposition_terms(x, lam);
    worst = std::max(worst, std::abs(d.second - d.second_closed) / std::abs(d.second_closed));
  }
  const Decomposition ten = decomposition_terms(10.0, lam);
  o.detail << "max relative gap = " << worst << ", second(10) = " << ten.second;
  o.require(worst < 1e-9, "relative 1e-9");
  o.require(std::abs(ten.second - -22.471652) < 5e-6, "hand value -22.471652");
  o.require(std::abs(ten.second - ten.second_closed) < 1e-9 * std::abs(ten.second_closed),
            "closed form at 10");
}

void crit_truncation(Outcome& o) {
  const ZeroTable& z = zeros();
  if (z.size() < 100000) {
    o.require(false, "zero table has " + std::to_string(z.size()) + " entries");
    return;
  }
  const std::pair<std::size_t, std::size_t> pairs[] = {{1000, 10000}, {10000, 100000}};
  double worst = 0.0;  // largest diff / bound
  for (double x : {1e3, 1e4, 1e5}) {
    for (const auto& [k1, k2] : pairs) {
      const double t1 = z.gammas()[k1 - 1], t2 = z.gammas()[k2 - 1];
      const double diff = std::abs(h_term(x, z, t2).value - h_term(x, z, t1).value);
      worst = std::max(worst, diff / tail_bound(t1, x));
    }
  }
  o.detail << "max |H_T2 - H_T1| / tail_bound(T1) = " << worst;
  o.require(worst <= 1.0, "difference within tail_bound");
}

void crit_upper_shadow(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const ZeroTable& z = zeros();
  if (z.size() < 100000) {
    o.require(false, "zero table has " + std::to_string(z.size()) + " entries");
    return;
  }
  const LambdaTable lam = build_lambda(1000000);
  const GTable t = g_table_fft(lam);
  const auto xs = half_integer_log_grid(1e3, 1e6, 20);
  const auto rows = error_ratio_table(xs, t, z, z.back());
  double worst_ratio = 0.0, worst_rel = 0.0;
  bool shape = rows.size() == kErrorGoldens.size();
  for (std::size_t i = 0; i < rows.size() && shape; ++i) {
    shape = rows[i].x == kErrorGoldens[i].x;
    worst_ratio = std::max(worst_ratio, std::abs(rows[i].ratio_upper));
    worst_rel = std::max(worst_rel, std::abs(rows[i].e_value - kErrorGoldens[i].e) /
                                        std::abs(kErrorGoldens[i].e));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.detail << "max |E|/(x log^5 x) = " << worst_ratio << " (bound " << kUpperRatioBound
           << "), max rel dev from goldens = " << worst_rel << ", " << secs << " s";
  o.require(shape, "x grid");
  o.require(worst_ratio <= kUpperRatioBound, "ratio bound");
  o.require(worst_rel < 1e-6, "goldens 1e-6");
  o.require(secs < 600.0, "runtime 10 min");
}

void crit_selberg(Outcome& o) {
  const double hmax = std::pow(1e6, 0.8);
  const LambdaTable lam = build_lambda(static_cast<std::uint64_t>(1e6 + hmax) + 2);
  const PsiTable psi(lam);
  double worst = 0.0;
  for (double x : {1e4, 1e5, 1e6}) {
    for (double e : {0.2, 0.4, 0.6, 0.8}) {
      const double h = std::pow(x, e);
      const double lx = std::log(x);
      worst = std::max(worst, selberg_integral(x, h, psi) / (x * h * lx * lx));
    }
  }
  const double small = selberg_integral(10.0, 2.0, psi);
  const double rel = std::abs(small - kSelbergRiemann_10_2) / kSelbergRiemann_10_2;
  o.detail << "max ratio = " << worst << " (bound " << kSelbergRatioBound
           << "), (10, 2) vs Riemann sum rel = " << rel;
  o.require(worst <= kSelbergRatioBound, "ratio bound");
  o.require(rel < 1e-3, "Riemann-sum oracle");
}

void crit_local_l2(Outcome& o) {
  const LambdaTable lam = build_lambda(10000);
  double worst = 0.0, worst_change = 0.0;
  for (double x : {1e3, 1e4}) {
    for (double y : {std::sqrt(x), std::pow(x, 0.75), x}) {
      const std::size_t M = local_l2_grid_size(x, y);
      const double v = local_l2(x, y, lam, M);
      const double fine = local_l2(x, y, lam, 2 * M);
      const double lx = std::log(x);
      worst = std::max(worst, v / ((x / y) * std::pow(lx, 4)));
      worst_change = std::max(worst_change, std::abs(fine - v) / std::abs(fine));
    }
  }
  o.detail << "max ratio = " << worst << " (bound " << kLocalL2RatioBound
           << "), max change on doubling M = " << worst_change;
  o.require(worst <= kLocalL2RatioBound, "ratio bound");
  o.require(worst_change < 0.01, "refinement 1%");
}

void crit_gallagher(Outcome& o) {
  const std::vector<double> ys{4.0, 8.0};
  double worst = 0.0;
  for (const GallagherTrial& t : gallagher_random_trials(200, 64, ys, 1))
    worst = std::max(worst, t.check.ratio);
  const std::vector<cplx> one{{1.0, 0.0}};
  double hand = 0.0;
  for (double y : {0.5, 1.0, 2.0}) hand = std::max(hand, std::abs(gallagher_check(one, y).ratio - 4.0));
  o.detail << "max ratio = " << worst << " (bound " << kGallagherRatioBound
           << "), |ratio(N=1) - 4| = " << hand;
  o.require(worst <= kGallagherRatioBound, "ratio bound");
  o.require(hand < 1e-9, "N = 1 ratio 4");
}

void crit_omega(Outcome& o) {
  const double x = 1e5;
  const LambdaTable lam = build_lambda(400000);
  const GTable t = g_table_fft(lam);
  for (std::uint64_t q : {6, 30, 210}) {
    const OmegaCheck c = omega_lower_check(x, q, t, lam);
    o.detail << "q=" << q << ": " << c.lhs << " >= " << c.mid << " >= " << c.rhs << "; ";
    o.require(c.lhs >= c.mid && c.mid >= c.rhs, "chain at q = " + std::to_string(q));
  }
  double best = 0.0;
  for (std::uint64_t n = 210; n <= 400000; n += 210) best = std::max(best, t.g(n) / static_cast<double>(n));
  o.detail << "max G(n)/n over 210 | n = " << best;
  o.require(best >= 3.0, "G(n)/n >= 3");
}

void crit_determinism(Outcome& o) {
  const std::string args = " error-table --limit 1000000 --zeros " GLAB_DATA_DIR
                           "/zeros100k.txt --xs log:1000:1000000:20 -T max";
  int c1 = 0, c8 = 0;
  const std::string one = run_binary("--threads 1" + args, c1);
  const std::string eight = run_binary("--threads 8" + args, c8);
  o.detail << one.size() << " bytes, exit codes " << c1 << "/" << c8;
  o.require(c1 == 0 && c8 == 0, "clean exit");
  o.require(!one.empty() && one == eight, "byte-identical CSV");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "G by FFT matches direct convolution, N = 2000", crit_fft_vs_direct},
      {2, "total integral identity at x = 100.5, 500.5, 1000.5", crit_circle_identity},
      {3, "second term equals 2 sum (Psi(n) - n)", crit_second_term},
      {4, "zero truncation within tail bound", crit_truncation},
      {5, "E(x) / (x log^5 x) bounded, E(x) reproduces goldens", crit_upper_shadow},
      {6, "Selberg integral ratio bounded", crit_selberg},
      {7, "local L2 of R ratio bounded, grid stable", crit_local_l2},
      {8, "Gallagher ratio bounded over seeded trials", crit_gallagher},
      {9, "omega chain lhs >= mid >= x^2/(4 phi(q))", crit_omega},
      {10, "error table identical with 1 and 8 threads", crit_determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": "
              << o.detail.str() << std::endl;
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
