#include "dispatch.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "config.hpp"
#include "glab/circle.hpp"
#include "glab/error.hpp"
#include "glab/error_analysis.hpp"
#include "glab/explicit_formula.hpp"
#include "glab/goldbach.hpp"
#include "glab/sieve.hpp"
#include "glab/window_sum.hpp"
#include "glab/zeros.hpp"
#include "output.hpp"
#include "plot.hpp"

namespace glab::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  std::string config;
  std::string format;
  std::string cache_dir;
  std::string zeros;
  std::string out;
  int threads = -1;
  long long chunk = -1;
};

struct Context {
  RunConfig cfg;
  std::ostream* out;
  std::ostream* err;
};

LambdaTable load_lambda(std::uint64_t limit, const std::string& cache) {
  if (cache.empty()) return build_lambda(limit);
  return cached_lambda(limit, cache);
}

ZeroTable load_zero_source(const std::string& source, const RunConfig& cfg) {
  if (source == "builtin") return builtin_zeros();
  if (source.rfind("http://", 0) == 0 || source.rfind("https://", 0) == 0)
    return fetch_zeros(source, cfg.cache_dir);
  return load_zeros_file(source);
}

double resolve_height(const std::string& spec, const ZeroTable& zeros) {
  if (spec.empty() || spec == "max") return zeros.back();
  try {
    std::size_t pos = 0;
    const double v = std::stod(spec, &pos);
    if (pos == spec.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--T expects a number or 'max', got '" + spec + "'");
}

std::vector<double> parse_xs(const std::string& spec) {
  // log:lo:hi:count or a comma-separated list
  if (spec.rfind("log:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(spec.substr(4));
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    if (parts.size() != 3) throw UsageError("--xs log spec is log:lo:hi:count");
    try {
      return half_integer_log_grid(std::stod(parts[0]), std::stod(parts[1]),
                                   std::stoul(parts[2]));
    } catch (const std::logic_error&) {
      throw UsageError("--xs log spec is log:lo:hi:count");
    }
  }
  std::vector<double> xs;
  std::stringstream ss(spec);
  std::string p;
  while (std::getline(ss, p, ',')) {
    try {
      xs.push_back(std::stod(p));
    } catch (const std::logic_error&) {
      throw UsageError("--xs: not a number: '" + p + "'");
    }
  }
  if (xs.empty()) throw UsageError("--xs is empty");
  return xs;
}

std::uint64_t limit_for(double x) { return static_cast<std::uint64_t>(std::ceil(x)) + 1; }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"glab: mean value of Goldbach representations, numerically"};
  app.name("glab");
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--config", g.config, "JSON config file");
  app.add_option("--format", g.format, "csv or json");
  app.add_option("--cache-dir", g.cache_dir, "cache directory for fetched zero tables");
  app.add_option("--threads", g.threads, "OpenMP threads (0 = auto)");
  app.add_option("--chunk-size", g.chunk, "zero-sum reduction chunk (power of two)");
  app.add_option("--out", g.out, "write the table here instead of stdout");

  std::function<Table(Context&)> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // sieve
  std::uint64_t limit = 0;
  std::string sieve_cache;
  std::size_t segment = kDefaultSegment;
  auto* sieve_cmd = sub("sieve", "sieve Lambda up to --limit and report Psi");
  sieve_cmd->add_option("--limit", limit)->required();
  sieve_cmd->add_option("--sieve-cache", sieve_cache);
  sieve_cmd->add_option("--segment", segment);
  sieve_cmd->callback([&] {
    action = [&](Context&) {
      SieveOptions so;
      so.segment = segment;
      const LambdaTable lam = sieve_cache.empty() ? build_lambda(limit, so)
                                                  : cached_lambda(limit, sieve_cache, so);
      const PsiTable psi_table(lam);
      std::int64_t powers = 0;
      for (double v : lam.values()) powers += v > 0.0;
      Table t{{"limit", "psi", "psi_over_limit", "prime_powers"}, {}};
      t.add({static_cast<std::int64_t>(limit), psi_table[limit],
             psi_table[limit] / static_cast<double>(limit), powers});
      return t;
    };
  });

  // gsum
  std::vector<double> xs;
  std::string g_cache;
  auto* gsum_cmd = sub("gsum", "partial sums of G(n)");
  gsum_cmd->add_option("--limit", limit)->required();
  gsum_cmd->add_option("--x", xs)->required()->delimiter(',');
  gsum_cmd->add_option("--sieve-cache", sieve_cache);
  gsum_cmd->add_option("--g-cache", g_cache);
  gsum_cmd->callback([&] {
    action = [&](Context&) {
      std::optional<GTable> table;
      if (!g_cache.empty() && std::filesystem::exists(g_cache)) {
        try {
          GTable cached = load_gtable_cache(g_cache);
          if (cached.limit() == limit) table = std::move(cached);
        } catch (const Error&) {
        }
      }
      if (!table) {
        table = g_table_fft(load_lambda(limit, sieve_cache));
        if (!g_cache.empty()) save_gtable_cache(g_cache, *table);
      }
      Table t{{"x", "sum_g"}, {}};
      for (double x : xs) t.add({x, g_partial_sum(x, *table)});
      return t;
    };
  });

  // zeros fetch|validate
  std::string zero_file, zero_url;
  auto* zeros_cmd = sub("zeros", "zero tables: fetch or validate");
  zeros_cmd->require_subcommand(1);
  auto* fetch_cmd = zeros_cmd->add_subcommand("fetch", "download a table into the cache");
  fetch_cmd->fallthrough();
  fetch_cmd->add_option("--url", zero_url)->required();
  fetch_cmd->callback([&] {
    action = [&](Context& ctx) {
      const ZeroTable z = fetch_zeros(zero_url, ctx.cfg.cache_dir);
      Table t{{"source", "count", "first", "last", "precision_digits"}, {}};
      t.add({z.source(), static_cast<std::int64_t>(z.size()), z.front(), z.back(),
             static_cast<std::int64_t>(z.precision_digits())});
      return t;
    };
  });
  auto* validate_cmd = zeros_cmd->add_subcommand("validate", "compare a table with N(T)");
  validate_cmd->fallthrough();
  auto* file_opt = validate_cmd->add_option("--file", zero_file);
  validate_cmd->add_option("--url", zero_url)->excludes(file_opt);
  validate_cmd->callback([&] {
    action = [&](Context& ctx) {
      const std::string src =
          !zero_file.empty() ? zero_file : (!zero_url.empty() ? zero_url : ctx.cfg.zeros_source);
      const ZeroTable z = load_zero_source(src, ctx.cfg);
      const ValidationReport r = validate_zeros(z);
      Table t{{"source", "count", "height", "estimate", "checked", "pass"}, {}};
      t.add({z.source(), static_cast<std::int64_t>(r.count), r.height, r.estimate,
             static_cast<std::int64_t>(r.checked), static_cast<std::int64_t>(r.pass)});
      return t;
    };
  });

  // hterm
  std::string height_spec;
  auto* hterm_cmd = sub("hterm", "truncated oscillatory term H_T(x)");
  hterm_cmd->add_option("--x", xs)->required()->delimiter(',');
  hterm_cmd->add_option("--zeros", g.zeros, "file, URL or 'builtin'");
  hterm_cmd->add_option("-T,--T,--height", height_spec, "truncation height or 'max'");
  hterm_cmd->callback([&] {
    action = [&](Context& ctx) {
      const ZeroTable z = load_zero_source(ctx.cfg.zeros_source, ctx.cfg);
      const double height = resolve_height(height_spec, z);
      SumOptions so;
      so.chunk = ctx.cfg.chunk_size;
      Table t{{"x", "T", "terms", "H", "tail"}, {}};
      for (const HTermResult& r : h_term_many(xs, z, height, so))
        t.add({r.x, r.height, static_cast<std::int64_t>(r.terms_used), r.value, r.tail_estimate});
      return t;
    };
  });

  // circle
  double cx = 0.0, cy = 0.0, ch = 0.0;
  std::string check = "identity";
  std::uint64_t circle_limit = 0;
  std::size_t trials = 200, max_n = 64;
  std::uint64_t seed = 1;
  std::vector<double> ys{4.0, 8.0};
  auto* circle_cmd = sub("circle", "circle-method identities and L2 checks");
  circle_cmd->set_help_flag("--help");
  circle_cmd->add_option("--x", cx)->required();
  circle_cmd->add_option("--check", check)
      ->check(CLI::IsMember({"identity", "decomp", "local-l2", "selberg", "gallagher", "dyadic"}));
  circle_cmd->add_option("--y", cy, "window scale (local-l2; default sqrt(x))");
  circle_cmd->add_option("--h", ch, "interval length (selberg; default x^0.5)");
  circle_cmd->add_option("--limit", circle_limit, "sieve limit (default from x)");
  circle_cmd->add_option("--trials", trials);
  circle_cmd->add_option("--max-n", max_n);
  circle_cmd->add_option("--seed", seed);
  circle_cmd->add_option("--ys", ys)->delimiter(',');
  circle_cmd->callback([&] {
    action = [&](Context&) -> Table {
      if (check == "gallagher") {
        Table t{{"trial", "N", "y", "lhs", "rhs", "ratio"}, {}};
        for (const GallagherTrial& tr : gallagher_random_trials(trials, max_n, ys, seed))
          t.add({static_cast<std::int64_t>(tr.index), static_cast<std::int64_t>(tr.size), tr.y,
                 tr.check.lhs, tr.check.rhs, tr.check.ratio});
        return t;
      }
      const double h = ch > 0.0 ? ch : std::sqrt(cx);
      const std::uint64_t need = check == "selberg" ? limit_for(cx + h) : limit_for(cx);
      const LambdaTable lam = build_lambda(circle_limit ? circle_limit : need);
      if (check == "identity") {
        const IntegralCheck c = total_integral_check(cx, lam);
        Table t{{"x", "lhs", "rhs", "diff", "M"}, {}};
        t.add({cx, c.lhs, c.rhs, c.lhs - c.rhs, static_cast<std::int64_t>(c.M)});
        return t;
      }
      if (check == "decomp") {
        const Decomposition d = decomposition_terms(cx, lam);
        Table t{{"x", "main", "second", "third", "total", "second_closed", "M"}, {}};
        t.add({cx, d.main, d.second, d.third, d.total, d.second_closed,
               static_cast<std::int64_t>(d.M)});
        return t;
      }
      if (check == "local-l2") {
        const double y = cy > 0.0 ? cy : std::sqrt(cx);
        const double v = local_l2(cx, y, lam);
        const auto k = static_cast<std::size_t>(std::floor(cx));
        std::vector<cplx> c(k);
        for (std::size_t n = 1; n <= k; ++n) c[n - 1] = lam[n] - 1.0;
        const double b_bound = WindowSum(c, y).one_sided_l2() / (y * y);
        const double scale = cx / y * std::pow(std::log(cx), 4);
        Table t{{"x", "y", "local_l2", "ratio", "one_sided_bound", "M"}, {}};
        t.add({cx, y, v, v / scale, b_bound, static_cast<std::int64_t>(local_l2_grid_size(cx, y))});
        return t;
      }
      if (check == "selberg") {
        const PsiTable psi_table(lam);
        const double v = selberg_integral(cx, h, psi_table);
        Table t{{"x", "h", "integral", "ratio"}, {}};
        t.add({cx, h, v, v / (cx * h * std::pow(std::log(cx), 2))});
        return t;
      }
      Table t{{"k", "lo", "hi", "abs_t_r2", "r2", "t_bound"}, {}};
      for (const DyadicShell& s : dyadic_report(cx, lam))
        t.add({static_cast<std::int64_t>(s.k), s.lo, s.hi, s.abs_t_r2, s.r2, s.t_bound});
      return t;
    };
  });

  // error-table
  std::string xs_spec;
  auto* error_cmd = sub("error-table", "E(x) and its normalized ratios at half-integers");
  error_cmd->add_option("--limit", limit)->required();
  error_cmd->add_option("--zeros", g.zeros);
  error_cmd->add_option("--xs", xs_spec, "log:lo:hi:count or a comma list")->required();
  error_cmd->add_option("-T,--T,--height", height_spec);
  error_cmd->add_option("--sieve-cache", sieve_cache);
  error_cmd->callback([&] {
    action = [&](Context& ctx) {
      const std::vector<double> points = parse_xs(xs_spec);
      const ZeroTable z = load_zero_source(ctx.cfg.zeros_source, ctx.cfg);
      const double height = resolve_height(height_spec, z);
      const GTable table = g_table_fft(load_lambda(limit, sieve_cache));
      SumOptions so;
      so.chunk = ctx.cfg.chunk_size;
      Table t{{"x", "sum_g", "h_value", "h_tail", "e_value", "ratio_upper", "ratio_lower",
               "ratio_fujii", "terms"},
              {}};
      for (const ErrorRecord& r : error_ratio_table(points, table, z, height, so))
        t.add({r.x, r.sum_g, r.h_value, r.h_tail, r.e_value, r.ratio_upper, r.ratio_lower,
               r.ratio_fujii, static_cast<std::int64_t>(r.terms)});
      return t;
    };
  });

  // omega
  double ox = 0.0;
  std::vector<std::uint64_t> qs;
  std::uint64_t omega_limit = 0;
  auto* omega_cmd = sub("omega", "arithmetic-progression lower bounds and max G over q | n");
  omega_cmd->add_option("--x", ox)->required();
  omega_cmd->add_option("--q", qs)->required()->delimiter(',');
  omega_cmd->add_option("--limit", omega_limit, "sieve limit (default 4x)");
  omega_cmd->callback([&] {
    action = [&](Context& ctx) {
      const auto need = static_cast<std::uint64_t>(std::ceil(4.0 * ox));
      const LambdaTable lam = build_lambda(std::max(omega_limit, need));
      const GTable table = g_table_fft(lam);
      Table t{{"x", "q", "phi", "lhs", "mid", "rhs", "lhs_ge_mid", "mid_ge_rhs", "degenerate",
               "max_n", "max_g", "max_g_over_n", "singular_series"},
              {}};
      for (std::uint64_t q : qs) {
        const OmegaCheck c = omega_lower_check(ox, q, table, lam);
        if (c.degenerate) *ctx.err << "warning: q = 1 counts S(x,1,0)^2 once\n";
        const GScanResult m = max_g_scan(2, need, table, q);
        t.add({ox, static_cast<std::int64_t>(q), static_cast<std::int64_t>(euler_phi(q)), c.lhs,
               c.mid, c.rhs, static_cast<std::int64_t>(c.lhs >= c.mid),
               static_cast<std::int64_t>(c.mid >= c.rhs), static_cast<std::int64_t>(c.degenerate),
               static_cast<std::int64_t>(m.n), m.g, m.g_over_n, singular_series(m.n)});
      }
      return t;
    };
  });

  // plot
  std::string plot_table, plot_kind;
  std::string script;
  auto* plot_cmd = sub("plot", "emit a gnuplot script for a result table");
  plot_cmd->add_option("--table", plot_table)->required();
  plot_cmd->add_option("--kind", plot_kind, "error, gsum or hterm")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "glab: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    Overrides flags;
    if (!g.format.empty()) flags["output_format"] = g.format;
    if (!g.cache_dir.empty()) flags["cache_dir"] = g.cache_dir;
    if (!g.zeros.empty()) flags["zeros_source"] = g.zeros;
    if (g.threads >= 0) flags["threads"] = std::to_string(g.threads);
    if (g.chunk >= 0) flags["chunk_size"] = std::to_string(g.chunk);
    std::optional<std::filesystem::path> config_file;
    if (!g.config.empty()) config_file = g.config;
    RunConfig cfg;
    try {
      cfg = resolve_config(config_file, environment_overrides(), flags);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

    Context ctx{cfg, &out, &err};
    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!g.out.empty()) {
      file_out.open(g.out, std::ios::trunc);
      if (!file_out) fail(ErrorKind::io, "cannot write " + g.out);
      sink = &file_out;
    }

    if (plot_cmd->parsed()) {
      const auto kind = parse_plot_kind(plot_kind);
      if (!kind) throw UsageError("--kind must be error, gsum or hterm");
      *sink << emit_plot_script(plot_table, *kind);
      return kExitOk;
    }
    const Table t = action(ctx);
    write_table(*sink, t, cfg.output_format);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "glab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "glab: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "glab: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace glab::cli
