#include "plot.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "glab/error.hpp"

namespace glab::cli {
namespace {

struct Series {
  std::string column;
  std::string title;
};

struct PlotSpec {
  std::string title;
  std::string ylabel;
  bool log_x;
  std::vector<Series> series;
  // optional y transform in gnuplot syntax; X and Y stand for the x and
  // series columns
  std::string y_expr;
};

PlotSpec spec_for(PlotKind kind) {
  switch (kind) {
    case PlotKind::error:
      return {"Normalized error term", "E(x) / scale", true,
              {{"ratio_upper", "E/(x log^5 x)"}, {"ratio_lower", "E/(x log log x)"},
               {"ratio_fujii", "E/(x log x)^{4/3}"}},
              ""};
    case PlotKind::gsum:
      return {"Mean value of G", "sum G(n) / (x^2/2)", true, {{"sum_g", "sum_{n<=x} G(n) / (x^2/2)"}},
              "(Y/(X*X/2.0))"};
    case PlotKind::hterm:
      return {"Oscillatory term", "H_T(x) / x^{3/2}", true, {{"H", "H_T(x) / x^{3/2}"}},
              "(Y/(X**1.5))"};
  }
  return {};
}

std::vector<std::string> split_header(const std::string& line) {
  std::vector<std::string> cols;
  std::stringstream ss(line);
  std::string c;
  while (std::getline(ss, c, ',')) {
    if (!c.empty() && c.back() == '\r') c.pop_back();
    cols.push_back(c);
  }
  return cols;
}

std::string column_ref(const std::string& name) { return "column('" + name + "')"; }

std::string substitute(std::string expr, const std::string& xname, const std::string& yname) {
  auto replace = [&](char from, const std::string& to) {
    for (std::size_t p = expr.find(from); p != std::string::npos; p = expr.find(from, p + to.size()))
      expr.replace(p, 1, to);
  };
  replace('X', column_ref(xname));
  replace('Y', column_ref(yname));
  return expr;
}

}  // namespace

std::optional<PlotKind> parse_plot_kind(std::string_view name) {
  if (name == "error") return PlotKind::error;
  if (name == "gsum") return PlotKind::gsum;
  if (name == "hterm") return PlotKind::hterm;
  return std::nullopt;
}

std::string emit_plot_script(const std::filesystem::path& table, PlotKind kind) {
  std::ifstream in(table);
  if (!in) fail(ErrorKind::io, "cannot open table " + table.string());
  std::string header, first_row;
  if (!std::getline(in, header) || header.empty())
    fail(ErrorKind::schema, "table " + table.string() + " is empty");
  if (!std::getline(in, first_row) || first_row.empty())
    fail(ErrorKind::schema, "table " + table.string() + " has no data rows");
  const auto cols = split_header(header);
  auto require_column = [&](const std::string& name) {
    if (std::find(cols.begin(), cols.end(), name) == cols.end())
      fail(ErrorKind::schema, "table " + table.string() + " has no column '" + name + "'");
  };

  const PlotSpec spec = spec_for(kind);
  require_column("x");
  std::ostringstream s;
  s << "# gnuplot script generated by glab plot\n"
    << "set datafile separator ','\n"
    << "set datafile columnheaders\n"
    << "set title '" << spec.title << "'\n"
    << "set xlabel 'x'\n"
    << "set ylabel '" << spec.ylabel << "'\n";
  if (spec.log_x) s << "set logscale x\n";
  s << "set key left top\n"
    << "set grid\n"
    << "plot ";
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const std::string& name = spec.series[i].column;
    require_column(name);
    const std::string y = spec.y_expr.empty() ? "\"" + name + "\"" : substitute(spec.y_expr, "x", name);
    s << (i ? ", \\\n     " : "") << "'" << table.string() << "' using \"x\":" << y
      << " with linespoints title '" << spec.series[i].title << "'";
  }
  s << "\n";
  return s.str();
}

}  // namespace glab::cli
