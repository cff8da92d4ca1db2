#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace glab::cli {

std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isnan(*d)) return "nan";
    if (std::isinf(*d)) return *d > 0 ? "inf" : "-inf";
    char buf[40];
    // "C" locale formatting; std::snprintf ignores the global C++ locale
    std::snprintf(buf, sizeof buf, "%.12g", *d == 0.0 ? 0.0 : *d);
    return buf;
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      const auto& c = row[i];
      if (const auto* d = std::get_if<double>(&c)) {
        // keep the 12-digit rounding of the CSV output
        if (std::isfinite(*d)) obj[t.columns[i]] = std::stod(format_cell(c));
        else obj[t.columns[i]] = nullptr;
      } else if (const auto* n = std::get_if<std::int64_t>(&c)) {
        obj[t.columns[i]] = *n;
      } else {
        obj[t.columns[i]] = std::get<std::string>(c);
      }
    }
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& t, OutputFormat fmt) {
  if (fmt == OutputFormat::json) write_json(out, t);
  else write_csv(out, t);
}

}  // namespace glab::cli
