#include "glab/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "glab/error.hpp"

namespace glab {

ZeroTable::ZeroTable(std::vector<double> gammas, std::string source, int precision_digits)
    : gammas_(std::move(gammas)), source_(std::move(source)), precision_digits_(precision_digits) {
  if (gammas_.empty()) fail(ErrorKind::empty_table, "zero table is empty");
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    if (!(gammas_[i] > 14.0))
      fail(ErrorKind::domain, "ordinate " + std::to_string(i + 1) + " is not above 14");
    if (i > 0 && !(gammas_[i] > gammas_[i - 1]))
      fail(ErrorKind::order, "ordinates not strictly ascending at entry " + std::to_string(i + 1));
  }
}

std::size_t ZeroTable::count_up_to(double height) const {
  return static_cast<std::size_t>(std::upper_bound(gammas_.begin(), gammas_.end(), height) -
                                  gammas_.begin());
}

ZeroTable ZeroTable::prefix(std::size_t k) const {
  if (k == 0 || k > gammas_.size()) fail(ErrorKind::range, "zero table prefix length out of range");
  return ZeroTable(std::vector<double>(gammas_.begin(), gammas_.begin() + static_cast<long>(k)),
                   source_ + "[:" + std::to_string(k) + "]", precision_digits_);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

ZeroTable parse_zeros(std::istream& in, std::string source) {
  std::vector<double> gammas;
  int digits = -1;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    double value = 0.0;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(line.data(), end, value, std::chars_format::fixed);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
      throw ParseError(line_no, "not a decimal ordinate: '" + std::string(line) + "'");
    const auto dot = line.find('.');
    const int frac = dot == std::string_view::npos ? 0 : static_cast<int>(line.size() - dot - 1);
    digits = digits < 0 ? frac : std::min(digits, frac);
    if (!gammas.empty() && !(value > gammas.back()))
      fail(ErrorKind::order, "line " + std::to_string(line_no) + ": ordinate " + std::string(line) +
                                 " does not exceed its predecessor");
    gammas.push_back(value);
  }
  if (gammas.empty()) fail(ErrorKind::empty_table, "no ordinates in " + source);
  return ZeroTable(std::move(gammas), std::move(source), digits);
}

ZeroTable parse_zeros(std::string_view text, std::string source) {
  std::istringstream in{std::string(text)};
  return parse_zeros(in, std::move(source));
}

ZeroTable load_zeros_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open zero table " + path.string());
  return parse_zeros(in, path.string());
}

std::string serialize_zeros(const ZeroTable& table) {
  std::string out;
  out.reserve(table.size() * 20);
  char buf[64];
  for (double g : table.gammas()) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g, std::chars_format::fixed);
    out.append(buf, ptr);
    out.push_back('\n');
  }
  return out;
}

double zero_count_estimate(double height) {
  const double two_pi = 2.0 * std::numbers::pi;
  if (!(height >= two_pi * std::numbers::e))
    fail(ErrorKind::domain, "zero_count_estimate: T below 2*pi*e");
  return height / two_pi * std::log(height / (two_pi * std::numbers::e)) + 7.0 / 8.0;
}

ValidationReport validate_zeros(const ZeroTable& table) {
  ValidationReport report;
  report.height = table.back();
  report.count = table.count_up_to(report.height);
  if (report.height < 2.0 * std::numbers::pi * std::numbers::e) {
    report.pass = true;
    return report;
  }
  report.checked = true;
  report.estimate = zero_count_estimate(report.height);
  report.pass =
      std::abs(static_cast<double>(report.count) - report.estimate) <= 1.0 + 0.05 * report.estimate;
  return report;
}

double tail_bound(double height, double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  if (!(height >= two_pi)) fail(ErrorKind::domain, "tail_bound: T below 2*pi");
  if (x < 0.0) fail(ErrorKind::domain, "tail_bound: x must be nonnegative");
  return 2.0 * (2.0 / std::numbers::pi) * std::pow(x, 1.5) * (std::log(height / two_pi) + 1.0) /
         height;
}

}  // namespace glab
