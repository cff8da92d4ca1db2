#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glab {

// Every failure raised by the library carries one of these kinds. The CLI
// maps them onto exit codes; tests match on them.
enum class ErrorKind {
  capacity,
  range,
  domain,
  parse,
  order,
  empty_table,
  fetch,
  integrity,
  degree,
  overflow,
  schema,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Parse failure with the offending (1-based) line.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace glab
