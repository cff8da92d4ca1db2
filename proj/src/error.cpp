#include "glab/error.hpp"

namespace glab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::capacity: return "capacity error";
    case ErrorKind::range: return "range error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::order: return "order error";
    case ErrorKind::empty_table: return "empty-table error";
    case ErrorKind::fetch: return "fetch error";
    case ErrorKind::integrity: return "integrity error";
    case ErrorKind::degree: return "degree error";
    case ErrorKind::overflow: return "overflow error";
    case ErrorKind::schema: return "schema error";
    case ErrorKind::io: return "i/o error";
  }
  return "error";
}

}  // namespace glab
