#include "stancelab/core/error.hpp"

namespace stancelab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config: return "config error";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::lookup: return "lookup error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::network: return "network error";
    case ErrorKind::rate_limit: return "rate limit error";
    case ErrorKind::stratification: return "stratification error";
    case ErrorKind::span: return "span error";
    case ErrorKind::label: return "label error";
    case ErrorKind::linkage: return "linkage error";
    case ErrorKind::numeric: return "numeric error";
    case ErrorKind::precondition: return "precondition error";
    case ErrorKind::generation: return "generation error";
    case ErrorKind::io: return "io error";
  }
  return "error";
}

}  // namespace stancelab
