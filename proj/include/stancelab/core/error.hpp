#pragma once

#include <stdexcept>
#include <string>

namespace stancelab {

// Broad failure categories surfaced by pipeline operations. Callers route on
// the kind, not on message text.
enum class ErrorKind {
  config,          // bad configuration / missing provider / scheme mismatch
  parse,           // malformed file or response body
  lookup,          // unknown id
  domain,          // invalid argument value (empty bundle, dose out of range, ...)
  network,         // transport failure
  rate_limit,      // remote throttling, retry budget exhausted
  stratification,  // class too small to stratify
  span,            // invalid entity spans
  label,           // wrong stance label for the operation
  linkage,         // example/market mismatch
  numeric,         // non-finite values in numeric code
  precondition,    // generic contract violation
  generation,      // empty/refused generator output
  io,              // filesystem failure
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg, bool retryable = false)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
        kind_(kind),
        retryable_(retryable) {}

  ErrorKind kind() const { return kind_; }
  bool retryable() const { return retryable_; }

 private:
  ErrorKind kind_;
  bool retryable_;
};

}  // namespace stancelab
