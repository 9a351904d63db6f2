#pragma once

#include <stdexcept>
#include <string>

namespace hlseg {

enum class ErrorCategory {
  usage,     // bad command line
  config,    // bad config key/value
  io,        // file format / filesystem
  shape,     // tensor shape mismatch
  numeric,   // NaN/Inf or divergence
  contract,  // API precondition violated
};

inline const char* to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::usage: return "usage";
    case ErrorCategory::config: return "config";
    case ErrorCategory::io: return "io";
    case ErrorCategory::shape: return "shape";
    case ErrorCategory::numeric: return "numeric";
    case ErrorCategory::contract: return "contract";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), category(cat) {}
  ErrorCategory category;
};

[[noreturn]] inline void fail(ErrorCategory cat, const std::string& msg) {
  throw Error(cat, msg);
}

}  // namespace hlseg
