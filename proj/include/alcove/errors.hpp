#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

// Classified failures so callers (in particular the CLI) can map them to
// exit codes without string matching.
enum class ErrorKind {
  InvalidArgument,  // caller passed data violating a precondition
  Unsupported,      // family/rank combination outside the supported list
  Validation,       // a level or configuration failed its admissibility test
  SizeBound,        // an enumeration would exceed the configured size bound
  Domain,           // an empirically checked structural property failed
  Internal,         // invariant broken inside the library itself
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace alcove
