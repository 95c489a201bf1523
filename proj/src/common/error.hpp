#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace crowdnas {

// Error categories; the numeric value doubles as the CLI exit code.
enum class Errc : int {
  ok = 0,
  config = 2,
  missing_input = 3,
  bad_file = 4,
  diverged = 5,
  internal = 7,
};

// Single exception type. `kind` is a stable machine-readable tag
// ("shape-mismatch", "genotype-version-mismatch", ...) so callers and
// tests can tell error cases apart without string-matching messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string kind, const std::string& msg)
      : std::runtime_error(msg), code_(code), kind_(std::move(kind)) {}

  Errc code() const { return code_; }
  const std::string& kind() const { return kind_; }

 private:
  Errc code_;
  std::string kind_;
};

[[noreturn]] inline void fail(Errc code, const std::string& kind,
                              const std::string& msg) {
  throw Error(code, kind, msg);
}

[[noreturn]] inline void fail_shape(const std::string& msg) {
  throw Error(Errc::internal, "shape-mismatch", msg);
}

[[noreturn]] inline void fail_value(const std::string& kind,
                                    const std::string& msg) {
  throw Error(Errc::internal, kind, msg);
}

}  // namespace crowdnas
