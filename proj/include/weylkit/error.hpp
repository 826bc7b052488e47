#ifndef WEYLKIT_ERROR_HPP_
#define WEYLKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace weylkit {

// Bad input from the caller or the command line (exit code 2 in the CLI).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration (ring spec, realization parameters, index parameters).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A cross-check that must hold by construction failed; always a bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace weylkit

#endif
