#pragma once

#include <stdexcept>
#include <string>

namespace cohc {

/// Broad failure category; mapped one-to-one onto the C API status codes.
enum class ErrorCode {
  InvalidArgument,
  Parse,
  Io,
  NotCograph,
  Mismatch,
  NotHc,
  SizeGuard,
};

/// Exception carrying a stable machine-readable key such as "empty-graph" or
/// "cotree-graph-mismatch" next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), code_(code), key_(std::move(key)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& key() const noexcept { return key_; }

 private:
  ErrorCode code_;
  std::string key_;
};

}  // namespace cohc
