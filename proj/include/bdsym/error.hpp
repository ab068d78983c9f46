#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bdsym {

enum class ErrorCode {
  BadSyntax,
  MissingRow,
  DuplicateRow,
  DimensionMismatch,
  NotBijective,
  TooLarge,
  BranchExplosion,
  NotAnAntiOrbit,
  LengthMismatch,
  KindMismatch,
  NotAnAutomorphism,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported as an Error carrying a machine-readable
/// code. Parse errors additionally carry the 1-based line they refer to.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace bdsym
