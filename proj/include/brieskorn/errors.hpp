#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brieskorn {

enum class ErrorKind {
  InvalidExponent,
  DimensionTooLow,
  DimensionMismatch,
  NotDim7,
  NotMorseBottCover,
  ZeroPrincipalIndex,
  NotLacunary,
  PreconditionFailed,
  InvalidInstance,
  Overflow,
  Schema,
  Io,
  BudgetExceeded,
  InternalInconsistency,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Exit code used by the command line front end for an error of this kind:
/// 2 for validation problems, 3 for exhausted budgets, 4 for internal
/// inconsistencies.
int exit_code_for(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

inline void ensure(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) raise(kind, message);
}

}  // namespace brieskorn
