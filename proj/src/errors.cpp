#include "brieskorn/errors.hpp"

namespace brieskorn {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::DimensionTooLow: return "DimensionTooLow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDim7: return "NotDim7";
    case ErrorKind::NotMorseBottCover: return "NotMorseBottCover";
    case ErrorKind::ZeroPrincipalIndex: return "ZeroPrincipalIndex";
    case ErrorKind::NotLacunary: return "NotLacunary";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Io: return "IOError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return 3;
    case ErrorKind::InternalInconsistency: return 4;
    default: return 2;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace brieskorn
