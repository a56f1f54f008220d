#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class ErrorKind {
  NonPrime,
  ZeroInput,
  BadPlace,
  ZeroRow,
  SingularMatrix,
  BadSupport,
  UnsupportedDescriptor,
  RadiusTooSmall,
  Stuck,
  Inconsistent,
  SeedDomainMismatch,
  BudgetExceeded,
  OracleInconsistent,
  Parse,
};

const char* error_kind_name(ErrorKind kind);

// Domain errors carry a kind so callers (the CLI in particular) can map them
// to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hecke
