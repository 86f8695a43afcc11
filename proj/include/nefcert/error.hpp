#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nefcert {

enum class ErrorCode {
  kNotAConfiguration,
  kRepeatedColumns,
  kEmptyInput,
  kInternalInconsistency,
  kDimensionMismatch,
  kNonHomogeneousInput,
  kNotUnimodular,
  kPreconditionViolated,
  kNotSquarefree,
  kNoEdges,
  kNotConnected,
  kBadParams,
  kCycleBudgetExceeded,
  kOverflow,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every library failure; `code()` identifies the
// condition so callers (the CLI in particular) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nefcert
