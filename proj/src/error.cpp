#include "nefcert/error.hpp"

namespace nefcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAConfiguration: return "NotAConfiguration";
    case ErrorCode::kRepeatedColumns: return "RepeatedColumns";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonHomogeneousInput: return "NonHomogeneousInput";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotSquarefree: return "NotSquarefree";
    case ErrorCode::kNoEdges: return "NoEdges";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kCycleBudgetExceeded: return "CycleBudgetExceeded";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace nefcert
