#include "prelie/error.hpp"

namespace prelie {

const char *error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
  case ErrorCode::EvalDenZero: return "EVAL_DEN_ZERO";
  case ErrorCode::ParseError: return "PARSE_ERROR";
  case ErrorCode::UnknownParam: return "UNKNOWN_PARAM";
  case ErrorCode::DimMismatch: return "DIM_MISMATCH";
  case ErrorCode::MissingMember: return "MISSING_MEMBER";
  case ErrorCode::NotInvertible: return "NOT_INVERTIBLE";
  case ErrorCode::UnknownFixture: return "UNKNOWN_FIXTURE";
  case ErrorCode::GridTooLarge: return "GRID_TOO_LARGE";
  case ErrorCode::SymbolicTemplate: return "SYMBOLIC_TEMPLATE";
  case ErrorCode::UnknownLaw: return "UNKNOWN_LAW";
  case ErrorCode::InvalidInput: return "INVALID_INPUT";
  case ErrorCode::Io: return "IO_ERROR";
  }
  return "UNKNOWN";
}

} // namespace prelie
