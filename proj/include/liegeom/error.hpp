#pragma once

#include <stdexcept>
#include <string>

namespace liegeom {

enum class ErrorCode {
  BAD_ARITY,
  BAD_INPUT,
  DEGENERATE,
  UNDEFINED_PLANE,
  NO_CONVERGENCE,
  NO_POSITIVE_ROOT,
  WINDOW_CROSSES_SINGULARITY,
  REP_UNAVAILABLE,
  NOT_IN_BRANCHING,
  DIM_LIMIT,
  SINGULAR_FIT,
  NEGATIVE_SQUARE,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::BAD_ARITY: return "BAD_ARITY";
    case ErrorCode::BAD_INPUT: return "BAD_INPUT";
    case ErrorCode::DEGENERATE: return "DEGENERATE";
    case ErrorCode::UNDEFINED_PLANE: return "UNDEFINED_PLANE";
    case ErrorCode::NO_CONVERGENCE: return "NO_CONVERGENCE";
    case ErrorCode::NO_POSITIVE_ROOT: return "NO_POSITIVE_ROOT";
    case ErrorCode::WINDOW_CROSSES_SINGULARITY: return "WINDOW_CROSSES_SINGULARITY";
    case ErrorCode::REP_UNAVAILABLE: return "REP_UNAVAILABLE";
    case ErrorCode::NOT_IN_BRANCHING: return "NOT_IN_BRANCHING";
    case ErrorCode::DIM_LIMIT: return "DIM_LIMIT";
    case ErrorCode::SINGULAR_FIT: return "SINGULAR_FIT";
    case ErrorCode::NEGATIVE_SQUARE: return "NEGATIVE_SQUARE";
  }
  return "UNKNOWN";
}

// Input problems map to CLI exit status 2, numerical failures to 3.
inline bool is_validation_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::BAD_ARITY:
    case ErrorCode::BAD_INPUT:
    case ErrorCode::REP_UNAVAILABLE:
    case ErrorCode::NOT_IN_BRANCHING:
    case ErrorCode::DIM_LIMIT:
    case ErrorCode::NEGATIVE_SQUARE:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace liegeom
