#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdgor {

/// Exact integers for flag numbers, cd coefficients and homology.
using BigInt = boost::multiprecision::cpp_int;

enum class ErrorCode {
  InvalidInput,
  NotGraded,
  NoUniqueBottomTop,
  Cyclic,
  NotComparable,
  ZipPreconditionViolated,
  ResultNotGraded,
  NotACover,
  TooLarge,
  NotAFace,
  NotAnEdge,
  VertexCollision,
  HNotSymmetric,
  NotCdExpressible,
  WrongDegree,
  LeadingCoeffNotOne,
  NegativeCoefficient,
  BudgetExceeded,
  NotPure,
  KTooSmall,
  InfeasibleTarget,
  DegenerateCycle,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NoUniqueBottomTop: return "NoUniqueBottomTop";
    case ErrorCode::Cyclic: return "Cyclic";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::ZipPreconditionViolated: return "ZipPreconditionViolated";
    case ErrorCode::ResultNotGraded: return "ResultNotGraded";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::VertexCollision: return "VertexCollision";
    case ErrorCode::HNotSymmetric: return "HNotSymmetric";
    case ErrorCode::NotCdExpressible: return "NotCdExpressible";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::LeadingCoeffNotOne: return "LeadingCoeffNotOne";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::DegenerateCycle: return "DegenerateCycle";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable code; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cdgor
