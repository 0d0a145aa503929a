#pragma once

#include <stdexcept>
#include <string>

namespace lgm {

enum class ErrorCode {
  SyntaxError = 1,
  NotSquare,
  NotInvertible,
  NotASymmetry,
  NotASubgroup,
  NotContainingG0,
  NonIntegralDolgachev,
  NotSL,
  NotSymmetryOfCusp,
  NonIntegralGamma,
  NotPolynomial,
  NotGraded,
  NotReduced,
  NotBrieskornPham,
  MoebiusInconsistent,
  NonIntegralTrace,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lgm
