#include "lgm/error.hpp"
#include "lgm/rational.hpp"

#include <cctype>

namespace lgm {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotASymmetry: return "NotASymmetry";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotContainingG0: return "NotContainingG0";
    case ErrorCode::NonIntegralDolgachev: return "NonIntegralDolgachev";
    case ErrorCode::NotSL: return "NotSL";
    case ErrorCode::NotSymmetryOfCusp: return "NotSymmetryOfCusp";
    case ErrorCode::NonIntegralGamma: return "NonIntegralGamma";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotBrieskornPham: return "NotBrieskornPham";
    case ErrorCode::MoebiusInconsistent: return "MoebiusInconsistent";
    case ErrorCode::NonIntegralTrace: return "NonIntegralTrace";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::SyntaxError, "bad rational '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) -> Int {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i == s.size()) throw bad();
    Int v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])) || v > (Int{1} << 40)) throw bad();
      v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace lgm
