#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

// boost's mixed rational/int comparison templates call each other through the
// C++20 reversed-operator rewrite and never return.  Exact non-template
// overloads win overload resolution and are found by ADL.
namespace boost {
#define LGM_MIXED_CMP(op)                                                                                \
  inline bool operator op(const rational<std::int64_t>& a, int b) {                                      \
    return a op rational<std::int64_t>(b);                                                               \
  }                                                                                                      \
  inline bool operator op(int a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) op b; }
LGM_MIXED_CMP(==)
LGM_MIXED_CMP(!=)
LGM_MIXED_CMP(<)
LGM_MIXED_CMP(>)
LGM_MIXED_CMP(<=)
LGM_MIXED_CMP(>=)
#undef LGM_MIXED_CMP
}  // namespace boost

namespace lgm {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

// Representative of r mod 1 in [0,1).
inline Rational frac(const Rational& r) {
  Int n = r.numerator(), d = r.denominator();
  Int m = n % d;
  if (m < 0) m += d;
  return Rational(m, d);
}

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "a" or "a/b"; throws lgm::Error(SyntaxError) otherwise.
Rational parse_rational(std::string_view text);

}  // namespace lgm
