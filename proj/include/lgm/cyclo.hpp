#pragma once

#include "lgm/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace lgm {

// Dense integer polynomial, coefficient of t^i at index i.
using IntPoly = std::vector<Int>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// Exact division; throws NotPolynomial when b does not divide a.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);
// Remainder of a modulo a monic b.
IntPoly poly_mod_monic(const IntPoly& a, const IntPoly& b);
void poly_trim(IntPoly& a);

// prod_m (1 - t^m)^{e(m)}, stored as the sparse map m -> e(m) != 0.
class CycloVector {
 public:
  CycloVector() = default;
  explicit CycloVector(const std::map<Int, Int>& entries);
  static CycloVector factor(Int m, Int e = 1);

  const std::map<Int, Int>& entries() const { return e_; }
  Int at(Int m) const;
  Int degree() const;  // sum m e(m)
  bool empty() const { return e_.empty(); }

  CycloVector& operator*=(const CycloVector& o);
  CycloVector& operator/=(const CycloVector& o);
  friend CycloVector operator*(CycloVector a, const CycloVector& b) { return a *= b; }
  friend CycloVector operator/(CycloVector a, const CycloVector& b) { return a /= b; }
  bool operator==(const CycloVector&) const = default;

  // Coefficients of the product; throws NotPolynomial if it is not one.
  IntPoly expand() const;
  // "{12:1, 3:1, 1:-1}" with keys in descending order.
  std::string to_string() const;

 private:
  void add(Int m, Int e);
  std::map<Int, Int> e_;
};

inline CycloVector cyclo_mul(const CycloVector& a, const CycloVector& b) { return a * b; }
inline CycloVector cyclo_div(const CycloVector& a, const CycloVector& b) { return a / b; }
inline bool cyclo_eq(const CycloVector& a, const CycloVector& b) { return a == b; }
inline Int cyclo_degree(const CycloVector& v) { return v.degree(); }
inline IntPoly cyclo_expand(const CycloVector& v) { return v.expand(); }

std::string format_poly(const IntPoly& p);  // "1 + t - t^3"

Int moebius(Int n);
std::vector<Int> divisors(Int n);

}  // namespace lgm
