#include "lgm/cyclo.hpp"

#include "lgm/error.hpp"

#include <sstream>

namespace lgm {

namespace {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "coefficient overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "coefficient overflow");
  return r;
}

}  // namespace

void poly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  }
  poly_trim(r);
  return r;
}

IntPoly poly_div_exact(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = a0, b = b0;
  poly_trim(a);
  poly_trim(b);
  if (b.empty()) throw Error(ErrorCode::NotPolynomial, "division by zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error(ErrorCode::NotPolynomial, "inexact polynomial division");
  const Int lead = b.back();
  IntPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    Int top = a[k + b.size() - 1];
    if (top % lead != 0) throw Error(ErrorCode::NotPolynomial, "inexact polynomial division");
    Int c = top / lead;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[k + j] = checked_add(a[k + j], -checked_mul(c, b[j]));
  }
  for (Int x : a)
    if (x != 0) throw Error(ErrorCode::NotPolynomial, "inexact polynomial division");
  poly_trim(q);
  return q;
}

IntPoly poly_mod_monic(const IntPoly& a0, const IntPoly& b) {
  IntPoly a = a0;
  poly_trim(a);
  const std::size_t m = b.size();
  while (a.size() >= m) {
    Int c = a.back();
    std::size_t shift = a.size() - m;
    for (std::size_t j = 0; j < m; ++j) a[shift + j] = checked_add(a[shift + j], -checked_mul(c, b[j]));
    poly_trim(a);
  }
  return a;
}

CycloVector::CycloVector(const std::map<Int, Int>& entries) {
  for (auto [m, e] : entries) add(m, e);
}

CycloVector CycloVector::factor(Int m, Int e) {
  CycloVector v;
  v.add(m, e);
  return v;
}

void CycloVector::add(Int m, Int e) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  if (e == 0) return;
  Int& slot = e_[m];
  slot += e;
  if (slot == 0) e_.erase(m);
}

Int CycloVector::at(Int m) const {
  auto it = e_.find(m);
  return it == e_.end() ? 0 : it->second;
}

Int CycloVector::degree() const {
  Int d = 0;
  for (auto [m, e] : e_) d += m * e;
  return d;
}

CycloVector& CycloVector::operator*=(const CycloVector& o) {
  for (auto [m, e] : o.e_) add(m, e);
  return *this;
}

CycloVector& CycloVector::operator/=(const CycloVector& o) {
  for (auto [m, e] : o.e_) add(m, -e);
  return *this;
}

IntPoly CycloVector::expand() const {
  IntPoly num{1}, den{1};
  for (auto [m, e] : e_) {
    IntPoly f(m + 1, 0);
    f[0] = 1;
    f[m] = -1;
    for (Int k = 0; k < (e > 0 ? e : -e); ++k) {
      if (e > 0)
        num = poly_mul(num, f);
      else
        den = poly_mul(den, f);
    }
  }
  return poly_div_exact(num, den);
}

std::string CycloVector::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto it = e_.rbegin(); it != e_.rend(); ++it) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(it->first) + ":" + std::to_string(it->second);
  }
  return s + "}";
}

std::string format_poly(const IntPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Int c = p[i];
    if (c == 0) continue;
    Int a = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

Int moebius(Int n) {
  Int r = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  if (n > 1) r = -r;
  return r;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> small, large;
  for (Int k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace lgm
