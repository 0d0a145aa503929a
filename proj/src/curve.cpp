#include "lgm/curve.hpp"

#include "lgm/error.hpp"

#include <algorithm>
#include <numeric>

namespace lgm {

Triple dolgachev_gfin(const Matrix& E) {
  const TypeTag3 t = classify3(E);
  const auto [a, b, c] = t.params;
  Triple nf{};
  switch (t.tag) {
    case Type3::I: nf = {a, b, c}; break;
    case Type3::II: nf = {a, (b - 1) * a, c / b}; break;
    case Type3::III: nf = {a, a * c, a * b}; break;
    case Type3::IV: nf = {b - a + 1, (a - 1) * c / b, c / b}; break;
    case Type3::V: nf = {b * c - c + 1, c * a - a + 1, a * b - b + 1}; break;
  }
  Triple out{};
  for (int k = 0; k < 3; ++k) out[t.perm[k]] = nf[k];
  return out;
}

Triple dolgachev_gfin(const Polynomial& f) {
  if (f.n != 3) throw Error(ErrorCode::InvalidArgument, "Dolgachev numbers need three variables");
  return dolgachev_gfin(f.E);
}

DolgachevData dolgachev(const Polynomial& f, const DiagonalGroup& G, const Triple& alpha_prime) {
  if (f.n != 3) throw Error(ErrorCode::InvalidArgument, "Dolgachev numbers need three variables");
  if (!contains_g0(f, G)) throw Error(ErrorCode::NotContainingG0, "group does not contain g0");
  const DiagonalGroup GT = dual_group(f, G);
  DolgachevData out;
  for (int i = 0; i < 3; ++i) {
    const Int k = subgroup_fixing_coordinate(GT, i).order();
    Rational value(alpha_prime[i] * k, GT.order());
    if (!is_integral(value))
      throw Error(ErrorCode::NonIntegralDolgachev,
                  "alpha'_" + std::to_string(i + 1) + " * |K_i| / |G^T| = " + to_string(value));
    out.per_coordinate[i] = {alpha_prime[i], k, value, k};
    if (value != 1)
      for (Int r = 0; r < k; ++r) out.multiset.push_back(value.numerator());
  }
  std::sort(out.multiset.begin(), out.multiset.end());
  return out;
}

DolgachevData dolgachev(const Polynomial& f, const DiagonalGroup& G) {
  return dolgachev(f, G, dolgachev_gfin(f));
}

Int count_m(Int a, Int b, Int h) {
  if (a < 1 || b < 1 || h < 0) throw Error(ErrorCode::InvalidArgument, "count_m needs a,b >= 1");
  Int n = 0;
  for (Int k = 0; k * a <= h; ++k)
    if ((h - k * a) % b == 0) ++n;
  return n;
}

std::vector<Int> orbit_invariants(const WeightSystem& ws) {
  if (ws.w.size() != 3) throw Error(ErrorCode::InvalidArgument, "orbit invariants need three weights");
  Int g = ws.d;
  for (Int x : ws.w) g = std::gcd(g, x);
  if (g != 1) throw Error(ErrorCode::NotReduced, "weight system is not reduced");
  const Int h = ws.d;
  std::vector<Int> out;
  for (Int a : ws.w)
    if (h % a != 0) out.push_back(a);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Int c = std::gcd(ws.w[i], ws.w[j]);
      if (c <= 1) continue;
      Int m = count_m(ws.w[i], ws.w[j], h);
      for (Int r = 1; r < m; ++r) out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Int genus(const Polynomial& f, const DiagonalGroup& G) {
  if (f.n != 3) throw Error(ErrorCode::InvalidArgument, "genus needs three variables");
  if (!contains_g0(f, G)) throw Error(ErrorCode::NotContainingG0, "group does not contain g0");
  return junior_count(dual_group(f, G));
}

Int genus_bp_oracle(const Polynomial& f, const DiagonalGroup& G) {
  if (f.n != 3) throw Error(ErrorCode::NotBrieskornPham, "not a Fermat sum in three variables");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && f.E[i][j] != 0) throw Error(ErrorCode::NotBrieskornPham, "not a Fermat sum");
  if (!contains_g0(f, G)) throw Error(ErrorCode::NotContainingG0, "group does not contain g0");
  const Int p1 = f.E[0][0], p2 = f.E[1][1], p3 = f.E[2][2];
  Int count = 0;
  for (Int r1 = 0; r1 <= p1 - 2; ++r1)
    for (Int r2 = 0; r2 <= p2 - 2; ++r2)
      for (Int r3 = 0; r3 <= p3 - 2; ++r3) {
        if (Rational(r1 + 1, p1) + Rational(r2 + 1, p2) + Rational(r3 + 1, p3) != 1) continue;
        bool invariant = std::all_of(G.generators().begin(), G.generators().end(), [&](const PhaseVector& g) {
          return is_integral(g.phases[0] * (r1 + 1) + g.phases[1] * (r2 + 1) + g.phases[2] * (r3 + 1));
        });
        if (invariant) ++count;
      }
  return count;
}

Int orbifold_euler(Int genus, const std::vector<Int>& orders) {
  Int e = 2 - 2 * genus;
  for (Int a : orders) e += a - 1;
  return e;
}

CurveInvariants curve_invariants(const Polynomial& f, const DiagonalGroup& G) {
  CurveInvariants c;
  c.genus = genus(f, G);
  c.dolgachev = dolgachev(f, G).multiset;
  c.e_st = orbifold_euler(c.genus, c.dolgachev);
  return c;
}

Int stringy_euler(const Polynomial& f, const DiagonalGroup& G) { return curve_invariants(f, G).e_st; }

}  // namespace lgm
