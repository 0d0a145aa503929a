#include "lgm/cusp.hpp"

#include "lgm/error.hpp"

#include <algorithm>

namespace lgm {

Int delta(const Triple& g) {
  return g[0] * g[1] * g[2] - g[1] * g[2] - g[0] * g[2] - g[0] * g[1];
}

CuspPolynomial gabrielov_prime(const Polynomial& f) {
  if (f.n != 3) throw Error(ErrorCode::InvalidArgument, "cusp polynomials need three variables");
  CuspPolynomial c;
  c.gamma_prime = dolgachev_gfin(transpose(f));
  c.delta = delta(c.gamma_prime);
  return c;
}

GabrielovData gabrielov(const Triple& gp, const DiagonalGroup& G) {
  if (G.n() != 3) throw Error(ErrorCode::InvalidArgument, "cusp groups act on three variables");
  if (!is_sl_subgroup(G)) throw Error(ErrorCode::NotSL, "group is not contained in SL_3");
  for (const auto& g : G.generators())
    for (int i = 0; i < 3; ++i)
      if (!is_integral(g.phases[i] * gp[i]))
        throw Error(ErrorCode::NotSymmetryOfCusp,
                    format_phase(g) + " does not fix the monomial of exponent " + std::to_string(gp[i]));
  GabrielovData out;
  for (int i = 0; i < 3; ++i) {
    const Int h = subgroup_fixing_coordinate(G, i).order();
    Rational gt(gp[i] * h, G.order());
    if (!is_integral(gt))
      throw Error(ErrorCode::NonIntegralGamma,
                  "gamma'_" + std::to_string(i + 1) + " / |G/H_i| = " + to_string(gt));
    out.per_coordinate[i] = {gt, h};
    if (gt != 1)
      for (Int r = 0; r < h; ++r) out.multiset.push_back(gt.numerator());
  }
  std::sort(out.multiset.begin(), out.multiset.end());
  out.j = junior_count(G);
  out.milnor = orbifold_euler(out.j, out.multiset);
  return out;
}

GabrielovData gabrielov(const Polynomial& f, const DiagonalGroup& G) {
  for (const auto& g : G.generators())
    if (!is_symmetry(f.E, g))
      throw Error(ErrorCode::NotASubgroup, format_phase(g) + " is not a symmetry of " + format_polynomial(f));
  return gabrielov(gabrielov_prime(f).gamma_prime, G);
}

CycloVector cusp_char_poly(const Triple& gp, const DiagonalGroup& G) {
  const auto data = gabrielov(gp, G);
  CycloVector v = CycloVector::factor(1, 2 - 2 * data.j);
  for (Int g : data.multiset) v *= CycloVector::factor(g) / CycloVector::factor(1);
  return v;
}

Int cusp_milnor(const Triple& gp, const DiagonalGroup& G) { return gabrielov(gp, G).milnor; }

}  // namespace lgm
