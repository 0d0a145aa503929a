#pragma once

#include "lgm/symmetry.hpp"

#include <array>
#include <optional>
#include <vector>

namespace lgm {

using Triple = std::array<Int, 3>;

// Dolgachev numbers of (f, G^fin_f) in the original coordinate order; ones kept.
Triple dolgachev_gfin(const Polynomial& f);
Triple dolgachev_gfin(const Matrix& E);

struct DolgachevEntry {
  Int alpha_prime = 0;
  Int k_order = 0;  // |K_i|, K_i the subgroup of G^T fixing coordinate i
  Rational value;
  Int multiplicity = 0;
  bool operator==(const DolgachevEntry&) const = default;
};

struct DolgachevData {
  std::array<DolgachevEntry, 3> per_coordinate;
  std::vector<Int> multiset;  // sorted, ones omitted
  bool operator==(const DolgachevData&) const = default;
};

// Requires G_0 <= G <= G^fin_f.  The alpha_prime overload replaces the type
// table (used by the negative-control run).
DolgachevData dolgachev(const Polynomial& f, const DiagonalGroup& G);
DolgachevData dolgachev(const Polynomial& f, const DiagonalGroup& G, const Triple& alpha_prime);

// #{(k,l) >= 0 : k a + l b = h}
Int count_m(Int a, Int b, Int h);
// C*-orbit invariants of a reduced three-variable weight system.
std::vector<Int> orbit_invariants(const WeightSystem& reduced);

Int genus(const Polynomial& f, const DiagonalGroup& G);
// Counts G-invariant forms x^r dx^dy^dz of degree one for a Fermat sum.
Int genus_bp_oracle(const Polynomial& f, const DiagonalGroup& G);
Int stringy_euler(const Polynomial& f, const DiagonalGroup& G);

struct CurveInvariants {
  Int genus = 0;
  std::vector<Int> dolgachev;
  Int e_st = 0;
};

CurveInvariants curve_invariants(const Polynomial& f, const DiagonalGroup& G);

// 2 - 2g + sum (alpha - 1)
Int orbifold_euler(Int genus, const std::vector<Int>& orders);

}  // namespace lgm
