#pragma once

#include "lgm/curve.hpp"
#include "lgm/cyclo.hpp"

namespace lgm {

// T_{g1,g2,g3} = x^g1 + y^g2 + z^g3 - xyz
struct CuspPolynomial {
  Triple gamma_prime{};
  Int delta = 0;
  bool operator==(const CuspPolynomial&) const = default;
};

Int delta(const Triple& gamma_prime);
// gamma' of (f, {1}); equals the Dolgachev triple of (f^T, G^fin).
CuspPolynomial gabrielov_prime(const Polynomial& f);

struct GabrielovEntry {
  Rational gamma_tilde;
  Int h_order = 0;  // |H_i|
  bool operator==(const GabrielovEntry&) const = default;
};

struct GabrielovData {
  std::array<GabrielovEntry, 3> per_coordinate;
  std::vector<Int> multiset;  // sorted, ones omitted
  Int j = 0;
  Int milnor = 0;
  bool operator==(const GabrielovData&) const = default;
};

// G must lie in SL_3 and fix every x_i^{gamma'_i}.
GabrielovData gabrielov(const Triple& gamma_prime, const DiagonalGroup& G);
GabrielovData gabrielov(const Polynomial& f, const DiagonalGroup& G);

CycloVector cusp_char_poly(const Triple& gamma_prime, const DiagonalGroup& G);
Int cusp_milnor(const Triple& gamma_prime, const DiagonalGroup& G);

}  // namespace lgm
