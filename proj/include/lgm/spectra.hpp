#pragma once

#include "lgm/cyclo.hpp"
#include "lgm/symmetry.hpp"

#include <map>
#include <string>
#include <vector>

namespace lgm {

// Multiset of exponents q (monodromy eigenvalues e[q]), q in (0, n).
struct ExponentList {
  std::map<Rational, Int> multiplicity;
  Int size() const;
  bool operator==(const ExponentList&) const = default;
};

struct LefschetzTable {
  Int modulus = 0;          // reduced degree
  std::vector<Int> values;  // values[k-1] = L_k, k = 1..modulus
  Int at(Int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

// Requires G_0 <= G <= G^fin_f and |G^fin/G| dividing every weight and d.
CycloVector poincare_series(const Polynomial& f, const DiagonalGroup& G);
CycloVector psi(const Polynomial& f, const DiagonalGroup& G);
// Closed form of the per-type table for (f, G_0).
CycloVector table2_psi(const Polynomial& f);

// Trace of the k-th monodromy power summed over the sectors of (f, G).
LefschetzTable lefschetz_numbers(const Polynomial& f, const DiagonalGroup& G);
// m e(m) = sum_{k|m} mu(m/k) L_k, with consistency assertions.
CycloVector moebius_invert(const LefschetzTable& table);
CycloVector equivariant_char_poly(const Polynomial& f, const DiagonalGroup& G);

struct QhCharPoly {
  ExponentList exponents;
  CycloVector cyclo;
};

// Independent route: expand prod (u^w - u^d)/(1 - u^w), then evaluate each
// trace exactly in Z[u]/(Phi_r).
QhCharPoly char_poly_qh(const Polynomial& f);
// prod (d/w_i - 1)
Int milnor_number_qh(const Polynomial& f);

enum class PoincareStatus { Equal, NotEqual, NotApplicable };
const char* status_name(PoincareStatus s);

struct PoincareVerdict {
  PoincareStatus status = PoincareStatus::NotApplicable;
  std::string reason;
  CycloVector psi;
  CycloVector phi;
};

PoincareVerdict verify_poincare_theorem(const Polynomial& f);

}  // namespace lgm
