#pragma once

#include "lgm/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lgm {

// diag(e[p_1], ..., e[p_n]) with every p_i in [0,1).
struct PhaseVector {
  std::vector<Rational> phases;

  PhaseVector() = default;
  explicit PhaseVector(std::vector<Rational> p);  // reduces mod 1
  static PhaseVector identity(int n);

  int size() const { return static_cast<int>(phases.size()); }
  bool is_identity() const;
  PhaseVector operator+(const PhaseVector& o) const;
  PhaseVector operator-() const;
  PhaseVector operator*(Int k) const;
  Int order() const;

  bool operator==(const PhaseVector&) const = default;
  bool operator<(const PhaseVector& o) const { return phases < o.phases; }
};

// "(1/5,3/5,1/5)"
std::string format_phase(const PhaseVector& v);
// "1/5(1,3,1)", the common-denominator form.
std::string format_phase_compact(const PhaseVector& v);
// Accepts either of the two forms above.
PhaseVector parse_phase(std::string_view text);

// A finite group of diagonal symmetries of the polynomial with exponent
// matrix `context`.  Elements are enumerated eagerly and sorted.
class DiagonalGroup {
 public:
  DiagonalGroup() = default;
  DiagonalGroup(Matrix context, const std::vector<PhaseVector>& gens);
  // Trusts the caller: the list must be a sorted, closed set of symmetries.
  static DiagonalGroup from_elements(Matrix context, std::vector<PhaseVector> sorted_elements);

  const Matrix& context() const { return context_; }
  int n() const { return static_cast<int>(context_.size()); }
  const std::vector<PhaseVector>& elements() const { return elements_; }
  // Greedy generating set taken from the sorted element list.
  const std::vector<PhaseVector>& generators() const { return generators_; }
  Int order() const { return static_cast<Int>(elements_.size()); }
  bool contains(const PhaseVector& v) const;
  bool subgroup_of(const DiagonalGroup& other) const;
  // Invariant factors, e.g. {2,2} for (Z/2)^2; empty for the trivial group.
  std::vector<Int> structure() const;

  bool operator==(const DiagonalGroup& o) const {
    return context_ == o.context_ && elements_ == o.elements_;
  }

 private:
  void choose_generators();

  Matrix context_;
  std::vector<PhaseVector> elements_;
  std::vector<PhaseVector> generators_;
};

std::string format_structure(const std::vector<Int>& invariants);  // "Z/2 x Z/6", "1"
std::string format_generators(const DiagonalGroup& G);           // "1/5(1,3,1);..."

bool is_symmetry(const Matrix& E, const PhaseVector& v);

DiagonalGroup gfin(const Polynomial& f);
DiagonalGroup gfin(const Matrix& E);
PhaseVector g0(const Polynomial& f);
PhaseVector g0(const Matrix& E);
DiagonalGroup group_from_generators(const Polynomial& f, const std::vector<PhaseVector>& gens);
DiagonalGroup group_from_generators(const Matrix& E, const std::vector<PhaseVector>& gens);
DiagonalGroup trivial_group(const Matrix& E);
DiagonalGroup g0_group(const Matrix& E);

// Subgroup of G^fin_{f^T} dual to G <= G^fin_f.
DiagonalGroup dual_group(const Polynomial& f, const DiagonalGroup& G);
DiagonalGroup dual_group(const Matrix& E, const DiagonalGroup& G);

struct AgeReport {
  Rational age;
  int nfix = 0;
  std::vector<int> fixed;
  bool operator==(const AgeReport&) const = default;
};

AgeReport age_and_fix(const PhaseVector& g);
Int junior_count(const DiagonalGroup& G);
DiagonalGroup subgroup_fixing_coordinate(const DiagonalGroup& G, int i);
bool in_sl(const PhaseVector& g);
bool is_sl_subgroup(const DiagonalGroup& G);
bool contains_g0(const Matrix& E, const DiagonalGroup& G);
bool contains_g0(const Polynomial& f, const DiagonalGroup& G);

// All G with G_0 <= G <= G^fin_f, ordered by (order, elements).
std::vector<DiagonalGroup> intermediate_subgroups(const Polynomial& f);

// "G0", "Gfin", "trivial", "index:k", "G0+<literal>" or a literal list of
// generators "1/r(a,b,c);(p,q,s);...".  Throws SyntaxError / NotASymmetry /
// InvalidArgument.
DiagonalGroup parse_group_spec(const Polynomial& f, std::string_view spec);

}  // namespace lgm
