#pragma once

#include "lgm/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgm {

using Matrix = std::vector<std::vector<Int>>;

// f = sum_i coeffs[i] * prod_j vars[j]^E[i][j].  Row i is the monomial that
// "owns" variable i (its x_i^{a_i} factor), which is what makes E^T the
// Berglund-Huebsch transpose.
struct Polynomial {
  int n = 0;
  Matrix E;
  std::vector<Int> coeffs;
  std::vector<std::string> vars;

  bool unit_coefficients() const;
  bool operator==(const Polynomial&) const = default;
};

// Grammar: terms separated by '+' or '-', each an optional integer
// coefficient followed by factors var[^exp] with optional '*'.  Variables are
// x,y,z or x1..xn.  When nvars is given the variable list is x,y,z (n <= 3)
// or x1..xn; otherwise it is inferred from the highest variable used.
Polynomial parse_polynomial(std::string_view text, std::optional<int> nvars = {});

// Validates and row-canonicalizes.  Throws NotSquare / NotInvertible.
Polynomial make_polynomial(const Matrix& E, std::vector<std::string> vars = {},
                           std::vector<Int> coeffs = {});

std::string format_polynomial(const Polynomial& f);
std::string format_matrix(const Matrix& E);

Polynomial transpose(const Polynomial& f);

enum class AtomKind { Fermat, Chain, Loop };
const char* atom_name(AtomKind kind);

struct AtomicPart {
  AtomKind kind;
  std::vector<int> vars;  // chains start at the Fermat end
  std::vector<Int> exps;
  bool operator==(const AtomicPart&) const = default;
};

std::vector<AtomicPart> decompose_atoms(const Polynomial& f);
std::vector<AtomicPart> decompose_atoms(const Matrix& E);

enum class Type3 { I, II, III, IV, V };
const char* type_name(Type3 t);

// params: (p1,p2,p3) for I, II, IV; (p1,q2,q3) for III; (q1,q2,q3) for V.
// perm[k] is the original index of normal-form coordinate k.
struct TypeTag3 {
  Type3 tag;
  std::array<Int, 3> params;
  std::array<int, 3> perm;
  bool operator==(const TypeTag3&) const = default;
};

TypeTag3 classify3(const Polynomial& f);
TypeTag3 classify3(const Matrix& E);

struct WeightSystem {
  std::vector<Int> w;
  Int d = 0;
  Int cf = 1;

  std::vector<Rational> q() const;
  bool operator==(const WeightSystem&) const = default;
};

WeightSystem canonical_weights(const Polynomial& f);
WeightSystem canonical_weights(const Matrix& E);
WeightSystem reduced_weights(const Polynomial& f);
WeightSystem reduced_weights(const Matrix& E);
Int cf(const Polynomial& f);

struct Diagnostic {
  bool ok = true;
  std::string reason;
};

Diagnostic validate_invertible(const Polynomial& f);
Diagnostic validate_invertible(const Matrix& E);

// Exact linear algebra over Q for small square integer matrices.
Int determinant(const Matrix& E);
std::vector<std::vector<Rational>> inverse(const Matrix& E);
Matrix transpose(const Matrix& E);

}  // namespace lgm
