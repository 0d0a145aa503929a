#pragma once

#include "lgm/symmetry.hpp"

#include <functional>
#include <vector>

namespace lgm {

struct CorpusBounds {
  Int max_det = 300;
  Int max_exp = 300;         // bound on every exponent entry
  unsigned type_mask = 0x1f;  // bit t-1 selects Type t
};

unsigned parse_type_mask(std::string_view list);  // "I,II,V" or "all"

// Invertible three-variable polynomials within the bounds, one per class
// under variable permutation, sorted by the canonical exponent matrix.
std::vector<Polynomial> enumerate_polynomials(const CorpusBounds& bounds);

// Every (f, G) with f from enumerate_polynomials and G_0 <= G <= G^fin_f.
void enumerate_corpus(const CorpusBounds& bounds,
                      const std::function<void(const Polynomial&, const DiagonalGroup&)>& visit);

// Lexicographically least P E P^T over all permutations P.
Matrix canonical_form(const Matrix& E);

}  // namespace lgm
