#include "lgm/corpus.hpp"

#include "lgm/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lgm {

Matrix canonical_form(const Matrix& E) {
  const std::size_t n = E.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Matrix best;
  do {
    Matrix M(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M[i][j] = E[p[i]][p[j]];
    if (best.empty() || M < best) best = std::move(M);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

unsigned parse_type_mask(std::string_view list) {
  if (list == "all" || list.empty()) return 0x1f;
  static const char* names[] = {"I", "II", "III", "IV", "V"};
  unsigned mask = 0;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t end = list.find(',', pos);
    if (end == std::string_view::npos) end = list.size();
    std::string_view item = list.substr(pos, end - pos);
    bool found = false;
    for (unsigned t = 0; t < 5; ++t)
      if (item == names[t]) {
        mask |= 1u << t;
        found = true;
      }
    if (!found) throw Error(ErrorCode::InvalidArgument, "unknown type '" + std::string(item) + "'");
    pos = end + 1;
  }
  return mask;
}

std::vector<Polynomial> enumerate_polynomials(const CorpusBounds& bounds) {
  if (bounds.max_det < 2 || bounds.max_exp < 2)
    throw Error(ErrorCode::InvalidArgument, "corpus bounds must be at least 2");
  // Up to permutation every atom sum has a_i on the diagonal and at most one
  // off-diagonal 1 per row.  |det E| >= prod a_i / 2 for every such matrix
  // that passes validation, which bounds the diagonal search.
  const Int diag_cap = 2 * bounds.max_det + 2;
  const Int emax = std::min(bounds.max_exp, diag_cap);
  std::set<Matrix> seen;
  std::vector<Matrix> found;
  for (Int a = 1; a <= emax; ++a)
    for (Int b = 1; b <= emax && a * b <= diag_cap; ++b)
      for (Int c = 1; c <= emax && a * b * c <= diag_cap; ++c)
        for (int pat = 0; pat < 27; ++pat) {
          Matrix E = {{a, 0, 0}, {0, b, 0}, {0, 0, c}};
          int code = pat;
          for (int i = 0; i < 3; ++i, code /= 3) {
            const int off = code % 3;  // 0: none, 1/2: pointer to the next/previous variable
            if (off) E[i][(i + off) % 3] = 1;
          }
          const Int det = determinant(E);
          if (det == 0 || std::abs(det) > bounds.max_det) continue;
          if (!validate_invertible(E).ok) continue;
          Matrix C = canonical_form(E);
          if (!seen.insert(C).second) continue;
          const Type3 t = classify3(C).tag;
          if (!(bounds.type_mask >> static_cast<int>(t) & 1u)) continue;
          found.push_back(std::move(C));
        }
  std::sort(found.begin(), found.end());
  std::vector<Polynomial> out;
  out.reserve(found.size());
  for (const auto& E : found) out.push_back(make_polynomial(E));
  return out;
}

void enumerate_corpus(const CorpusBounds& bounds,
                      const std::function<void(const Polynomial&, const DiagonalGroup&)>& visit) {
  for (const auto& f : enumerate_polynomials(bounds))
    for (const auto& G : intermediate_subgroups(f)) visit(f, G);
}

}  // namespace lgm
