#include "lgm/polynomial.hpp"

#include "lgm/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace lgm {

namespace {

std::vector<std::string> default_vars(int n, bool indexed) {
  std::vector<std::string> v;
  if (!indexed && n <= 3) {
    const char* names[] = {"x", "y", "z"};
    for (int i = 0; i < n; ++i) v.emplace_back(names[i]);
  } else {
    for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  }
  return v;
}

struct Decomposition {
  std::vector<AtomicPart> atoms;
  std::string failure;  // empty on success
};

Decomposition try_decompose(const Matrix& E) {
  Decomposition out;
  const int n = static_cast<int>(E.size());
  std::vector<int> next(n, -1), pred(n, -1);
  for (int i = 0; i < n; ++i) {
    if (E[i][i] < 1) {
      out.failure = "monomial " + std::to_string(i + 1) + " does not contain its own variable";
      return out;
    }
    for (int j = 0; j < n; ++j) {
      if (j == i || E[i][j] == 0) continue;
      if (next[i] != -1) {
        out.failure = "monomial " + std::to_string(i + 1) + " involves three or more variables";
        return out;
      }
      if (E[i][j] != 1) {
        out.failure = "monomial " + std::to_string(i + 1) + " is not of the form x_i^a x_j";
        return out;
      }
      next[i] = j;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (next[i] < 0) continue;
    if (pred[next[i]] != -1) {
      out.failure = "variable " + std::to_string(next[i] + 1) + " is pointed at by two monomials";
      return out;
    }
    pred[next[i]] = i;
  }

  std::vector<int> atom_of(n, -1);
  std::vector<AtomicPart> parts;
  // Paths end at a variable whose monomial is a pure power.
  for (int t = 0; t < n; ++t) {
    if (next[t] != -1) continue;
    AtomicPart part;
    for (int v = t; v != -1; v = pred[v]) {
      part.vars.push_back(v);
      part.exps.push_back(E[v][v]);
      atom_of[v] = static_cast<int>(parts.size());
    }
    if (E[t][t] < 2) {
      out.failure = "Fermat end x" + std::to_string(t + 1) + " has exponent 1";
      return out;
    }
    part.kind = part.vars.size() == 1 ? AtomKind::Fermat : AtomKind::Chain;
    parts.push_back(std::move(part));
  }
  for (int s = 0; s < n; ++s) {
    if (atom_of[s] != -1) continue;
    AtomicPart part;
    part.kind = AtomKind::Loop;
    int v = s;
    do {
      part.vars.push_back(v);
      part.exps.push_back(E[v][v]);
      atom_of[v] = static_cast<int>(parts.size());
      v = next[v];
    } while (v != s);
    parts.push_back(std::move(part));
  }
  std::vector<bool> emitted(parts.size(), false);
  for (int i = 0; i < n; ++i) {
    int a = atom_of[i];
    if (!emitted[a]) {
      emitted[a] = true;
      out.atoms.push_back(parts[a]);
    }
  }
  return out;
}

std::string weights_failure(const Matrix& E) {
  Int d = determinant(E);
  if (d == 0) return "det(E) = 0";
  auto inv = inverse(E);
  for (const auto& row : inv) {
    Rational s = 0;
    for (const auto& x : row) s += x;
    Rational w = s * std::abs(d);
    if (!is_integral(w) || w <= 0) return "canonical weights are not positive";
  }
  return {};
}

Diagnostic diagnose(const Matrix& E) {
  const std::size_t n = E.size();
  for (const auto& row : E)
    if (row.size() != n) return {false, "exponent matrix is not square"};
  if (determinant(E) == 0) return {false, "det(E) = 0"};
  auto df = try_decompose(E);
  if (!df.failure.empty()) return {false, "no atomic decomposition for f: " + df.failure};
  auto dt = try_decompose(transpose(E));
  if (!dt.failure.empty()) return {false, "no atomic decomposition for f^T: " + dt.failure};
  auto wf = weights_failure(E);
  if (!wf.empty()) return {false, wf};
  return {};
}

// Reorders rows so that monomial i owns variable i.  Rows already in owning
// position are preferred, so valid input keeps its order.
std::optional<std::vector<int>> owner_order(const Matrix& E) {
  const int n = static_cast<int>(E.size());
  std::vector<std::vector<int>> cand(n);
  for (int r = 0; r < n; ++r) {
    std::vector<int> support;
    for (int j = 0; j < n; ++j)
      if (E[r][j] > 0) support.push_back(j);
    if (support.size() == 1) {
      cand[r] = support;
    } else if (support.size() == 2) {
      int a = support[0], b = support[1];
      if (E[r][b] == 1) cand[r].push_back(a);
      if (E[r][a] == 1) cand[r].push_back(b);
    }
    std::stable_partition(cand[r].begin(), cand[r].end(), [r](int c) { return c == r; });
  }
  std::vector<int> col_row(n, -1);
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int r) -> void {
    if (found) return;
    if (r == n) {
      Matrix M(n);
      for (int c = 0; c < n; ++c) M[c] = E[col_row[c]];
      if (diagnose(M).ok) found = col_row;
      return;
    }
    for (int c : cand[r]) {
      if (col_row[c] != -1) continue;
      col_row[c] = r;
      self(self, r + 1);
      col_row[c] = -1;
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace

bool Polynomial::unit_coefficients() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Int c) { return c == 1; });
}

Int determinant(const Matrix& E) {
  const std::size_t n = E.size();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination; exact for integer input.
  Matrix a = E;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<Rational>> inverse(const Matrix& E) {
  const std::size_t n = E.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = E[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorCode::NotInvertible, "singular exponent matrix");
    std::swap(a[c], a[p]);
    Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational m = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= m * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

Matrix transpose(const Matrix& E) {
  const std::size_t n = E.size();
  Matrix t(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = E[i][j];
  return t;
}

Diagnostic validate_invertible(const Matrix& E) {
  auto d = diagnose(E);
  if (d.ok) return d;
  // The rows may simply be listed in a different order.
  for (const auto& row : E)
    if (row.size() != E.size()) return d;
  if (determinant(E) != 0 && owner_order(E)) return {};
  return d;
}

Diagnostic validate_invertible(const Polynomial& f) { return validate_invertible(f.E); }

Polynomial make_polynomial(const Matrix& E, std::vector<std::string> vars, std::vector<Int> coeffs) {
  const int n = static_cast<int>(E.size());
  for (const auto& row : E)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::NotSquare, "exponent matrix is not square");
  if (vars.empty()) vars = default_vars(n, false);
  if (coeffs.empty()) coeffs.assign(n, 1);
  if (static_cast<int>(vars.size()) != n || static_cast<int>(coeffs.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "variable or coefficient count mismatch");
  for (int j = 0; j < n; ++j) {
    bool used = false;
    for (int i = 0; i < n; ++i) used = used || E[i][j] > 0;
    if (!used) throw Error(ErrorCode::NotInvertible, "variable " + vars[j] + " does not occur");
  }
  if (determinant(E) == 0) throw Error(ErrorCode::NotInvertible, "det(E) = 0");

  Polynomial f;
  f.n = n;
  f.vars = std::move(vars);
  auto diag = diagnose(E);
  if (diag.ok) {
    f.E = E;
    f.coeffs = std::move(coeffs);
    return f;
  }
  auto order = owner_order(E);
  if (!order) throw Error(ErrorCode::NotInvertible, diag.reason);
  f.E.resize(n);
  f.coeffs.resize(n);
  for (int c = 0; c < n; ++c) {
    f.E[c] = E[(*order)[c]];
    f.coeffs[c] = coeffs[(*order)[c]];
  }
  return f;
}

Polynomial parse_polynomial(std::string_view text, std::optional<int> nvars) {
  struct Term {
    Int coeff = 1;
    std::vector<std::pair<int, Int>> factors;
  };
  std::vector<Term> terms;
  bool saw_plain = false, saw_indexed = false;
  int max_var = -1;
  std::size_t pos = 0;
  auto syntax = [&](const std::string& what) {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos) + " in '" +
                                            std::string(text) + "'");
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> Int {
    std::size_t start = pos;
    Int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (v > (Int{1} << 40)) syntax("integer too large");
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    if (start == pos) syntax("expected integer");
    return v;
  };

  skip_ws();
  if (pos == text.size()) syntax("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    Int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      syntax("expected '+' or '-'");
    }
    first = false;
    Term term;
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      term.coeff = read_int();
      have_coeff = true;
      if (term.coeff == 0) syntax("zero coefficient");
    }
    term.coeff *= sign;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        if (!have_coeff && term.factors.empty()) syntax("dangling '*'");
        ++pos;
        skip_ws();
        if (pos == text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
          syntax("expected variable after '*'");
      }
      if (pos == text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) break;
      char letter = text[pos++];
      int index;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (letter != 'x') syntax("only x may carry an index");
        Int k = read_int();
        if (k < 1 || k > 64) syntax("variable index out of range");
        index = static_cast<int>(k - 1);
        saw_indexed = true;
      } else {
        if (letter < 'x' || letter > 'z') syntax(std::string("unknown variable '") + letter + "'");
        index = letter - 'x';
        saw_plain = true;
      }
      skip_ws();
      Int e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        e = read_int();
      }
      max_var = std::max(max_var, index);
      term.factors.emplace_back(index, e);
    }
    if (term.factors.empty()) syntax("term without variables");
    terms.push_back(std::move(term));
    skip_ws();
    if (pos == text.size()) break;
  }
  if (saw_plain && saw_indexed) throw Error(ErrorCode::SyntaxError, "mixed x,y,z and x1..xn variables");

  int n = nvars ? *nvars : max_var + 1;
  if (n < 1 || max_var >= n)
    throw Error(ErrorCode::SyntaxError, "variable outside the declared range");
  if (static_cast<int>(terms.size()) != n)
    throw Error(ErrorCode::NotSquare, std::to_string(terms.size()) + " monomials in " +
                                          std::to_string(n) + " variables");
  Matrix E(n, std::vector<Int>(n, 0));
  std::vector<Int> coeffs(n);
  for (int i = 0; i < n; ++i) {
    for (auto [v, e] : terms[i].factors) E[i][v] += e;
    coeffs[i] = terms[i].coeff;
  }
  return make_polynomial(E, default_vars(n, saw_indexed), coeffs);
}

std::string format_polynomial(const Polynomial& f) {
  std::ostringstream os;
  for (int i = 0; i < f.n; ++i) {
    Int c = f.coeffs.empty() ? 1 : f.coeffs[i];
    if (c < 0)
      os << '-';
    else if (i > 0)
      os << '+';
    Int a = c < 0 ? -c : c;
    bool need_star = false;
    if (a != 1) {
      os << a;
      need_star = true;
    }
    for (int j = 0; j < f.n; ++j) {
      if (f.E[i][j] == 0) continue;
      if (need_star) os << '*';
      os << f.vars[j];
      if (f.E[i][j] != 1) os << '^' << f.E[i][j];
      need_star = true;
    }
  }
  return os.str();
}

std::string format_matrix(const Matrix& E) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < E.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < E[i].size(); ++j) os << (j ? "," : "") << E[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

Polynomial transpose(const Polynomial& f) {
  Polynomial t = f;
  t.E = transpose(f.E);
  return t;
}

const char* atom_name(AtomKind kind) {
  switch (kind) {
    case AtomKind::Fermat: return "Fermat";
    case AtomKind::Chain: return "Chain";
    case AtomKind::Loop: return "Loop";
  }
  return "?";
}

std::vector<AtomicPart> decompose_atoms(const Matrix& E) {
  auto d = try_decompose(E);
  if (!d.failure.empty()) throw Error(ErrorCode::NotInvertible, d.failure);
  return d.atoms;
}

std::vector<AtomicPart> decompose_atoms(const Polynomial& f) { return decompose_atoms(f.E); }

const char* type_name(Type3 t) {
  switch (t) {
    case Type3::I: return "I";
    case Type3::II: return "II";
    case Type3::III: return "III";
    case Type3::IV: return "IV";
    case Type3::V: return "V";
  }
  return "?";
}

TypeTag3 classify3(const Matrix& E) {
  if (E.size() != 3) throw Error(ErrorCode::InvalidArgument, "classify3 needs three variables");
  decompose_atoms(E);
  using Mono = std::array<Int, 3>;
  std::array<int, 3> perm{0, 1, 2};
  do {
    std::vector<Mono> ms;
    for (const auto& row : E) ms.push_back({row[perm[0]], row[perm[1]], row[perm[2]]});
    auto find = [&](auto pred) -> const Mono* {
      for (const auto& m : ms)
        if (pred(m)) return &m;
      return nullptr;
    };
    const Mono* xp = find([](const Mono& m) { return m[0] >= 2 && m[1] == 0 && m[2] == 0; });
    const Mono* yp = find([](const Mono& m) { return m[0] == 0 && m[1] >= 2 && m[2] == 0; });
    const Mono* zp = find([](const Mono& m) { return m[0] == 0 && m[1] == 0 && m[2] >= 2; });
    const Mono* yz = find([](const Mono& m) { return m[0] == 0 && m[1] == 1 && m[2] >= 2; });
    if (xp && yp && zp) return {Type3::I, {(*xp)[0], (*yp)[1], (*zp)[2]}, perm};
    if (xp && yp && yz) return {Type3::II, {(*xp)[0], (*yp)[1], (*yp)[1] * (*yz)[2]}, perm};
    const Mono* zy = find([](const Mono& m) { return m[0] == 0 && m[1] >= 2 && m[2] == 1; });
    if (xp && zy && yz) return {Type3::III, {(*xp)[0], (*zy)[1] - 1, (*yz)[2] - 1}, perm};
    const Mono* xy = find([](const Mono& m) { return m[0] == 1 && m[1] >= 1 && m[2] == 0; });
    if (xp && xy && yz) {
      Int p1 = (*xp)[0], p2 = p1 * (*xy)[1];
      return {Type3::IV, {p1, p2, p2 * (*yz)[2]}, perm};
    }
    const Mono* a = find([](const Mono& m) { return m[0] >= 1 && m[1] == 1 && m[2] == 0; });
    const Mono* b = find([](const Mono& m) { return m[0] == 0 && m[1] >= 1 && m[2] == 1; });
    const Mono* c = find([](const Mono& m) { return m[0] == 1 && m[1] == 0 && m[2] >= 1; });
    if (a && b && c && a != b && b != c && a != c)
      return {Type3::V, {(*a)[0], (*b)[1], (*c)[2]}, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error(ErrorCode::NotInvertible, "no Table-1 normal form matches " + format_matrix(E));
}

TypeTag3 classify3(const Polynomial& f) { return classify3(f.E); }

std::vector<Rational> WeightSystem::q() const {
  std::vector<Rational> out;
  for (Int x : w) out.emplace_back(x, d);
  return out;
}

WeightSystem canonical_weights(const Matrix& E) {
  Int d = std::abs(determinant(E));
  if (d == 0) throw Error(ErrorCode::NotInvertible, "det(E) = 0");
  auto inv = inverse(E);
  WeightSystem ws;
  ws.d = d;
  Int g = d;
  for (const auto& row : inv) {
    Rational s = 0;
    for (const auto& x : row) s += x;
    Rational w = s * d;
    if (!is_integral(w) || w <= 0)
      throw Error(ErrorCode::NotInvertible, "canonical weights are not positive integers");
    ws.w.push_back(w.numerator());
    g = std::gcd(g, w.numerator());
  }
  ws.cf = g;
  return ws;
}

WeightSystem canonical_weights(const Polynomial& f) { return canonical_weights(f.E); }

WeightSystem reduced_weights(const Matrix& E) {
  WeightSystem ws = canonical_weights(E);
  for (auto& x : ws.w) x /= ws.cf;
  ws.d /= ws.cf;
  ws.cf = 1;
  return ws;
}

WeightSystem reduced_weights(const Polynomial& f) { return reduced_weights(f.E); }

Int cf(const Polynomial& f) { return canonical_weights(f).cf; }

}  // namespace lgm
