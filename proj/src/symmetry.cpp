#include "lgm/symmetry.hpp"

#include "lgm/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lgm {

PhaseVector::PhaseVector(std::vector<Rational> p) : phases(std::move(p)) {
  for (auto& x : phases) x = frac(x);
}

PhaseVector PhaseVector::identity(int n) { return PhaseVector(std::vector<Rational>(n, Rational(0))); }

bool PhaseVector::is_identity() const {
  return std::all_of(phases.begin(), phases.end(), [](const Rational& x) { return x == 0; });
}

PhaseVector PhaseVector::operator+(const PhaseVector& o) const {
  std::vector<Rational> r(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) r[i] = phases[i] + o.phases[i];
  return PhaseVector(std::move(r));
}

PhaseVector PhaseVector::operator-() const {
  std::vector<Rational> r(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) r[i] = -phases[i];
  return PhaseVector(std::move(r));
}

PhaseVector PhaseVector::operator*(Int k) const {
  std::vector<Rational> r(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) r[i] = phases[i] * k;
  return PhaseVector(std::move(r));
}

Int PhaseVector::order() const {
  Int l = 1;
  for (const auto& x : phases) l = std::lcm(l, x.denominator());
  return l;
}

std::string format_phase(const PhaseVector& v) {
  std::string s = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += to_string(v.phases[i]);
  }
  return s + ")";
}

std::string format_phase_compact(const PhaseVector& v) {
  Int r = v.order();
  std::string s = r == 1 ? "(" : "1/" + std::to_string(r) + "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string((v.phases[i] * r).numerator());
  }
  return s + ")";
}

PhaseVector parse_phase(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw Error(ErrorCode::SyntaxError, "bad phase vector '" + std::string(text) + "'");
  Rational scale = 1;
  auto prefix = trim(text.substr(0, open));
  if (!prefix.empty()) scale = parse_rational(prefix);
  std::vector<Rational> ph;
  auto body = text.substr(open + 1, text.size() - open - 2);
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    auto item = trim(body.substr(start, comma == std::string_view::npos ? body.size() - start
                                                                        : comma - start));
    if (item.empty()) throw Error(ErrorCode::SyntaxError, "empty phase in '" + std::string(text) + "'");
    ph.push_back(parse_rational(item) * scale);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PhaseVector(std::move(ph));
}

namespace {

// Phase vectors over a common denominator L, packed base L into one integer.
struct Packed {
  Int L = 1;
  int n = 0;
  bool fits = true;

  Packed(int dim, const std::vector<PhaseVector>& vs) : n(dim) {
    for (const auto& v : vs)
      for (const auto& p : v.phases) L = std::lcm(L, p.denominator());
    Int radix = 1;
    for (int i = 0; i < n && fits; ++i) {
      if (radix > std::numeric_limits<Int>::max() / L / 2) fits = false;
      radix *= L;
    }
  }
  Int pack(const PhaseVector& v) const {
    Int c = 0;
    for (const auto& p : v.phases) c = c * L + p.numerator() * (L / p.denominator());
    return c;
  }
  Int add(Int a, Int b) const {
    Int c = 0, scale = 1;
    for (int i = 0; i < n; ++i, a /= L, b /= L, scale *= L) c += (a % L + b % L) % L * scale;
    return c;
  }
  PhaseVector unpack(Int c) const {
    std::vector<Rational> ph(n);
    for (int i = n; i-- > 0; c /= L) ph[i] = Rational(c % L, L);
    return PhaseVector(std::move(ph));
  }
};

// Packed integers of a fixed n order exactly like the phase vectors do.
std::vector<PhaseVector> closure(int n, const std::vector<PhaseVector>& gens) {
  const Packed pk(n, gens);
  if (!pk.fits) {
    std::set<PhaseVector> seen{PhaseVector::identity(n)};
    std::vector<PhaseVector> frontier{PhaseVector::identity(n)};
    while (!frontier.empty()) {
      std::vector<PhaseVector> next;
      for (const auto& s : frontier)
        for (const auto& g : gens) {
          auto t = s + g;
          if (seen.insert(t).second) next.push_back(std::move(t));
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }
  std::vector<Int> g;
  for (const auto& v : gens) g.push_back(pk.pack(v));
  std::unordered_set<Int> seen{0};
  std::vector<Int> all{0}, frontier{0};
  while (!frontier.empty()) {
    std::vector<Int> next;
    for (Int s : frontier)
      for (Int x : g) {
        Int t = pk.add(s, x);
        if (seen.insert(t).second) {
          next.push_back(t);
          all.push_back(t);
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  std::vector<PhaseVector> out;
  out.reserve(all.size());
  for (Int c : all) out.push_back(pk.unpack(c));
  return out;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> ps;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

DiagonalGroup::DiagonalGroup(Matrix context, const std::vector<PhaseVector>& gens)
    : context_(std::move(context)) {
  const int dim = static_cast<int>(context_.size());
  for (const auto& g : gens)
    if (g.size() != dim)
      throw Error(ErrorCode::InvalidArgument, "phase vector " + format_phase(g) + " has wrong length");
  elements_ = closure(dim, gens);
  choose_generators();
}

DiagonalGroup DiagonalGroup::from_elements(Matrix context, std::vector<PhaseVector> sorted_elements) {
  DiagonalGroup G;
  G.context_ = std::move(context);
  G.elements_ = std::move(sorted_elements);
  G.choose_generators();
  return G;
}

void DiagonalGroup::choose_generators() {
  const int dim = static_cast<int>(context_.size());
  generators_.clear();
  // Greedy generators: scan sorted elements, keep whatever enlarges the span.
  const Packed pk(dim, elements_);
  if (!pk.fits) {
    std::set<PhaseVector> span{PhaseVector::identity(dim)};
    for (const auto& e : elements_) {
      if (span.count(e)) continue;
      generators_.push_back(e);
      auto c = closure(dim, generators_);
      span = std::set<PhaseVector>(c.begin(), c.end());
      if (span.size() == elements_.size()) break;
    }
    return;
  }
  std::unordered_set<Int> span{0};
  for (const auto& e : elements_) {
    const Int x = pk.pack(e);
    if (span.count(x)) continue;
    generators_.push_back(e);
    // span + <x> = union of the translates span + k x
    std::vector<Int> base(span.begin(), span.end());
    for (Int step = x; !span.count(step); step = pk.add(step, x))
      for (Int b : base) span.insert(pk.add(b, step));
    if (span.size() == elements_.size()) break;
  }
}

bool DiagonalGroup::contains(const PhaseVector& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

bool DiagonalGroup::subgroup_of(const DiagonalGroup& other) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const PhaseVector& g) { return other.contains(g); });
}

std::vector<Int> DiagonalGroup::structure() const {
  // p-primary parts from the counts #{x : p^i x = 0}, then invariant factors.
  std::vector<std::vector<Int>> primary;
  for (Int p : prime_factors(order())) {
    std::vector<Int> ranks;  // ranks[i] = #cyclic factors of order >= p^{i+1}
    Int prev_log = 0, pk = p;
    while (true) {
      Int count = 0;
      for (const auto& e : elements_)
        if ((e * pk).is_identity()) ++count;
      Int lg = 0;
      for (Int c = count; c > 1; c /= p) ++lg;
      if (lg == prev_log) break;
      ranks.push_back(lg - prev_log);
      prev_log = lg;
      pk *= p;
    }
    std::vector<Int> powers;  // descending
    Int rmax = ranks.empty() ? 0 : ranks[0];
    for (Int j = 0; j < rmax; ++j) {
      Int q = 1;
      for (std::size_t i = 0; i < ranks.size() && ranks[i] > j; ++i) q *= p;
      powers.push_back(q);
    }
    primary.push_back(std::move(powers));
  }
  std::size_t len = 0;
  for (const auto& v : primary) len = std::max(len, v.size());
  std::vector<Int> inv(len, 1);
  for (const auto& v : primary)
    for (std::size_t j = 0; j < v.size(); ++j) inv[j] *= v[j];
  std::reverse(inv.begin(), inv.end());
  return inv;
}

std::string format_structure(const std::vector<Int>& invariants) {
  if (invariants.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(invariants[i]);
  }
  return s;
}

std::string format_generators(const DiagonalGroup& G) {
  if (G.generators().empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < G.generators().size(); ++i) {
    if (i) s += ';';
    s += format_phase_compact(G.generators()[i]);
  }
  return s;
}

bool is_symmetry(const Matrix& E, const PhaseVector& v) {
  if (v.size() != static_cast<int>(E.size())) return false;
  for (const auto& row : E) {
    Rational s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += v.phases[j] * row[j];
    if (!is_integral(s)) return false;
  }
  return true;
}

DiagonalGroup gfin(const Matrix& E) {
  // Recomputed often for the same few matrices during corpus runs.
  static thread_local std::map<Matrix, DiagonalGroup> cache;
  if (auto it = cache.find(E); it != cache.end()) return it->second;
  if (cache.size() > 64) cache.clear();
  // The columns of E^{-1} are exactly the phase vectors making one monomial
  // pick up e[1] and the others e[0]; they generate {v : E v in Z^n}.
  auto inv = inverse(E);
  const std::size_t n = E.size();
  std::vector<PhaseVector> gens;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = inv[i][j];
    gens.emplace_back(std::move(col));
  }
  return cache.emplace(E, DiagonalGroup(E, gens)).first->second;
}

DiagonalGroup gfin(const Polynomial& f) { return gfin(f.E); }

PhaseVector g0(const Matrix& E) { return PhaseVector(canonical_weights(E).q()); }
PhaseVector g0(const Polynomial& f) { return g0(f.E); }

DiagonalGroup group_from_generators(const Matrix& E, const std::vector<PhaseVector>& gens) {
  for (const auto& g : gens)
    if (!is_symmetry(E, g))
      throw Error(ErrorCode::NotASymmetry, format_phase(g) + " is not a diagonal symmetry of " +
                                               format_matrix(E));
  return DiagonalGroup(E, gens);
}

DiagonalGroup group_from_generators(const Polynomial& f, const std::vector<PhaseVector>& gens) {
  return group_from_generators(f.E, gens);
}

DiagonalGroup trivial_group(const Matrix& E) { return DiagonalGroup(E, {}); }
DiagonalGroup g0_group(const Matrix& E) { return DiagonalGroup(E, {g0(E)}); }

DiagonalGroup dual_group(const Matrix& E, const DiagonalGroup& G) {
  for (const auto& v : G.generators())
    if (!is_symmetry(E, v))
      throw Error(ErrorCode::NotASubgroup, "group is not contained in G^fin of " + format_matrix(E));
  const std::size_t n = E.size();
  // Pairing u^T E v, with r = u^T E integral for u in G^fin_{f^T}.
  auto pairing_integral = [&](const PhaseVector& u, const PhaseVector& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (u.phases[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (E[i][j]) s += u.phases[i] * E[i][j] * v.phases[j];
    }
    return is_integral(s);
  };
  Matrix Et = transpose(E);
  std::vector<PhaseVector> keep;
  const DiagonalGroup full = gfin(Et);
  for (const auto& u : full.elements()) {
    bool ok = std::all_of(G.generators().begin(), G.generators().end(),
                          [&](const PhaseVector& v) { return pairing_integral(u, v); });
    if (ok) keep.push_back(u);
  }
  return DiagonalGroup::from_elements(Et, std::move(keep));
}

DiagonalGroup dual_group(const Polynomial& f, const DiagonalGroup& G) { return dual_group(f.E, G); }

AgeReport age_and_fix(const PhaseVector& g) {
  AgeReport r;
  r.age = 0;
  for (int i = 0; i < g.size(); ++i) {
    r.age += g.phases[i];
    if (g.phases[i] == 0) r.fixed.push_back(i);
  }
  r.nfix = static_cast<int>(r.fixed.size());
  return r;
}

Int junior_count(const DiagonalGroup& G) {
  Int j = 0;
  for (const auto& g : G.elements()) {
    auto a = age_and_fix(g);
    if (a.age == 1 && a.nfix == 0) ++j;
  }
  return j;
}

DiagonalGroup subgroup_fixing_coordinate(const DiagonalGroup& G, int i) {
  if (i < 0 || i >= G.n()) throw Error(ErrorCode::InvalidArgument, "coordinate index out of range");
  std::vector<PhaseVector> keep;
  for (const auto& g : G.elements())
    if (g.phases[i] == 0) keep.push_back(g);
  return DiagonalGroup::from_elements(G.context(), std::move(keep));
}

bool in_sl(const PhaseVector& g) { return is_integral(age_and_fix(g).age); }

bool is_sl_subgroup(const DiagonalGroup& G) {
  return std::all_of(G.generators().begin(), G.generators().end(), in_sl);
}

bool contains_g0(const Matrix& E, const DiagonalGroup& G) { return G.contains(g0(E)); }
bool contains_g0(const Polynomial& f, const DiagonalGroup& G) { return contains_g0(f.E, G); }

std::vector<DiagonalGroup> intermediate_subgroups(const Polynomial& f) {
  // Subgroups containing G_0 correspond to subgroups of Q = G^fin/G_0, which
  // is small.  Elements are encoded as integers base D = |det E| so that the
  // coset bookkeeping avoids rational arithmetic.
  const DiagonalGroup full = gfin(f);
  const auto& els = full.elements();
  const std::size_t N = els.size();
  const int n = f.n;
  const Int D = std::abs(determinant(f.E));
  Int radix = 1;
  for (int i = 0; i < n; ++i) {
    if (radix > std::numeric_limits<Int>::max() / D) throw Error(ErrorCode::InvalidArgument, "group too large to encode");
    radix *= D;
  }
  auto digits = [&](const PhaseVector& v) {
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = (v.phases[i] * D).numerator();
    return d;
  };
  auto encode = [&](const std::vector<Int>& d) {
    Int c = 0;
    for (int i = 0; i < n; ++i) c = c * D + d[i];
    return c;
  };
  auto add = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> s(n);
    for (int i = 0; i < n; ++i) s[i] = (a[i] + b[i]) % D;
    return s;
  };
  std::vector<std::vector<Int>> dig(N);
  std::unordered_map<Int, std::size_t> index;
  for (std::size_t i = 0; i < N; ++i) {
    dig[i] = digits(els[i]);
    index[encode(dig[i])] = i;
  }
  const DiagonalGroup base_group = g0_group(f.E);
  std::vector<std::vector<Int>> base;
  for (const auto& e : base_group.elements()) base.push_back(digits(e));

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(N, none), rep;
  for (std::size_t i = 0; i < N; ++i) {
    if (coset[i] != none) continue;
    for (const auto& h : base) coset[index.at(encode(add(dig[i], h)))] = rep.size();
    rep.push_back(i);
  }
  const std::size_t M = rep.size();
  std::vector<std::vector<std::size_t>> qadd(M, std::vector<std::size_t>(M));
  for (std::size_t a = 0; a < M; ++a)
    for (std::size_t b = a; b < M; ++b)
      qadd[a][b] = qadd[b][a] = coset[index.at(encode(add(dig[rep[a]], dig[rep[b]])))];

  using Mask = std::vector<bool>;
  auto extend = [&](const Mask& H, std::size_t x) {
    Mask K = H;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < M; ++i)
      if (H[i]) members.push_back(i);
    std::size_t step = x;
    while (!H[step]) {
      for (std::size_t h : members) K[qadd[h][step]] = true;
      step = qadd[step][x];
    }
    return K;
  };

  Mask trivial(M, false);
  trivial[coset[0]] = true;
  std::set<Mask> seen{trivial};
  std::queue<Mask> todo;
  todo.push(trivial);
  while (!todo.empty()) {
    Mask H = todo.front();
    todo.pop();
    for (std::size_t x = 0; x < M; ++x) {
      if (H[x]) continue;
      Mask K = extend(H, x);
      if (seen.insert(K).second) todo.push(std::move(K));
    }
  }
  std::vector<DiagonalGroup> out;
  for (const auto& m : seen) {
    std::vector<PhaseVector> members;
    for (std::size_t i = 0; i < N; ++i)
      if (m[coset[i]]) members.push_back(els[i]);
    out.push_back(DiagonalGroup::from_elements(f.E, std::move(members)));
  }
  std::sort(out.begin(), out.end(), [](const DiagonalGroup& a, const DiagonalGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

DiagonalGroup parse_group_spec(const Polynomial& f, std::string_view spec) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  spec = trim(spec);
  if (spec == "G0") return g0_group(f.E);
  if (spec == "Gfin") return gfin(f);
  if (spec == "trivial" || spec == "1") return trivial_group(f.E);
  if (spec.rfind("index:", 0) == 0) {
    Int k = parse_rational(trim(spec.substr(6))).numerator();
    Int base = g0_group(f.E).order();
    std::vector<DiagonalGroup> hits;
    for (auto& G : intermediate_subgroups(f))
      if (G.order() == base * k) hits.push_back(std::move(G));
    if (hits.size() != 1)
      throw Error(ErrorCode::InvalidArgument, "index:" + std::to_string(k) + " matches " +
                                                  std::to_string(hits.size()) + " intermediate groups");
    return hits.front();
  }
  std::vector<PhaseVector> gens;
  if (spec.rfind("G0+", 0) == 0) {
    gens.push_back(g0(f));
    spec = trim(spec.substr(3));
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto semi = spec.find(';', start);
    auto item = trim(spec.substr(start, semi == std::string_view::npos ? spec.size() - start
                                                                       : semi - start));
    if (item.empty()) throw Error(ErrorCode::SyntaxError, "empty generator in group spec");
    auto v = parse_phase(item);
    if (v.size() != f.n)
      throw Error(ErrorCode::SyntaxError, "generator " + std::string(item) + " has wrong length");
    gens.push_back(std::move(v));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return group_from_generators(f, gens);
}

}  // namespace lgm
