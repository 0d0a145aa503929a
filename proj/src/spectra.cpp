#include "lgm/spectra.hpp"

#include "lgm/curve.hpp"
#include "lgm/error.hpp"

#include <numeric>

namespace lgm {

Int ExponentList::size() const {
  Int n = 0;
  for (const auto& [q, m] : multiplicity) n += m;
  return n;
}

namespace {

void require_intermediate(const Polynomial& f, const DiagonalGroup& G) {
  for (const auto& g : G.generators())
    if (!is_symmetry(f.E, g)) throw Error(ErrorCode::NotASubgroup, "group is not contained in G^fin_f");
  if (!contains_g0(f, G)) throw Error(ErrorCode::NotContainingG0, "group does not contain g0");
}

void require_sl_symmetry(const Polynomial& f, const DiagonalGroup& G) {
  for (const auto& g : G.generators()) {
    if (!is_symmetry(f.E, g)) throw Error(ErrorCode::NotASubgroup, "group is not contained in G^fin_f");
    if (!in_sl(g)) throw Error(ErrorCode::NotSL, format_phase(g) + " is not in SL");
  }
}

Int exact_quotient(const Rational& r, const char* what) {
  if (!is_integral(r)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not an integer");
  return r.numerator();
}

const IntPoly& cyclotomic(Int r) {
  static thread_local std::map<Int, IntPoly> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  IntPoly p(r + 1, 0);
  p[0] = -1;
  p[r] = 1;
  for (Int d : divisors(r))
    if (d < r) p = poly_div_exact(p, cyclotomic(d));
  return cache.emplace(r, std::move(p)).first->second;
}

}  // namespace

CycloVector poincare_series(const Polynomial& f, const DiagonalGroup& G) {
  require_intermediate(f, G);
  const WeightSystem ws = canonical_weights(f);
  if (ws.d % G.order() != 0) throw Error(ErrorCode::NotGraded, "|G| does not divide d");
  const Int c = ws.d / G.order();
  if (ws.d % c != 0) throw Error(ErrorCode::NotGraded, "|G^fin/G| does not divide d");
  CycloVector p = CycloVector::factor(ws.d / c);
  for (Int w : ws.w) {
    if (w % c != 0)
      throw Error(ErrorCode::NotGraded, "|G^fin/G| = " + std::to_string(c) + " does not divide weight " +
                                            std::to_string(w));
    p /= CycloVector::factor(w / c);
  }
  return p;
}

CycloVector psi(const Polynomial& f, const DiagonalGroup& G) {
  CycloVector v = poincare_series(f, G);
  const auto curve = curve_invariants(f, G);
  v *= CycloVector::factor(1, 2 - 2 * curve.genus);
  for (Int a : curve.dolgachev) v *= CycloVector::factor(a) / CycloVector::factor(1);
  return v;
}

CycloVector table2_psi(const Polynomial& f) {
  const TypeTag3 t = classify3(f);
  const Int c = cf(f);
  const Int g = genus(f, g0_group(f.E));
  const auto [a, b, e] = t.params;
  CycloVector v;
  auto num = [&](Rational m, Int k = 1) { v *= CycloVector::factor(exact_quotient(m, "table entry"), k); };
  auto den = [&](Rational m, Int k = 1) { v /= CycloVector::factor(exact_quotient(m, "table entry"), k); };
  switch (t.tag) {
    case Type3::I: {
      const Int p1 = a, p2 = b, p3 = e;
      const Int c1 = std::gcd(p2, p3), c2 = std::gcd(p1, p3), c3 = std::gcd(p1, p2);
      num(Rational(p1 * c1, c), c1);
      num(Rational(p2 * c2, c), c2);
      num(Rational(p3 * c3, c), c3);
      num(Rational(p1 * p2 * p3, c));
      den(1, c1 + c2 + c3 - 2 + 2 * g);
      den(Rational(p2 * p3, c));
      den(Rational(p3 * p1, c));
      den(Rational(p1 * p2, c));
      break;
    }
    case Type3::II: {
      const Int p1 = a, p2 = b, p3 = e;
      const Int c1 = std::gcd(p3 / p2, p2 - 1), c2 = std::gcd(p1, p2);
      num(Rational(p1 * c1, c), c1);
      num(Rational(p3 * c2, p2 * c), c2);
      num(Rational(p1 * p3, c));
      den(1, c1 + c2 - 1 + 2 * g);
      den(Rational(p3, c));
      den(Rational(p1 * p3, p2 * c));
      break;
    }
    case Type3::III: {
      const Int p1 = a, q2 = b, q3 = e;
      const Int p2 = (q2 + 1) * (q3 + 1) - 1;
      const Int c1 = std::gcd(q2, q3);
      num(Rational(p1 * c1, c), c1);
      num(Rational(p1 * p2, c));
      den(1, c1 + 2 * g);
      den(Rational(p2, c));
      break;
    }
    case Type3::IV: {
      const Int p1 = a, p2 = b, p3 = e;
      const Int c1 = std::gcd(p2 / p1, p1 - 1);
      num(Rational(p3 * c1, p2 * c), c1);
      num(Rational(p3, c));
      den(1, c1 + 2 * g);
      den(Rational(p3, p1 * c));
      break;
    }
    case Type3::V: {
      num(Rational(a * b * e + 1, c));
      den(1, 1 + 2 * g);
      break;
    }
  }
  return v;
}

LefschetzTable lefschetz_numbers(const Polynomial& f, const DiagonalGroup& G) {
  require_sl_symmetry(f, G);
  const WeightSystem ws = reduced_weights(f);
  const Int dt = ws.d;
  const int n = f.n;
  // Every product is scaled by W = prod w_i so that it stays integral:
  // (delta/q_i - 1) * w_i = delta ? dt - w_i : -w_i.
  Int W = 1;
  for (Int w : ws.w) W *= w;
  // The inner sum over h depends on g only through Fix g, so it is computed
  // once per subset of coordinates.
  if (n > 20) throw Error(ErrorCode::InvalidArgument, "too many variables");
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Int> sector_weight(subsets, 0);
  for (const auto& g : G.elements()) {
    auto a = age_and_fix(g);
    std::size_t mask = 0;
    for (int i : a.fixed) mask |= std::size_t{1} << i;
    sector_weight[mask] += (a.nfix + 1) % 2 == 0 ? 1 : -1;
  }
  LefschetzTable table;
  table.modulus = dt;
  table.values.reserve(static_cast<std::size_t>(dt));
  const auto& els = G.elements();
  std::vector<Int> subset_sum(subsets);
  for (Int k = 1; k <= dt; ++k) {
    std::fill(subset_sum.begin(), subset_sum.end(), 0);
    for (const auto& h : els) {
      // factor[i] = W-scaled (delta/q_i - 1) with delta = [phase_i(h) + k q_i in Z]
      std::vector<Int> factor(n);
      for (int i = 0; i < n; ++i)
        factor[i] = is_integral(h.phases[i] + Rational(k * ws.w[i], dt)) ? dt - ws.w[i] : -ws.w[i];
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        if (!sector_weight[mask]) continue;
        Int prod = W;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) prod = prod / ws.w[i] * factor[i];
        subset_sum[mask] += prod;
      }
    }
    Int total = 0;
    for (std::size_t mask = 0; mask < subsets; ++mask) total += sector_weight[mask] * subset_sum[mask];
    const Int denom = G.order() * W;
    if (total % denom != 0)
      throw Error(ErrorCode::NonIntegralTrace, "L_" + std::to_string(k) + " = " +
                                                   to_string(Rational(total, denom)) + " is not an integer");
    table.values.push_back(total / denom);
  }
  return table;
}

CycloVector moebius_invert(const LefschetzTable& table) {
  const Int dt = table.modulus;
  std::map<Int, Int> e;
  for (Int m : divisors(dt)) {
    Int s = 0;
    for (Int k : divisors(m)) s += moebius(m / k) * table.at(k);
    if (s % m != 0)
      throw Error(ErrorCode::MoebiusInconsistent, "e(" + std::to_string(m) + ") = " +
                                                      to_string(Rational(s, m)) + " is not an integer");
    if (s) e[m] = s / m;
  }
  for (Int k = 1; k <= dt; ++k) {
    if (table.at(k) != table.at(std::gcd(k, dt)))
      throw Error(ErrorCode::MoebiusInconsistent, "L_" + std::to_string(k) + " differs from L_gcd");
    Int s = 0;
    for (auto [m, em] : e)
      if (k % m == 0) s += m * em;
    if (s != table.at(k))
      throw Error(ErrorCode::MoebiusInconsistent, "reconstruction fails at k = " + std::to_string(k));
  }
  return CycloVector(e);
}

CycloVector equivariant_char_poly(const Polynomial& f, const DiagonalGroup& G) {
  return moebius_invert(lefschetz_numbers(f, G));
}

QhCharPoly char_poly_qh(const Polynomial& f) {
  const WeightSystem ws = reduced_weights(f);
  const Int dt = ws.d;
  IntPoly num{1}, den{1};
  for (Int w : ws.w) {
    IntPoly a(dt + 1, 0), b(w + 1, 0);
    a[w] = 1;
    a[dt] -= 1;
    b[0] = 1;
    b[w] = -1;
    num = poly_mul(num, a);
    den = poly_mul(den, b);
  }
  const IntPoly P = poly_div_exact(num, den);
  QhCharPoly out;
  for (std::size_t p = 0; p < P.size(); ++p) {
    if (P[p] < 0) throw Error(ErrorCode::NotPolynomial, "negative exponent multiplicity");
    if (P[p] > 0) out.exponents.multiplicity[Rational(static_cast<Int>(p), dt)] = P[p];
  }
  // Lambda_k depends only on gcd(k, dt); for k | dt the root e[k/dt] is a
  // primitive r-th root of unity with r = dt / k.
  LefschetzTable table;
  table.modulus = dt;
  table.values.assign(static_cast<std::size_t>(dt), 0);
  std::map<Int, Int> lambda;
  for (Int k : divisors(dt)) {
    const Int r = dt / k;
    IntPoly folded(r, 0);
    for (std::size_t p = 0; p < P.size(); ++p) folded[p % r] += P[p];
    IntPoly rem = poly_mod_monic(folded, cyclotomic(r));
    if (rem.size() > 1)
      throw Error(ErrorCode::NonIntegralTrace, "trace of the " + std::to_string(k) + "-th power is irrational");
    lambda[k] = rem.empty() ? 0 : rem[0];
  }
  for (Int k = 1; k <= dt; ++k) table.values[k - 1] = lambda.at(std::gcd(k, dt));
  out.cyclo = moebius_invert(table);
  return out;
}

Int milnor_number_qh(const Polynomial& f) {
  const WeightSystem ws = reduced_weights(f);
  Rational mu = 1;
  for (Int w : ws.w) mu *= Rational(ws.d, w) - 1;
  return exact_quotient(mu, "Milnor number");
}

const char* status_name(PoincareStatus s) {
  switch (s) {
    case PoincareStatus::Equal: return "Equal";
    case PoincareStatus::NotEqual: return "NotEqual";
    case PoincareStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

PoincareVerdict verify_poincare_theorem(const Polynomial& f) {
  PoincareVerdict v;
  const Polynomial ft = transpose(f);
  const Int c = cf(f), ct = cf(ft);
  const DiagonalGroup G0 = g0_group(f.E);
  if (c != ct) {
    v.reason = "c_f = " + std::to_string(c) + " but c_{f^T} = " + std::to_string(ct);
    return v;
  }
  const Int g = genus(f, G0);
  if (g != 0) {
    v.reason = "genus(f, G_0) = " + std::to_string(g);
    return v;
  }
  v.psi = psi(f, G0);
  v.phi = equivariant_char_poly(ft, dual_group(f, G0));
  v.status = v.psi == v.phi ? PoincareStatus::Equal : PoincareStatus::NotEqual;
  return v;
}

}  // namespace lgm
