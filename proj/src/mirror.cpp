#include "lgm/mirror.hpp"

#include "lgm/error.hpp"

#include <sstream>

namespace lgm {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

GroupSummary summarize(const DiagonalGroup& G) {
  GroupSummary s;
  s.order = G.order();
  for (const auto& g : G.generators()) s.generators.push_back(format_phase_compact(g));
  return s;
}

std::string type_string(const TypeTag3& t) {
  std::ostringstream os;
  os << type_name(t.tag) << '(' << t.params[0] << ',' << t.params[1] << ',' << t.params[2] << ')';
  return os.str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

}  // namespace

std::string format_multiset(const std::vector<Int>& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "}";
}

MirrorChecks MirrorReport::checks() const {
  MirrorChecks c;
  c.a_eq_gamma = dolgachev == gabrielov;
  c.g_eq_j = genus == junior;
  c.e_eq_mu = stringy_euler == milnor;
  return c;
}

MirrorReport verify_mirror(const Polynomial& f, const DiagonalGroup& G, const VerifyOptions& opts) {
  if (f.n != 3) throw Error(ErrorCode::InvalidArgument, "mirror verification needs three variables");
  MirrorReport r;
  r.input = format_polynomial(f);
  r.exponent_matrix = f.E;
  r.canonical = canonical_weights(f);
  r.reduced = reduced_weights(f);
  r.det = r.canonical.d;
  r.type = type_string(classify3(f));
  r.group = summarize(G);

  const DiagonalGroup GT = dual_group(f, G);
  r.dual = summarize(GT);

  const Triple alpha = opts.alpha_prime_override ? opts.alpha_prime_override(f) : dolgachev_gfin(f);
  r.dolgachev = dolgachev(f, G, alpha).multiset;
  r.genus = junior_count(GT);
  r.stringy_euler = orbifold_euler(r.genus, r.dolgachev);

  const Polynomial ft = transpose(f);
  const CuspPolynomial cusp = gabrielov_prime(ft);
  r.gamma_prime = cusp.gamma_prime;
  r.delta = cusp.delta;
  const GabrielovData gab = gabrielov(cusp.gamma_prime, GT);
  r.gabrielov = gab.multiset;
  r.junior = gab.j;
  r.milnor = gab.milnor;

  if (opts.series) {
    try {
      r.poincare = poincare_series(f, G);
      CycloVector ps = *r.poincare * CycloVector::factor(1, 2 - 2 * r.genus);
      for (Int a : r.dolgachev) ps *= CycloVector::factor(a) / CycloVector::factor(1);
      r.psi = ps;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotGraded) throw;
      r.notes.push_back(std::string("no Poincare series: ") + e.what());
    }
    r.phi = equivariant_char_poly(ft, GT);
  }
  if (!f.unit_coefficients()) r.notes.push_back("non-unit coefficients are ignored by every invariant");
  return r;
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

ordered_json cyclo_to_json(const CycloVector& v) {
  ordered_json j = ordered_json::object();
  for (auto it = v.entries().rbegin(); it != v.entries().rend(); ++it)
    j[std::to_string(it->first)] = it->second;
  return j;
}

CycloVector cyclo_from_json(const json& j) {
  std::map<Int, Int> e;
  for (auto it = j.begin(); it != j.end(); ++it) e[std::stoll(it.key())] = it.value().get<Int>();
  return CycloVector(e);
}

namespace {

ordered_json weights_json(const WeightSystem& w) {
  ordered_json j;
  j["w"] = w.w;
  j["d"] = w.d;
  return j;
}

WeightSystem weights_from(const json& j, Int cf) {
  WeightSystem w;
  w.w = j.at("w").get<std::vector<Int>>();
  w.d = j.at("d").get<Int>();
  w.cf = cf;
  return w;
}

ordered_json group_json(const GroupSummary& g) {
  ordered_json j;
  j["order"] = g.order;
  j["generators"] = g.generators;
  return j;
}

GroupSummary group_from(const json& j) {
  return {j.at("order").get<Int>(), j.at("generators").get<std::vector<std::string>>()};
}

std::optional<CycloVector> opt_cyclo(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return cyclo_from_json(j.at(key));
}

}  // namespace

ordered_json to_json(const MirrorReport& r) {
  ordered_json j;
  j["input"] = r.input;
  j["exponent_matrix"] = r.exponent_matrix;
  j["det"] = r.det;
  j["weights"]["canonical"] = weights_json(r.canonical);
  j["weights"]["reduced"] = weights_json(r.reduced);
  j["weights"]["cf"] = r.canonical.cf;
  j["type"] = r.type;
  j["group"] = group_json(r.group);
  j["dual"] = group_json(r.dual);
  j["curve"]["genus"] = r.genus;
  j["curve"]["dolgachev"] = r.dolgachev;
  j["curve"]["stringy_euler"] = r.stringy_euler;
  j["cusp"]["gamma_prime"] = r.gamma_prime;
  j["cusp"]["delta"] = r.delta;
  j["cusp"]["gabrielov"] = r.gabrielov;
  j["cusp"]["junior"] = r.junior;
  j["cusp"]["milnor"] = r.milnor;
  auto series = [](const std::optional<CycloVector>& v) -> ordered_json {
    return v ? cyclo_to_json(*v) : ordered_json(nullptr);
  };
  j["series"]["poincare"] = series(r.poincare);
  j["series"]["psi"] = series(r.psi);
  j["series"]["phi"] = series(r.phi);
  const MirrorChecks c = r.checks();
  j["checks"]["a_eq_gamma"] = c.a_eq_gamma;
  j["checks"]["g_eq_j"] = c.g_eq_j;
  j["checks"]["e_eq_mu"] = c.e_eq_mu;
  j["notes"] = r.notes;
  return j;
}

MirrorReport report_from_json(const json& j) {
  MirrorReport r;
  r.input = j.at("input").get<std::string>();
  r.exponent_matrix = j.at("exponent_matrix").get<Matrix>();
  r.det = j.at("det").get<Int>();
  const Int cf = j.at("weights").at("cf").get<Int>();
  r.canonical = weights_from(j.at("weights").at("canonical"), cf);
  r.reduced = weights_from(j.at("weights").at("reduced"), 1);
  r.type = j.at("type").get<std::string>();
  r.group = group_from(j.at("group"));
  r.dual = group_from(j.at("dual"));
  const auto& curve = j.at("curve");
  r.genus = curve.at("genus").get<Int>();
  r.dolgachev = curve.at("dolgachev").get<std::vector<Int>>();
  r.stringy_euler = curve.at("stringy_euler").get<Int>();
  const auto& cusp = j.at("cusp");
  r.gamma_prime = cusp.at("gamma_prime").get<Triple>();
  r.delta = cusp.at("delta").get<Int>();
  r.gabrielov = cusp.at("gabrielov").get<std::vector<Int>>();
  r.junior = cusp.at("junior").get<Int>();
  r.milnor = cusp.at("milnor").get<Int>();
  const auto& series = j.at("series");
  r.poincare = opt_cyclo(series, "poincare");
  r.psi = opt_cyclo(series, "psi");
  r.phi = opt_cyclo(series, "phi");
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string csv_header() {
  return "input,det,weights,cf,type,group_order,group_generators,dual_order,dual_generators,genus,"
         "dolgachev,stringy_euler,gamma_prime,delta,gabrielov,junior,milnor,a_eq_gamma,g_eq_j,e_eq_mu";
}

std::string csv_row(const MirrorReport& r) {
  std::vector<std::string> w;
  for (Int x : r.canonical.w) w.push_back(std::to_string(x));
  const std::string weights = "(" + join(w, " ") + ";" + std::to_string(r.canonical.d) + ")";
  const MirrorChecks c = r.checks();
  std::vector<std::string> cols = {
      r.input,
      std::to_string(r.det),
      weights,
      std::to_string(r.canonical.cf),
      r.type,
      std::to_string(r.group.order),
      join(r.group.generators, ";"),
      std::to_string(r.dual.order),
      join(r.dual.generators, ";"),
      std::to_string(r.genus),
      format_multiset(r.dolgachev),
      std::to_string(r.stringy_euler),
      format_multiset({r.gamma_prime.begin(), r.gamma_prime.end()}),
      std::to_string(r.delta),
      format_multiset(r.gabrielov),
      std::to_string(r.junior),
      std::to_string(r.milnor),
      c.a_eq_gamma ? "true" : "false",
      c.g_eq_j ? "true" : "false",
      c.e_eq_mu ? "true" : "false",
  };
  std::string line;
  for (std::size_t i = 0; i < cols.size(); ++i) line += (i ? "," : "") + csv_quote(cols[i]);
  return line;
}

std::string emit_report(const MirrorReport& r, Format format) {
  switch (format) {
    case Format::Json: return to_json(r).dump(2) + "\n";
    case Format::Csv: return csv_header() + "\n" + csv_row(r) + "\n";
    case Format::Text: break;
  }
  std::ostringstream os;
  auto ws = [](const WeightSystem& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.w.size(); ++i) s += (i ? "," : "") + std::to_string(w.w[i]);
    return s + ";" + std::to_string(w.d) + ")";
  };
  auto gens = [](const GroupSummary& g) { return g.generators.empty() ? std::string("trivial") : join(g.generators, "; "); };
  const MirrorChecks c = r.checks();
  os << "f              " << r.input << "\n"
     << "E              " << format_matrix(r.exponent_matrix) << "\n"
     << "type           " << r.type << "\n"
     << "weights        " << ws(r.canonical) << "  c_f = " << r.canonical.cf << "  reduced "
     << ws(r.reduced) << "\n"
     << "G              order " << r.group.order << "  generated by " << gens(r.group) << "\n"
     << "G^T            order " << r.dual.order << "  generated by " << gens(r.dual) << "\n"
     << "curve          genus " << r.genus << "  Dolgachev " << format_multiset(r.dolgachev)
     << "  e_st " << r.stringy_euler << "\n"
     << "cusp           gamma' " << format_multiset({r.gamma_prime.begin(), r.gamma_prime.end()})
     << "  Delta " << r.delta << "  Gabrielov " << format_multiset(r.gabrielov) << "  j " << r.junior
     << "  mu " << r.milnor << "\n";
  if (r.poincare) os << "poincare       " << r.poincare->to_string() << "\n";
  if (r.psi) os << "psi            " << r.psi->to_string() << "\n";
  if (r.phi) os << "phi(f^T,G^T)   " << r.phi->to_string() << "\n";
  os << "checks         A=Gamma " << (c.a_eq_gamma ? "ok" : "FAIL") << "  g=j "
     << (c.g_eq_j ? "ok" : "FAIL") << "  e_st=mu " << (c.e_eq_mu ? "ok" : "FAIL") << "\n";
  for (const auto& n : r.notes) os << "note           " << n << "\n";
  return os.str();
}

}  // namespace lgm
