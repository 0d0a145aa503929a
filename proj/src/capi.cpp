#include "lgmirror.h"

#include "lgm/error.hpp"
#include "lgm/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>

struct lgm_poly {
  lgm::Polynomial f;
};

struct lgm_group {
  lgm::DiagonalGroup G;
};

namespace {

using namespace lgm;
using nlohmann::ordered_json;

thread_local std::string last_error;

template <class Fn>
lgm_status guard(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return LGM_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<lgm_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    last_error = e.what();
    return LGM_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

Format to_format(lgm_format f) {
  switch (f) {
    case LGM_FORMAT_TEXT: return Format::Text;
    case LGM_FORMAT_JSON: return Format::Json;
    case LGM_FORMAT_CSV: return Format::Csv;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown format");
}

std::string csv_line(const std::vector<std::string>& cols) {
  std::string s;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::string& c = cols[i];
    s += i ? "," : "";
    if (c.find_first_of(",\"\n") == std::string::npos) {
      s += c;
      continue;
    }
    s += '"';
    for (char ch : c) s += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    s += '"';
  }
  return s + "\n";
}

ordered_json group_json(const DiagonalGroup& G) {
  ordered_json j;
  j["order"] = G.order();
  j["structure"] = format_structure(G.structure());
  std::vector<std::string> gens;
  for (const auto& g : G.generators()) gens.push_back(format_phase_compact(g));
  j["generators"] = gens;
  return j;
}

std::string gens_text(const DiagonalGroup& G) {
  return G.generators().empty() ? std::string("trivial") : format_generators(G);
}

std::string exponent_list_text(const ExponentList& e) {
  std::string s = "{";
  bool first = true;
  for (const auto& [q, m] : e.multiplicity) {
    s += (first ? "" : ", ") + to_string(q) + (m > 1 ? "^" + std::to_string(m) : "");
    first = false;
  }
  return s + "}";
}

DiagonalGroup or_trivial(const lgm_group* H, const Polynomial& f) {
  return H ? H->G : trivial_group(f.E);
}

void pad(std::ostringstream& os, const std::string& label) {
  os << label << std::string(label.size() < 15 ? 15 - label.size() : 1, ' ');
}

std::string type_text(const Polynomial& f) {
  const TypeTag3 t = classify3(f);
  return std::string(type_name(t.tag)) + "(" + std::to_string(t.params[0]) + "," + std::to_string(t.params[1]) +
         "," + std::to_string(t.params[2]) + ")";
}

}  // namespace

extern "C" {

LGM_API const char* lgm_version(void) { return "1.0.0"; }

LGM_API const char* lgm_last_error(void) { return last_error.c_str(); }

LGM_API const char* lgm_status_name(lgm_status status) {
  if (status == LGM_OK) return "Ok";
  if (status == LGM_ERR_NULL_ARGUMENT) return "NullArgument";
  if (status == LGM_ERR_INTERNAL) return "Internal";
  if (status >= LGM_ERR_SYNTAX && status <= LGM_ERR_INVALID_ARGUMENT)
    return error_name(static_cast<ErrorCode>(static_cast<int>(status)));
  return "Unknown";
}

LGM_API void lgm_string_free(char* s) { std::free(s); }

LGM_API lgm_status lgm_parse_format(const char* name, lgm_format* out) {
  if (!name || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    switch (parse_format(name)) {
      case Format::Text: *out = LGM_FORMAT_TEXT; break;
      case Format::Json: *out = LGM_FORMAT_JSON; break;
      case Format::Csv: *out = LGM_FORMAT_CSV; break;
    }
  });
}

LGM_API lgm_status lgm_poly_parse(const char* text, int nvars, lgm_poly** out) {
  if (!text || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    std::optional<int> n;
    if (nvars > 0) n = nvars;
    *out = new lgm_poly{parse_polynomial(text, n)};
  });
}

LGM_API void lgm_poly_free(lgm_poly* f) { delete f; }

LGM_API int lgm_poly_nvars(const lgm_poly* f) { return f ? f->f.n : 0; }

LGM_API int lgm_poly_unit_coefficients(const lgm_poly* f) { return f && f->f.unit_coefficients() ? 1 : 0; }

LGM_API lgm_status lgm_poly_exponent(const lgm_poly* f, int row, int col, int64_t* out) {
  if (!f || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    if (row < 0 || col < 0 || row >= f->f.n || col >= f->f.n)
      throw Error(ErrorCode::InvalidArgument, "exponent index out of range");
    *out = f->f.E[row][col];
  });
}

LGM_API lgm_status lgm_poly_transpose(const lgm_poly* f, lgm_poly** out) {
  if (!f || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] { *out = new lgm_poly{transpose(f->f)}; });
}

LGM_API lgm_status lgm_poly_to_string(const lgm_poly* f, char** out) {
  if (!f || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] { *out = dup(format_polynomial(f->f)); });
}

LGM_API lgm_status lgm_poly_weights(const lgm_poly* f, int reduced, int64_t* w, int64_t* d, int64_t* cf) {
  if (!f || !w || !d) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    const WeightSystem ws = reduced ? reduced_weights(f->f) : canonical_weights(f->f);
    std::copy(ws.w.begin(), ws.w.end(), w);
    *d = ws.d;
    if (cf) *cf = lgm::cf(f->f);
  });
}

LGM_API lgm_status lgm_group_parse(const lgm_poly* f, const char* spec, lgm_group** out) {
  if (!f || !spec || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] { *out = new lgm_group{parse_group_spec(f->f, spec)}; });
}

LGM_API void lgm_group_free(lgm_group* G) { delete G; }

LGM_API int64_t lgm_group_order(const lgm_group* G) { return G ? G->G.order() : 0; }

LGM_API lgm_status lgm_group_to_string(const lgm_group* G, char** out) {
  if (!G || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] { *out = dup(format_generators(G->G)); });
}

LGM_API lgm_status lgm_group_junior(const lgm_group* G, int64_t* out) {
  if (!G || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] { *out = junior_count(G->G); });
}

LGM_API lgm_status lgm_group_dual(const lgm_poly* f, const lgm_group* G, lgm_group** out) {
  if (!f || !G || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] { *out = new lgm_group{dual_group(f->f, G->G)}; });
}

LGM_API lgm_status lgm_mirror(const lgm_poly* f, const lgm_group* G, lgm_mirror_values* out) {
  if (!f || !G || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    VerifyOptions o;
    o.series = false;
    const MirrorReport r = verify_mirror(f->f, G->G, o);
    if (r.dolgachev.size() > LGM_MAX_ORDERS || r.gabrielov.size() > LGM_MAX_ORDERS)
      throw Error(ErrorCode::InvalidArgument, "too many orbifold points for lgm_mirror_values");
    *out = lgm_mirror_values{};
    out->genus = r.genus;
    out->junior = r.junior;
    out->stringy_euler = r.stringy_euler;
    out->milnor = r.milnor;
    std::copy(r.dolgachev.begin(), r.dolgachev.end(), out->dolgachev);
    out->n_dolgachev = r.dolgachev.size();
    std::copy(r.gabrielov.begin(), r.gabrielov.end(), out->gabrielov);
    out->n_gabrielov = r.gabrielov.size();
    std::copy(r.gamma_prime.begin(), r.gamma_prime.end(), out->gamma_prime);
    const MirrorChecks c = r.checks();
    out->a_eq_gamma = c.a_eq_gamma;
    out->g_eq_j = c.g_eq_j;
    out->e_eq_mu = c.e_eq_mu;
  });
}

LGM_API lgm_status lgm_report_analyze(const lgm_poly* f, const lgm_group* G, lgm_format fmt, char** out,
                                      int* verdict) {
  if (!f || !G || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    const MirrorReport r = verify_mirror(f->f, G->G);
    *out = dup(emit_report(r, to_format(fmt)));
    if (verdict) *verdict = r.checks().all() ? 0 : 1;
  });
}

LGM_API lgm_status lgm_report_transpose(const lgm_poly* f, lgm_format fmt, char** out) {
  if (!f || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    const Polynomial ft = transpose(f->f);
    std::ostringstream os;
    switch (to_format(fmt)) {
      case Format::Json: {
        ordered_json j;
        j["input"] = format_polynomial(f->f);
        j["exponent_matrix"] = f->f.E;
        j["transpose"] = format_polynomial(ft);
        j["transpose_matrix"] = ft.E;
        os << j.dump(2) << "\n";
        break;
      }
      case Format::Csv:
        os << csv_line({"input", "transpose"}) << csv_line({format_polynomial(f->f), format_polynomial(ft)});
        break;
      case Format::Text:
        pad(os, "f");
        os << format_polynomial(f->f) << "\n";
        pad(os, "E");
        os << format_matrix(f->f.E) << "\n";
        pad(os, "f^T");
        os << format_polynomial(ft) << "\n";
        pad(os, "E^T");
        os << format_matrix(ft.E) << "\n";
        break;
    }
    *out = dup(os.str());
  });
}

LGM_API lgm_status lgm_report_dual(const lgm_poly* f, const lgm_group* G, lgm_format fmt, char** out) {
  if (!f || !G || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    const DiagonalGroup GT = dual_group(f->f, G->G);
    std::ostringstream os;
    switch (to_format(fmt)) {
      case Format::Json: {
        ordered_json j;
        j["input"] = format_polynomial(f->f);
        j["group"] = group_json(G->G);
        j["transpose"] = format_polynomial(transpose(f->f));
        j["dual"] = group_json(GT);
        j["dual_junior"] = junior_count(GT);
        os << j.dump(2) << "\n";
        break;
      }
      case Format::Csv:
        os << csv_line({"input", "group_order", "group_generators", "dual_order", "dual_structure",
                        "dual_generators", "dual_junior"})
           << csv_line({format_polynomial(f->f), std::to_string(G->G.order()), format_generators(G->G),
                        std::to_string(GT.order()), format_structure(GT.structure()), format_generators(GT),
                        std::to_string(junior_count(GT))});
        break;
      case Format::Text:
        pad(os, "f");
        os << format_polynomial(f->f) << "\n";
        pad(os, "G");
        os << "order " << G->G.order() << "  " << format_structure(G->G.structure()) << "  generated by "
           << gens_text(G->G) << "\n";
        pad(os, "f^T");
        os << format_polynomial(transpose(f->f)) << "\n";
        pad(os, "G^T");
        os << "order " << GT.order() << "  " << format_structure(GT.structure()) << "  generated by "
           << gens_text(GT) << "\n";
        pad(os, "junior(G^T)");
        os << junior_count(GT) << "\n";
        break;
    }
    *out = dup(os.str());
  });
}

LGM_API lgm_status lgm_report_dolgachev(const lgm_poly* f, const lgm_group* G, lgm_format fmt, char** out) {
  if (!f || !G || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    const DolgachevData d = dolgachev(f->f, G->G);
    const CurveInvariants c = curve_invariants(f->f, G->G);
    std::ostringstream os;
    switch (to_format(fmt)) {
      case Format::Json: {
        ordered_json j;
        j["input"] = format_polynomial(f->f);
        j["group"] = group_json(G->G);
        j["alpha_prime"] = dolgachev_gfin(f->f);
        for (const auto& e : d.per_coordinate)
          j["per_coordinate"].push_back({{"alpha_prime", e.alpha_prime},
                                         {"k_order", e.k_order},
                                         {"value", to_string(e.value)},
                                         {"multiplicity", e.multiplicity}});
        j["dolgachev"] = d.multiset;
        j["genus"] = c.genus;
        j["stringy_euler"] = c.e_st;
        os << j.dump(2) << "\n";
        break;
      }
      case Format::Csv:
        os << csv_line({"input", "group_order", "dolgachev", "genus", "stringy_euler"})
           << csv_line({format_polynomial(f->f), std::to_string(G->G.order()), format_multiset(d.multiset),
                        std::to_string(c.genus), std::to_string(c.e_st)});
        break;
      case Format::Text: {
        pad(os, "f");
        os << format_polynomial(f->f) << "\n";
        pad(os, "G");
        os << "order " << G->G.order() << "  generated by " << gens_text(G->G) << "\n";
        for (std::size_t i = 0; i < d.per_coordinate.size(); ++i) {
          const auto& e = d.per_coordinate[i];
          pad(os, "x" + std::to_string(i + 1));
          os << "alpha' " << e.alpha_prime << "  |K| " << e.k_order << "  value " << to_string(e.value)
             << "  repeated " << e.multiplicity << "\n";
        }
        pad(os, "Dolgachev");
        os << format_multiset(d.multiset) << "\n";
        pad(os, "genus");
        os << c.genus << "\n";
        pad(os, "e_st");
        os << c.e_st << "\n";
        break;
      }
    }
    *out = dup(os.str());
  });
}

LGM_API lgm_status lgm_report_gabrielov(const lgm_poly* f, const lgm_group* H, lgm_format fmt, char** out) {
  if (!f || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    const DiagonalGroup G = or_trivial(H, f->f);
    const CuspPolynomial cusp = gabrielov_prime(f->f);
    const GabrielovData g = gabrielov(cusp.gamma_prime, G);
    std::ostringstream os;
    switch (to_format(fmt)) {
      case Format::Json: {
        ordered_json j;
        j["input"] = format_polynomial(f->f);
        j["group"] = group_json(G);
        j["gamma_prime"] = cusp.gamma_prime;
        j["delta"] = cusp.delta;
        for (const auto& e : g.per_coordinate)
          j["per_coordinate"].push_back({{"gamma_tilde", to_string(e.gamma_tilde)}, {"h_order", e.h_order}});
        j["gabrielov"] = g.multiset;
        j["junior"] = g.j;
        j["milnor"] = g.milnor;
        os << j.dump(2) << "\n";
        break;
      }
      case Format::Csv:
        os << csv_line({"input", "group_order", "gamma_prime", "delta", "gabrielov", "junior", "milnor"})
           << csv_line({format_polynomial(f->f), std::to_string(G.order()),
                        format_multiset({cusp.gamma_prime.begin(), cusp.gamma_prime.end()}),
                        std::to_string(cusp.delta), format_multiset(g.multiset), std::to_string(g.j),
                        std::to_string(g.milnor)});
        break;
      case Format::Text: {
        pad(os, "f");
        os << format_polynomial(f->f) << "\n";
        pad(os, "cusp");
        os << "T_{" << cusp.gamma_prime[0] << "," << cusp.gamma_prime[1] << "," << cusp.gamma_prime[2]
           << "}  Delta " << cusp.delta << "\n";
        pad(os, "group");
        os << "order " << G.order() << "  generated by " << gens_text(G) << "\n";
        for (std::size_t i = 0; i < g.per_coordinate.size(); ++i) {
          pad(os, "x" + std::to_string(i + 1));
          os << "gamma~ " << to_string(g.per_coordinate[i].gamma_tilde) << "  |H| " << g.per_coordinate[i].h_order
             << "\n";
        }
        pad(os, "Gabrielov");
        os << format_multiset(g.multiset) << "\n";
        pad(os, "j");
        os << g.j << "\n";
        pad(os, "mu");
        os << g.milnor << "\n";
        break;
      }
    }
    *out = dup(os.str());
  });
}

LGM_API lgm_status lgm_report_charpoly(const lgm_poly* f, const lgm_group* H, lgm_format fmt, char** out) {
  if (!f || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    std::ostringstream os;
    const Format form = to_format(fmt);
    if (!H) {
      const QhCharPoly q = char_poly_qh(f->f);
      const Int mu = milnor_number_qh(f->f);
      if (form == Format::Json) {
        ordered_json j;
        j["input"] = format_polynomial(f->f);
        ordered_json ex = ordered_json::object();
        for (const auto& [e, m] : q.exponents.multiplicity) ex[to_string(e)] = m;
        j["exponents"] = ex;
        j["char_poly"] = cyclo_to_json(q.cyclo);
        j["milnor"] = mu;
        os << j.dump(2) << "\n";
      } else if (form == Format::Csv) {
        os << csv_line({"input", "char_poly", "milnor"})
           << csv_line({format_polynomial(f->f), q.cyclo.to_string(), std::to_string(mu)});
      } else {
        pad(os, "f");
        os << format_polynomial(f->f) << "\n";
        pad(os, "exponents");
        os << exponent_list_text(q.exponents) << "\n";
        pad(os, "char poly");
        os << q.cyclo.to_string() << "\n";
        pad(os, "expanded");
        os << format_poly(q.cyclo.expand()) << "\n";
        pad(os, "mu");
        os << mu << "\n";
      }
    } else {
      const LefschetzTable L = lefschetz_numbers(f->f, H->G);
      const CycloVector v = moebius_invert(L);
      if (form == Format::Json) {
        ordered_json j;
        j["input"] = format_polynomial(f->f);
        j["group"] = group_json(H->G);
        j["lefschetz"] = L.values;
        j["char_poly"] = cyclo_to_json(v);
        j["degree"] = v.degree();
        os << j.dump(2) << "\n";
      } else if (form == Format::Csv) {
        os << csv_line({"input", "group_order", "char_poly", "degree"})
           << csv_line({format_polynomial(f->f), std::to_string(H->G.order()), v.to_string(),
                        std::to_string(v.degree())});
      } else {
        pad(os, "f");
        os << format_polynomial(f->f) << "\n";
        pad(os, "group");
        os << "order " << H->G.order() << "  generated by " << gens_text(H->G) << "\n";
        pad(os, "L_1..L_d");
        for (std::size_t k = 0; k < L.values.size(); ++k) os << (k ? " " : "") << L.values[k];
        os << "\n";
        pad(os, "char poly");
        os << v.to_string() << "\n";
        pad(os, "degree");
        os << v.degree() << "\n";
      }
    }
    *out = dup(os.str());
  });
}

LGM_API lgm_status lgm_report_poincare(const lgm_poly* f, const lgm_group* G, lgm_format fmt, char** out,
                                       int* verdict) {
  if (!f || !G || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    const CycloVector p = poincare_series(f->f, G->G);
    const CycloVector s = psi(f->f, G->G);
    const bool is_g0 = G->G == g0_group(f->f.E);
    std::optional<CycloVector> table;
    std::optional<PoincareVerdict> thm;
    if (is_g0 && f->f.n == 3) {
      table = table2_psi(f->f);
      thm = verify_poincare_theorem(f->f);
    }
    const bool ok = (!table || *table == s) && (!thm || thm->status != PoincareStatus::NotEqual);
    if (verdict) *verdict = ok ? 0 : 1;
    std::ostringstream os;
    switch (to_format(fmt)) {
      case Format::Json: {
        ordered_json j;
        j["input"] = format_polynomial(f->f);
        j["group"] = group_json(G->G);
        j["poincare"] = cyclo_to_json(p);
        j["psi"] = cyclo_to_json(s);
        j["table2"] = table ? cyclo_to_json(*table) : ordered_json(nullptr);
        if (thm) {
          j["theorem"] = {{"status", status_name(thm->status)}, {"reason", thm->reason}};
          if (thm->status != PoincareStatus::NotApplicable) j["theorem"]["phi"] = cyclo_to_json(thm->phi);
        } else {
          j["theorem"] = nullptr;
        }
        os << j.dump(2) << "\n";
        break;
      }
      case Format::Csv:
        os << csv_line({"input", "group_order", "poincare", "psi", "table2", "theorem"})
           << csv_line({format_polynomial(f->f), std::to_string(G->G.order()), p.to_string(), s.to_string(),
                        table ? table->to_string() : "", thm ? status_name(thm->status) : ""});
        break;
      case Format::Text:
        pad(os, "f");
        os << format_polynomial(f->f) << "\n";
        pad(os, "G");
        os << "order " << G->G.order() << "  generated by " << gens_text(G->G) << "\n";
        pad(os, "poincare");
        os << p.to_string() << "\n";
        pad(os, "psi");
        os << s.to_string() << "\n";
        if (table) {
          pad(os, "table");
          os << table->to_string() << (*table == s ? "  (agrees)" : "  (DIFFERS)") << "\n";
        }
        if (thm) {
          pad(os, "theorem");
          os << status_name(thm->status);
          if (!thm->reason.empty()) os << "  " << thm->reason;
          os << "\n";
          if (thm->status != PoincareStatus::NotApplicable) {
            pad(os, "phi(f^T,G0^T)");
            os << thm->phi.to_string() << "\n";
          }
        }
        break;
    }
    *out = dup(os.str());
  });
}

LGM_API lgm_status lgm_verify_catalog(lgm_format fmt, char** out, int* verdict) {
  if (!out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    const VerificationSummary s = run_catalog_verification();
    *out = dup(emit_summary(s, to_format(fmt)));
    if (verdict) *verdict = s.exit_code();
  });
}

LGM_API lgm_status lgm_verify_corpus(int64_t max_det, int64_t max_exp, const char* types, unsigned threads,
                                     lgm_format fmt, char** out, int* verdict) {
  if (!out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    CorpusBounds b;
    b.max_det = max_det;
    b.max_exp = max_exp;
    b.type_mask = parse_type_mask(types ? types : "all");
    const VerificationSummary s = run_corpus_verification(b, {}, threads);
    *out = dup(emit_summary(s, to_format(fmt)));
    if (verdict) *verdict = s.exit_code();
  });
}

LGM_API lgm_status lgm_catalog_list(lgm_format fmt, char** out) {
  if (!out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    std::ostringstream os;
    const auto& cat = builtin_catalog();
    switch (to_format(fmt)) {
      case Format::Json: {
        ordered_json j = ordered_json::array();
        for (const auto& e : cat) {
          ordered_json x;
          x["id"] = e.id;
          x["polynomial"] = e.polynomial;
          x["given"] = e.given;
          x["side"] = e.side;
          x["group"] = e.group_spec;
          for (const auto& ex : e.expected)
            x["expected"].push_back({{"key", ex.key}, {"value", ex.value}, {"source", ex.source}, {"quote", ex.quote}});
          if (!e.notes.empty()) x["notes"] = e.notes;
          j.push_back(x);
        }
        os << j.dump(2) << "\n";
        break;
      }
      case Format::Csv:
        os << csv_line({"id", "polynomial", "given", "side", "group", "expectations"});
        for (const auto& e : cat)
          os << csv_line({e.id, e.polynomial, e.given, e.side, e.group_spec, std::to_string(e.expected.size())});
        break;
      case Format::Text:
        for (const auto& e : cat) {
          os << e.id << std::string(e.id.size() < 22 ? 22 - e.id.size() : 1, ' ') << e.polynomial;
          if (e.given == "fT") os << " (as f^T)";
          os << "  group " << e.group_spec;
          if (e.side == "dual") os << " (dual side)";
          os << "  " << e.expected.size() << " expectations\n";
        }
        break;
    }
    *out = dup(os.str());
  });
}

LGM_API lgm_status lgm_catalog_check(const char* id, lgm_format fmt, char** out, int* verdict) {
  if (!id || !out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    const CatalogEntry& e = find_entry(id);
    const EntryResult r = check_entry(e);
    if (verdict) *verdict = r.ok() ? 0 : 1;
    std::ostringstream os;
    switch (to_format(fmt)) {
      case Format::Json: {
        ordered_json j;
        j["id"] = e.id;
        j["ok"] = r.ok();
        for (const auto& x : r.results)
          j["expectations"].push_back({{"key", x.expected.key},
                                       {"expected", x.expected.value},
                                       {"actual", x.actual},
                                       {"source", x.expected.source},
                                       {"pass", x.pass}});
        j["report"] = to_json(r.report);
        os << j.dump(2) << "\n";
        break;
      }
      case Format::Csv:
        os << csv_line({"id", "key", "expected", "actual", "source", "pass"});
        for (const auto& x : r.results)
          os << csv_line({e.id, x.expected.key, x.expected.value.dump(), x.actual.dump(), x.expected.source,
                          x.pass ? "true" : "false"});
        break;
      case Format::Text:
        os << "entry          " << e.id << "\n";
        if (!e.notes.empty()) os << "notes          " << e.notes << "\n";
        for (const auto& x : r.results)
          os << (x.pass ? "ok   " : "FAIL ") << x.expected.key << "  expected " << x.expected.value.dump() << " ["
             << x.expected.source << "]  got " << x.actual.dump() << "\n";
        os << emit_report(r.report, Format::Text);
        break;
    }
    *out = dup(os.str());
  });
}

LGM_API lgm_status lgm_enumerate(int64_t max_det, int64_t max_exp, const char* types, int with_reports,
                                 lgm_format fmt, char** out) {
  if (!out) return LGM_ERR_NULL_ARGUMENT;
  return guard([&] {
    CorpusBounds b;
    b.max_det = max_det;
    b.max_exp = max_exp;
    b.type_mask = parse_type_mask(types ? types : "all");
    const Format form = to_format(fmt);
    std::ostringstream os;
    ordered_json arr = ordered_json::array();
    if (with_reports) {
      VerifyOptions o;
      o.series = false;
      if (form == Format::Csv) os << csv_header() << "\n";
      enumerate_corpus(b, [&](const Polynomial& f, const DiagonalGroup& G) {
        const MirrorReport r = verify_mirror(f, G, o);
        if (form == Format::Csv) os << csv_row(r) << "\n";
        else if (form == Format::Json) arr.push_back(to_json(r));
        else os << emit_report(r, Format::Text) << "\n";
      });
    } else {
      if (form == Format::Csv) os << csv_line({"polynomial", "type", "det", "cf", "intermediate_groups"});
      for (const auto& f : enumerate_polynomials(b)) {
        const Int groups = static_cast<Int>(intermediate_subgroups(f).size());
        const std::string det = std::to_string(std::abs(determinant(f.E)));
        if (form == Format::Csv)
          os << csv_line({format_polynomial(f), type_text(f), det, std::to_string(cf(f)), std::to_string(groups)});
        else if (form == Format::Json)
          arr.push_back({{"polynomial", format_polynomial(f)},
                         {"type", type_text(f)},
                         {"det", std::abs(determinant(f.E))},
                         {"cf", cf(f)},
                         {"intermediate_groups", groups}});
        else
          os << format_polynomial(f) << "  " << type_text(f) << "  det " << det << "  c_f " << cf(f) << "  groups "
             << groups << "\n";
      }
    }
    if (form == Format::Json) os << arr.dump(2) << "\n";
    *out = dup(os.str());
  });
}

}  // extern "C"
