#include "lgm/verification.hpp"

#include "lgm/error.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace lgm {

namespace {

const char* const kChecks[] = {"a_eq_gamma", "g_eq_j", "e_eq_mu", "strange", "table2", "poincare"};

VerificationSummary make_summary(std::string scope, bool with_expectations) {
  VerificationSummary s;
  s.scope = std::move(scope);
  for (const char* c : kChecks) s.tallies.emplace_back(c, CheckTally{});
  if (with_expectations) s.tallies.emplace_back("expectations", CheckTally{});
  return s;
}

std::string group_label(const MirrorReport& r) {
  std::string s = "|G|=" + std::to_string(r.group.order);
  for (const auto& g : r.group.generators) s += " " + g;
  return s;
}

// Checks that depend on f only.
struct PolyChecks {
  bool strange = false;
  std::string strange_detail;
  bool table2 = false;
  std::string table2_detail;
  PoincareStatus poincare = PoincareStatus::NotApplicable;
  std::string poincare_detail;
};

PolyChecks poly_checks(const Polynomial& f, const VerifyOptions& opts) {
  PolyChecks c;
  const DiagonalGroup G0 = g0_group(f.E);
  const auto orbits = orbit_invariants(reduced_weights(f));
  const Triple alpha = opts.alpha_prime_override ? opts.alpha_prime_override(f) : dolgachev_gfin(f);
  std::vector<Int> a;
  try {
    a = dolgachev(f, G0, alpha).multiset;
  } catch (const Error& e) {
    c.strange_detail = e.what();
  }
  c.strange = c.strange_detail.empty() && a == orbits;
  if (!c.strange && c.strange_detail.empty())
    c.strange_detail = "orbits " + format_multiset(orbits) + " vs A " + format_multiset(a);

  const CycloVector t2 = table2_psi(f), ps = psi(f, G0);
  c.table2 = t2 == ps;
  if (!c.table2) c.table2_detail = "table " + t2.to_string() + " vs psi " + ps.to_string();

  const PoincareVerdict v = verify_poincare_theorem(f);
  c.poincare = v.status;
  if (v.status == PoincareStatus::NotEqual) c.poincare_detail = "psi " + v.psi.to_string() + " vs phi " + v.phi.to_string();
  return c;
}

void record_poly(VerificationSummary& s, const std::string& item, const PolyChecks& c) {
  auto bump = [&](const char* name, bool ok, const std::string& detail) {
    auto& t = s.tally(name);
    if (ok) ++t.pass;
    else {
      ++t.fail;
      s.failures.push_back({item, name, detail});
    }
  };
  bump("strange", c.strange, c.strange_detail);
  bump("table2", c.table2, c.table2_detail);
  if (c.poincare == PoincareStatus::NotApplicable) ++s.tally("poincare").not_applicable;
  else bump("poincare", c.poincare == PoincareStatus::Equal, c.poincare_detail);
}

void record_mirror(VerificationSummary& s, const MirrorReport& r) {
  const MirrorChecks c = r.checks();
  const std::string item = r.input + " " + group_label(r);
  auto bump = [&](const char* name, bool ok, const std::string& detail) {
    auto& t = s.tally(name);
    if (ok) ++t.pass;
    else {
      ++t.fail;
      s.failures.push_back({item, name, detail});
    }
  };
  bump("a_eq_gamma", c.a_eq_gamma, "A " + format_multiset(r.dolgachev) + " vs Gamma " + format_multiset(r.gabrielov));
  bump("g_eq_j", c.g_eq_j, "g " + std::to_string(r.genus) + " vs j " + std::to_string(r.junior));
  bump("e_eq_mu", c.e_eq_mu, "e_st " + std::to_string(r.stringy_euler) + " vs mu " + std::to_string(r.milnor));
}

}  // namespace

CheckTally& VerificationSummary::tally(const std::string& name) {
  for (auto& [n, t] : tallies)
    if (n == name) return t;
  throw Error(ErrorCode::InvalidArgument, "unknown check " + name);
}

const CheckTally& VerificationSummary::tally(const std::string& name) const {
  return const_cast<VerificationSummary*>(this)->tally(name);
}

Int VerificationSummary::failure_count() const {
  Int n = 0;
  for (const auto& [name, t] : tallies) n += t.fail;
  return n;
}

VerificationSummary run_catalog_verification(const VerifyOptions& opts) {
  VerificationSummary s = make_summary("catalog", true);
  VerifyOptions o = opts;
  o.series = false;
  for (const auto& e : builtin_catalog()) {
    const EntryResult r = check_entry(e, o);
    ++s.polynomials;
    ++s.pairs;
    record_mirror(s, r.report);
    for (const auto& x : r.results) {
      auto& t = s.tally("expectations");
      if (x.pass) ++t.pass;
      else {
        ++t.fail;
        s.failures.push_back({e.id, "expectations",
                              x.expected.key + " expected " + x.expected.value.dump() + " [" + x.expected.source +
                                  "] got " + x.actual.dump()});
      }
    }
    record_poly(s, e.id + " " + r.report.input, poly_checks(resolve(e).f, o));
  }
  return s;
}

VerificationSummary run_corpus_verification(const CorpusBounds& bounds, const VerifyOptions& opts,
                                            unsigned threads) {
  std::ostringstream scope;
  scope << "corpus(max_det=" << bounds.max_det << ", max_exp=" << bounds.max_exp << ")";
  VerificationSummary s = make_summary(scope.str(), false);
  const std::vector<Polynomial> polys = enumerate_polynomials(bounds);
  VerifyOptions o = opts;
  o.series = false;

  struct Result {
    std::vector<MirrorReport> reports;
    PolyChecks checks;
    std::string error;
  };
  std::vector<Result> results(polys.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < polys.size();) {
      try {
        for (const auto& G : intermediate_subgroups(polys[i])) results[i].reports.push_back(verify_mirror(polys[i], G, o));
        results[i].checks = poly_checks(polys[i], o);
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < polys.size(); ++i) {
    ++s.polynomials;
    const std::string item = format_polynomial(polys[i]);
    if (!results[i].error.empty()) {
      ++s.tally("a_eq_gamma").fail;
      s.failures.push_back({item, "error", results[i].error});
      continue;
    }
    for (const auto& r : results[i].reports) {
      ++s.pairs;
      record_mirror(s, r);
    }
    record_poly(s, item, results[i].checks);
  }
  return s;
}

std::string emit_summary(const VerificationSummary& s, Format format, std::size_t max_failures) {
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["scope"] = s.scope;
    j["polynomials"] = s.polynomials;
    j["pairs"] = s.pairs;
    for (const auto& [name, t] : s.tallies)
      j["checks"][name] = {{"pass", t.pass}, {"fail", t.fail}, {"not_applicable", t.not_applicable}};
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : s.failures) j["failures"].push_back({{"item", f.item}, {"check", f.check}, {"detail", f.detail}});
    j["exit_code"] = s.exit_code();
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "check,pass,fail,not_applicable\n";
    for (const auto& [name, t] : s.tallies) os << name << ',' << t.pass << ',' << t.fail << ',' << t.not_applicable << '\n';
    return os.str();
  }
  os << "scope        " << s.scope << "\n"
     << "items        " << s.polynomials << " polynomials, " << s.pairs << " (f,G) pairs\n";
  for (const auto& [name, t] : s.tallies) {
    os << name << std::string(name.size() < 13 ? 13 - name.size() : 1, ' ') << "pass " << t.pass << "  fail "
       << t.fail;
    if (t.not_applicable) os << "  n/a " << t.not_applicable;
    os << "\n";
  }
  for (std::size_t i = 0; i < s.failures.size() && i < max_failures; ++i)
    os << "FAIL [" << s.failures[i].check << "] " << s.failures[i].item << ": " << s.failures[i].detail << "\n";
  if (s.failures.size() > max_failures) os << "... " << s.failures.size() - max_failures << " more failures\n";
  os << (s.exit_code() == 0 ? "result       all checks passed\n" : "result       FAILURES\n");
  return os.str();
}

}  // namespace lgm
