// Command line front end.  Talks to the library only through lgmirror.h.

#include "lgmirror.h"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <optional>
#include <string>

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2 };

struct PolyDeleter {
  void operator()(lgm_poly* p) const { lgm_poly_free(p); }
};
struct GroupDeleter {
  void operator()(lgm_group* g) const { lgm_group_free(g); }
};
using PolyPtr = std::unique_ptr<lgm_poly, PolyDeleter>;
using GroupPtr = std::unique_ptr<lgm_group, GroupDeleter>;

struct Failed {
  int code;
};

void check(lgm_status s) {
  if (s == LGM_OK) return;
  std::fprintf(stderr, "error [%s]: %s\n", lgm_status_name(s), lgm_last_error());
  throw Failed{kInvalidInput};
}

void print(char* text) {
  std::fputs(text, stdout);
  lgm_string_free(text);
}

PolyPtr load_poly(const std::string& text, int nvars) {
  lgm_poly* f = nullptr;
  check(lgm_poly_parse(text.c_str(), nvars, &f));
  PolyPtr p(f);
  if (!lgm_poly_unit_coefficients(f))
    std::fprintf(stderr, "note: coefficients are ignored; every invariant depends on the exponents only\n");
  return p;
}

GroupPtr load_group(const lgm_poly* f, const std::string& spec) {
  lgm_group* g = nullptr;
  check(lgm_group_parse(f, spec.c_str(), &g));
  return GroupPtr(g);
}

struct Options {
  bool json = false;
  std::string format = "text";
  std::string poly;
  int nvars = 0;
  std::optional<std::string> group;

  bool catalog = false;
  bool corpus = false;
  bool list = false;
  bool reports = false;
  std::string id;
  long long max_det = 300;
  long long max_exp = 300;
  std::string types = "all";
  unsigned threads = 0;

  lgm_format fmt() const {
    if (json) return LGM_FORMAT_JSON;
    lgm_format f;
    check(lgm_parse_format(format.c_str(), &f));
    return f;
  }
};

void add_poly(CLI::App* cmd, Options& o, bool with_group) {
  cmd->add_option("polynomial", o.poly, "e.g. \"x^2+y^3+z^7\" or \"x^2y+y^3+z^5\"")->required();
  cmd->add_option("--nvars", o.nvars, "number of variables (default: inferred)");
  if (with_group) cmd->add_option("-g,--group", o.group, "G0, Gfin, trivial, index:k, G0+<gens> or 1/r(a,b,c);...");
}

void add_bounds(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-det", o.max_det, "bound on |det E|")->capture_default_str();
  cmd->add_option("--max-exp", o.max_exp, "bound on every exponent")->capture_default_str();
  cmd->add_option("--types", o.types, "comma separated subset of I,II,III,IV,V")->capture_default_str();
}

int run(CLI::App& app, Options& o) {
  const std::string name = app.get_subcommands().front()->get_name();
  char* out = nullptr;
  int verdict = 0;

  if (name == "verify") {
    if (o.catalog == o.corpus) {
      std::fprintf(stderr, "error: choose exactly one of --catalog and --corpus\n");
      return kInvalidInput;
    }
    if (o.catalog) check(lgm_verify_catalog(o.fmt(), &out, &verdict));
    else check(lgm_verify_corpus(o.max_det, o.max_exp, o.types.c_str(), o.threads, o.fmt(), &out, &verdict));
    print(out);
    return verdict ? kVerificationFailed : kOk;
  }
  if (name == "catalog") {
    if (o.list || o.id.empty()) {
      check(lgm_catalog_list(o.fmt(), &out));
      print(out);
      return kOk;
    }
    check(lgm_catalog_check(o.id.c_str(), o.fmt(), &out, &verdict));
    print(out);
    return verdict ? kVerificationFailed : kOk;
  }
  if (name == "enumerate") {
    check(lgm_enumerate(o.max_det, o.max_exp, o.types.c_str(), o.reports, o.fmt(), &out));
    print(out);
    return kOk;
  }

  const PolyPtr f = load_poly(o.poly, o.nvars);
  if (name == "transpose") {
    check(lgm_report_transpose(f.get(), o.fmt(), &out));
  } else if (name == "gabrielov" || name == "charpoly") {
    // These act on a different space when a group is given, so there is no default group.
    GroupPtr H;
    if (o.group) H = load_group(f.get(), *o.group);
    auto fn = name == "gabrielov" ? lgm_report_gabrielov : lgm_report_charpoly;
    check(fn(f.get(), H.get(), o.fmt(), &out));
  } else {
    const GroupPtr G = load_group(f.get(), o.group.value_or("G0"));
    if (name == "analyze") check(lgm_report_analyze(f.get(), G.get(), o.fmt(), &out, &verdict));
    else if (name == "dual") check(lgm_report_dual(f.get(), G.get(), o.fmt(), &out));
    else if (name == "dolgachev") check(lgm_report_dolgachev(f.get(), G.get(), o.fmt(), &out));
    else check(lgm_report_poincare(f.get(), G.get(), o.fmt(), &out, &verdict));
  }
  print(out);
  return verdict ? kVerificationFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and mirror checks for orbifold Landau-Ginzburg models of invertible polynomials"};
  app.set_version_flag("--version", std::string(lgm_version()));
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "shorthand for --format json");
  app.add_option("--format", o.format, "text, json or csv")->capture_default_str();
  // Let the global flags appear after the subcommand as well.
  app.fallthrough();

  add_poly(app.add_subcommand("analyze", "full mirror report for (f, G)"), o, true);
  add_poly(app.add_subcommand("transpose", "Berglund-Huebsch transpose f^T"), o, false);
  add_poly(app.add_subcommand("dual", "dual group G^T acting on f^T"), o, true);
  add_poly(app.add_subcommand("dolgachev", "Dolgachev numbers, genus and stringy Euler number of (f, G)"), o, true);
  add_poly(app.add_subcommand("gabrielov", "Gabrielov numbers of the cusp attached to f, optionally modulo a group"), o,
           true);
  add_poly(app.add_subcommand("charpoly", "characteristic polynomial of monodromy, equivariant with --group"), o,
           true);
  add_poly(app.add_subcommand("poincare", "Poincare series and its comparison with the mirror side"), o, true);

  CLI::App* verify = app.add_subcommand("verify", "run the mirror checks over the catalog or a corpus");
  verify->add_flag("--catalog", o.catalog, "the built-in catalog of examples");
  verify->add_flag("--corpus", o.corpus, "every invertible polynomial within the bounds, with every group");
  verify->add_option("--threads", o.threads, "worker threads (0 = automatic)");
  add_bounds(verify, o);

  CLI::App* catalog = app.add_subcommand("catalog", "list catalog entries or check one");
  catalog->add_flag("--list", o.list, "list entries");
  catalog->add_option("id", o.id, "entry to check");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list the corpus");
  enumerate->add_flag("--reports", o.reports, "emit a mirror report for each (f, G)");
  add_bounds(enumerate, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidInput;
  }
  try {
    return run(app, o);
  } catch (const Failed& f) {
    return f.code;
  }
}
