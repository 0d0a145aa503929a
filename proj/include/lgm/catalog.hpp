#pragma once

#include "lgm/mirror.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lgm {

struct Expectation {
  std::string key;
  nlohmann::json value;
  std::string source;  // PAPER or DERIVED
  std::string quote;
};

struct CatalogEntry {
  std::string id;
  std::string polynomial;
  // "f" when the text is f itself, "fT" when it is the transpose (the
  // transposed-pair rows list f^T).
  std::string given = "f";
  // "primal": group_spec names G <= G^fin_f.  "dual": it names a group of
  // SL symmetries of f^T, read as G^T of the pair (f, dual_group(f^T, G)).
  std::string side = "primal";
  std::string group_spec = "G0";
  std::vector<Expectation> expected;
  std::string notes;
};

std::vector<CatalogEntry> parse_catalog(const nlohmann::json& j);
const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry& find_entry(std::string_view id);  // InvalidArgument if absent

struct ResolvedEntry {
  Polynomial f;
  DiagonalGroup G;
  std::optional<DiagonalGroup> given_dual;  // dual-side entries only
};

ResolvedEntry resolve(const CatalogEntry& e);

struct ExpectationResult {
  Expectation expected;
  nlohmann::json actual;
  bool pass = false;
};

struct EntryResult {
  std::string id;
  MirrorReport report;
  std::vector<ExpectationResult> results;
  bool ok() const;
};

EntryResult check_entry(const CatalogEntry& e, const VerifyOptions& opts = {});

}  // namespace lgm
