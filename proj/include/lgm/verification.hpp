#pragma once

#include "lgm/catalog.hpp"
#include "lgm/corpus.hpp"

#include <string>
#include <vector>

namespace lgm {

struct CheckTally {
  Int pass = 0;
  Int fail = 0;
  Int not_applicable = 0;
};

struct Failure {
  std::string item;
  std::string check;
  std::string detail;
};

struct VerificationSummary {
  std::string scope;
  Int polynomials = 0;
  Int pairs = 0;
  // Fixed order: a_eq_gamma, g_eq_j, e_eq_mu, strange, table2, poincare,
  // then expectations for the catalog scope.
  std::vector<std::pair<std::string, CheckTally>> tallies;
  std::vector<Failure> failures;

  CheckTally& tally(const std::string& name);
  const CheckTally& tally(const std::string& name) const;
  Int failure_count() const;
  int exit_code() const { return failure_count() == 0 ? 0 : 1; }
};

VerificationSummary run_catalog_verification(const VerifyOptions& opts = {});
// threads = 0 picks the hardware concurrency; results merge in enumeration order.
VerificationSummary run_corpus_verification(const CorpusBounds& bounds, const VerifyOptions& opts = {},
                                            unsigned threads = 0);

// Failure lists are truncated to max_failures lines in text form.
std::string emit_summary(const VerificationSummary& s, Format format, std::size_t max_failures = 40);

}  // namespace lgm
