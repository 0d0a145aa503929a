#pragma once

#include "lgm/cusp.hpp"
#include "lgm/spectra.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lgm {

struct VerifyOptions {
  // Also compute Poincare series, psi and the mirror characteristic polynomial.
  bool series = true;
  // Replaces the alpha' type table; only the negative-control tests set it.
  std::function<Triple(const Polynomial&)> alpha_prime_override;
};

struct GroupSummary {
  Int order = 0;
  std::vector<std::string> generators;
  bool operator==(const GroupSummary&) const = default;
};

struct MirrorChecks {
  bool a_eq_gamma = false;
  bool g_eq_j = false;
  bool e_eq_mu = false;
  bool all() const { return a_eq_gamma && g_eq_j && e_eq_mu; }
  bool operator==(const MirrorChecks&) const = default;
};

struct MirrorReport {
  std::string input;
  Matrix exponent_matrix;
  Int det = 0;
  WeightSystem canonical;
  WeightSystem reduced;
  std::string type;
  GroupSummary group;
  GroupSummary dual;

  Int genus = 0;
  std::vector<Int> dolgachev;
  Int stringy_euler = 0;

  Triple gamma_prime{};
  Int delta = 0;
  std::vector<Int> gabrielov;
  Int junior = 0;
  Int milnor = 0;

  // Absent when the grading condition fails or series were not requested.
  std::optional<CycloVector> poincare;
  std::optional<CycloVector> psi;
  std::optional<CycloVector> phi;

  std::vector<std::string> notes;

  // Recomputed from the stored fields on every call.
  MirrorChecks checks() const;
  bool operator==(const MirrorReport&) const = default;
};

MirrorReport verify_mirror(const Polynomial& f, const DiagonalGroup& G, const VerifyOptions& opts = {});

enum class Format { Text, Json, Csv };
Format parse_format(std::string_view name);

nlohmann::ordered_json cyclo_to_json(const CycloVector& v);
CycloVector cyclo_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const MirrorReport& r);
MirrorReport report_from_json(const nlohmann::json& j);

std::string csv_header();
std::string csv_row(const MirrorReport& r);
std::string emit_report(const MirrorReport& r, Format format);

std::string format_multiset(const std::vector<Int>& m);  // "{2,3,3}"

}  // namespace lgm
