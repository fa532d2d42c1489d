#ifndef ORBISTRUCT_REPORT_HPP
#define ORBISTRUCT_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbistruct/catalog.hpp"
#include "orbistruct/substructure.hpp"

namespace orbistruct::doc {

inline constexpr int kSchemaVersion = 1;

/// Plain serializable mirror of the analysis results. Documents are the
/// interchange representation: JSON round-trips reproduce them exactly,
/// witnesses and generators are rendered in 1-based cycle notation.

struct GroupDoc {
  std::string label;
  std::size_t order = 0;
  unsigned degree = 0;
  std::vector<std::string> generators;

  bool operator==(const GroupDoc&) const = default;
};

struct QuotientDoc {
  std::string label;
  std::size_t order = 0;
  GroupDoc ambient;
  GroupDoc kernel;

  bool operator==(const QuotientDoc&) const = default;
};

struct WitnessDoc {
  std::string gamma;
  std::vector<std::string> support;

  bool operator==(const WitnessDoc&) const = default;
};

struct SaturationDoc {
  bool saturated = false;
  std::optional<WitnessDoc> witness;

  bool operator==(const SaturationDoc&) const = default;
};

struct LevelDoc {
  /// isotropy.ambient is Lambda, isotropy.kernel is Omega.
  QuotientDoc isotropy;
  bool split = false;
  std::optional<GroupDoc> complement;
  SaturationDoc saturation;
  bool full = false;

  bool operator==(const LevelDoc&) const = default;
};

struct ChainDoc {
  GroupDoc gamma;
  GroupDoc b;
  GroupDoc delta;
  bool delta_nontrivial = false;
  bool delta_proper_in_b = false;
  bool b_proper_in_gamma = false;
  bool gamma_centerless = false;

  bool operator==(const ChainDoc&) const = default;
};

struct AnalysisDoc {
  ChainDoc chain;
  LevelDoc p_in_o;
  LevelDoc q_in_o;
  LevelDoc qp_in_p;
  QuotientDoc gamma_q_p_route2;
  bool routes_agree = false;
  bool canonical_compatible = false;
  bool equal_as_subquotients = false;
  /// Present when the user supplied a non-canonical Lambda for the Q level.
  std::optional<LevelDoc> custom_lambda;
  std::vector<std::string> warnings;

  bool operator==(const AnalysisDoc&) const = default;
};

struct SweepEntryDoc {
  std::size_t class_size = 0;
  AnalysisDoc analysis;

  bool operator==(const SweepEntryDoc&) const = default;
};

struct SweepDoc {
  GroupDoc gamma;
  std::size_t total_chains = 0;
  std::size_t incompatible_count = 0;
  std::size_t non_saturated_count = 0;
  std::size_t non_split_count = 0;
  std::vector<SweepEntryDoc> entries;
  std::vector<std::string> warnings;

  bool operator==(const SweepDoc&) const = default;
};

struct CatalogEntryDoc {
  std::string name;
  unsigned degree = 0;
  std::size_t order = 0;
  std::vector<std::string> generators;
  std::string label;

  bool operator==(const CatalogEntryDoc&) const = default;
};

struct CatalogDoc {
  std::vector<CatalogEntryDoc> entries;

  bool operator==(const CatalogDoc&) const = default;
};

struct ReportDocument {
  int schema_version = kSchemaVersion;
  std::string command;
  std::string kind; // "analysis" | "sweep" | "catalog"
  std::optional<AnalysisDoc> analysis;
  std::optional<SweepDoc> sweep;
  std::optional<CatalogDoc> catalog;

  bool operator==(const ReportDocument&) const = default;
};

GroupDoc describe_group(const PermGroup& g);
QuotientDoc describe_quotient(const QuotientGroup& q);
LevelDoc make_level_doc(const substructure::LevelInfo& level);
SaturationDoc make_saturation_doc(const substructure::SaturationResult& result);

/// Assembles the document, including the standard warnings for degenerate
/// chains and a non-centerless gamma.
AnalysisDoc make_analysis_doc(const substructure::ChainAnalysis& analysis);

SweepDoc make_sweep_doc(const orbistruct::catalog::SweepResult& result);

/// Deterministic 2-space-indented JSON.
std::string to_json_string(const ReportDocument& document);

/// Inverse of to_json_string; throws validation_error on missing fields or
/// an unsupported schema version.
ReportDocument from_json_string(const std::string& text);

/// Human-readable rendering; the analysis narrative runs Gamma_P^O, then
/// Gamma_Q^O, then Gamma_Q^P, then the flags.
std::string to_text(const ReportDocument& document);

} // namespace orbistruct::doc

#endif // ORBISTRUCT_REPORT_HPP
