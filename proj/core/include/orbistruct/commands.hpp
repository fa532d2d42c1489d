#ifndef ORBISTRUCT_COMMANDS_HPP
#define ORBISTRUCT_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "orbistruct/catalog.hpp"
#include "orbistruct/report.hpp"

namespace orbistruct::commands {

/// The order caps the CLI threads through the library. ORBISTRUCT_ORDER_CAP,
/// when set, overrides all of them with one value.
struct OrderCaps {
  std::size_t closure = kDefaultClosureCap;
  std::size_t subgroups = kDefaultSubgroupsCap;
  std::size_t isomorphism = kDefaultIsoCap;
  std::size_t chains = orbistruct::catalog::kDefaultChainCap;
};

/// Caps after applying the ORBISTRUCT_ORDER_CAP environment variable, if
/// set (validation_error when it is set but not a positive integer).
OrderCaps caps_from_environment();

/// A group spec is a catalog name ("A5") or a ';'-separated generator list
/// in cycle notation ("(1 2 3);(1 2)(3 4)"; factors may be joined with '*'
/// for non-disjoint products).
PermGroup resolve_group_spec(const std::string& spec,
                             const orbistruct::catalog::Catalog& groups,
                             std::optional<unsigned> degree,
                             std::size_t closure_cap);

struct AnalyzeRequest {
  std::string gamma_spec;
  std::string b_spec;
  std::string delta_spec;
  /// Optional non-canonical Lambda for the Q level; must stabilize
  /// R[delta] inside gamma.
  std::optional<std::string> lambda_spec;
  /// Forces the common degree; defaults to the largest degree among the
  /// resolved groups (smaller groups are padded with fixed points).
  std::optional<unsigned> degree;
  OrderCaps caps;
  const orbistruct::catalog::Catalog* groups = nullptr; // null = builtin
};

/// Full chain analysis. Degenerate chains and a non-centerless gamma are
/// analyzed anyway and flagged in the document's warnings.
doc::ReportDocument run_analyze(const AnalyzeRequest& request);

struct SweepRequest {
  std::string gamma_spec;
  bool only_incompatible = false;
  bool only_unsaturated = false;
  std::optional<unsigned> degree;
  std::size_t jobs = 0;
  OrderCaps caps;
  const orbistruct::catalog::Catalog* groups = nullptr;
};

/// Sweep over all chain classes of gamma. Filters drop entries from the
/// document; the summary counts always describe the whole sweep.
doc::ReportDocument run_sweep(const SweepRequest& request);

doc::ReportDocument run_catalog_list(const orbistruct::catalog::Catalog* groups = nullptr);

doc::ReportDocument run_catalog_show(const std::string& name,
                                     const orbistruct::catalog::Catalog* groups = nullptr);

} // namespace orbistruct::commands

#endif // ORBISTRUCT_COMMANDS_HPP
