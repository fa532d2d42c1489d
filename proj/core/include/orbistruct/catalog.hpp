#ifndef ORBISTRUCT_CATALOG_HPP
#define ORBISTRUCT_CATALOG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbistruct/perm_group.hpp"
#include "orbistruct/substructure.hpp"

namespace orbistruct::catalog {

/// Default cap on the order of a group swept for chains.
inline constexpr std::size_t kDefaultChainCap = 120;

/// One named group of the manifest. The manifest is plain text, one entry
/// per line: `name degree gen1;gen2;...` with generators in cycle notation.
/// Blank lines and lines starting with '#' are ignored.
struct Entry {
  std::string name;
  unsigned degree = 0;
  std::vector<std::string> generator_text;
  std::size_t expected_order = 0;
};

class Catalog {
public:
  explicit Catalog(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  const std::vector<Entry>& entries() const { return entries_; }

  const Entry* find(const std::string& name) const;

private:
  std::vector<Entry> entries_;
};

/// Parse and validate a manifest: each entry's generators must close to a
/// group of exactly the declared order (validation_error naming the entry
/// otherwise).
Catalog parse_catalog(const std::string& manifest_text);

Catalog load_catalog_file(const std::string& path);

/// The manifest text compiled into the library (content of the shipped
/// catalog data file).
const char* builtin_manifest_text();

/// The compiled-in catalog, parsed and validated once.
const Catalog& builtin_catalog();

/// Closure of an entry's generators at its declared degree.
PermGroup build_group(const Entry& entry, std::size_t order_cap = kDefaultClosureCap);

/// One conjugacy class of proper chains delta < b < g, represented by its
/// lexicographically minimal member.
struct ChainClass {
  substructure::SubgroupChain chain;
  std::size_t class_size = 0;
};

/// All proper chains {e} < delta < b < g up to simultaneous conjugacy, in a
/// deterministic order. Every quantity the analysis computes is
/// conjugation-equivariant, so one representative per class suffices.
std::vector<ChainClass> enumerate_chains(const PermGroup& g,
                                         std::size_t order_cap = kDefaultChainCap);

struct SweepEntry {
  std::size_t class_size = 0;
  substructure::ChainAnalysis analysis;
};

struct SweepResult {
  PermGroup gamma;
  std::vector<SweepEntry> entries;
  std::size_t total_chains = 0;
  // Counts refer to the P-in-O level; the per-chain reports carry all
  // levels.
  std::size_t incompatible_count = 0;
  std::size_t non_saturated_count = 0;
  std::size_t non_split_count = 0;
  std::vector<std::string> warnings;
};

struct SweepOptions {
  std::size_t chain_cap = kDefaultChainCap;
  std::size_t subgroup_cap = kDefaultSubgroupsCap;
  std::size_t iso_cap = kDefaultIsoCap;
  /// Worker threads for the chain analyses; 0 picks the hardware count.
  /// Results are merged in chain order, so the output is identical for any
  /// thread count.
  std::size_t jobs = 0;
};

/// analyze_chain over every enumerated chain class. A non-centerless gamma
/// is allowed (the analyses still make group-theoretic sense) but flagged
/// with a warning, since the modeled conjugation action is not effective.
SweepResult sweep(const PermGroup& g, const SweepOptions& options = {});

} // namespace orbistruct::catalog

#endif // ORBISTRUCT_CATALOG_HPP
