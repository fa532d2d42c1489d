#ifndef ORBISTRUCT_ISOMORPHISM_HPP
#define ORBISTRUCT_ISOMORPHISM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbistruct/perm_group.hpp"

namespace orbistruct {

/// Default cap on group orders fed to is_isomorphic().
inline constexpr std::size_t kDefaultIsoCap = 60;

/// Cheap isomorphism invariants. Equal fingerprints are necessary for
/// isomorphism, never sufficient.
struct IsoFingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::map<unsigned, std::size_t> element_order_histogram;
  /// Sorted subgroup orders with multiplicity; only computed for groups of
  /// order <= 24, where the subgroup lattice is cheap.
  std::optional<std::vector<std::size_t>> subgroup_orders;

  bool operator==(const IsoFingerprint&) const = default;
};

IsoFingerprint fingerprint(const PermGroup& g);

/// True iff an abstract group isomorphism g -> h exists. Fingerprint
/// filtering first, then a backtracking search over generator images; every
/// candidate map is verified as a full bijective homomorphism before being
/// accepted.
bool is_isomorphic(const PermGroup& g, const PermGroup& h,
                   std::size_t order_cap = kDefaultIsoCap);

/// Label of the isomorphism class against a fixed catalog of reference
/// groups of order <= 60 ("1", "Z2".."Z12", "V4", "S3", "D4", "Q8", "D5",
/// "D6", "A4", "S4", "A5"). Falls back to "order-N-unrecognized"; never
/// throws.
std::string named_iso_class(const PermGroup& g);

} // namespace orbistruct

#endif // ORBISTRUCT_ISOMORPHISM_HPP
