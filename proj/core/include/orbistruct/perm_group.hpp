#ifndef ORBISTRUCT_PERM_GROUP_HPP
#define ORBISTRUCT_PERM_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "orbistruct/permutation.hpp"

namespace orbistruct {

/// Default cap on the order of a group produced by closure().
inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Default cap on the order of a group fed to all_subgroups().
inline constexpr std::size_t kDefaultSubgroupsCap = 120;

/// A finite permutation group with its full, canonically sorted element set.
///
/// Groups are enumerated by breadth-first closure from the generators; all
/// groups this library cares about have order at most a few hundred, so the
/// exhaustive representation keeps every downstream question (membership,
/// normalizers, quotients, subgroup enumeration) a plain finite scan.
///
/// Cheap to copy: the element data is immutable and shared. Equal groups
/// (same degree, same element set) compare equal structurally.
class PermGroup {
public:
  /// Smallest group containing `generators`, all of degree `degree`.
  /// Throws resource_error once the closure grows past `order_cap`.
  static PermGroup closure(unsigned degree, std::vector<Permutation> generators,
                           std::size_t order_cap = kDefaultClosureCap);

  static PermGroup trivial(unsigned degree);

  /// Wrap an element set that is already a group; validates identity,
  /// closure under composition and inverses.
  static PermGroup from_elements(unsigned degree, std::vector<Permutation> elements);

  unsigned degree() const { return data_->degree; }
  std::size_t order() const { return data_->elements.size(); }

  /// Canonically sorted (lexicographic on image arrays).
  const std::vector<Permutation>& elements() const { return data_->elements; }

  /// The generators the group was built from (may be empty for trivial or
  /// element-set constructed groups).
  const std::vector<Permutation>& generators() const { return data_->generators; }

  Permutation identity() const { return Permutation(degree()); }

  bool contains(const Permutation& p) const;

  /// Index of an element in elements(), if present.
  std::optional<std::size_t> index_of(const Permutation& p) const;

  /// True iff every element of *this lies in g. Degree mismatch is not an
  /// error, just false.
  bool is_subgroup_of(const PermGroup& g) const;

  bool is_trivial() const { return order() == 1; }

  bool is_abelian() const;

  /// Same group acting on new_degree >= degree() points, fixing the rest.
  PermGroup extended(unsigned new_degree) const;

  /// A small, deterministic generating sequence (greedy over the element
  /// order); handy for rendering and isomorphism search.
  std::vector<Permutation> small_generating_set() const;

  bool operator==(const PermGroup& other) const;

private:
  struct Data {
    unsigned degree;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements; // sorted, unique
  };

  explicit PermGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Every element of h lies in g (false on degree mismatch, never throws).
bool is_subgroup(const PermGroup& h, const PermGroup& g);

/// N_g(h) = { x in g : x h x^-1 = h }. Requires h <= g.
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

/// C_g(h) = { x in g : x y = y x for all y in h }. Requires h <= g.
PermGroup centralizer(const PermGroup& g, const PermGroup& h);

/// C(g) = centralizer(g, g).
PermGroup center(const PermGroup& g);

/// { p h p^-1 } as a group (p need not lie in h).
PermGroup conjugated_subgroup(const PermGroup& h, const Permutation& p);

/// All distinct conjugates x h x^-1 for x in g, sorted canonically.
/// Requires h <= g; the orbit-stabilizer count |class| * |N_g(h)| = |g|
/// is asserted and raises internal_error if violated.
std::vector<PermGroup> subgroup_conjugacy_class(const PermGroup& g, const PermGroup& h);

/// Intersection of two subgroups of a common ambient group.
PermGroup intersection(const PermGroup& a, const PermGroup& b);

/// The set { a b : a in as, b in bs }, sorted and deduplicated.
std::vector<Permutation> product_set(const PermGroup& a, const PermGroup& b);

/// Every subgroup of g, each exactly once, canonically sorted by
/// (order, element set). Seeds with the cyclic subgroups and saturates
/// under join-with-a-cyclic-subgroup.
std::vector<PermGroup> all_subgroups(const PermGroup& g,
                                     std::size_t order_cap = kDefaultSubgroupsCap);

} // namespace orbistruct

#endif // ORBISTRUCT_PERM_GROUP_HPP
