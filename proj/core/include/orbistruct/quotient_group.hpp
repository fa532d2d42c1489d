#ifndef ORBISTRUCT_QUOTIENT_GROUP_HPP
#define ORBISTRUCT_QUOTIENT_GROUP_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "orbistruct/perm_group.hpp"
#include "orbistruct/permutation.hpp"

namespace orbistruct {

/// H/N for a normal subgroup N of H: the left cosets of N, each with its
/// lexicographically minimal element as canonical representative, plus the
/// multiplication table over representatives.
///
/// Cosets are sorted by representative, so equal quotients of equal groups
/// are structurally identical and reports stay deterministic.
class QuotientGroup {
public:
  const PermGroup& ambient() const { return data_->ambient; }
  const PermGroup& kernel() const { return data_->kernel; }

  std::size_t order() const { return data_->cosets.size(); }

  /// Coset blocks, each sorted, sorted by their representatives.
  const std::vector<std::vector<Permutation>>& cosets() const { return data_->cosets; }

  const Permutation& representative(std::size_t coset) const {
    return data_->cosets[coset].front();
  }

  /// Index of the coset containing p (p must lie in the ambient group).
  std::size_t coset_index(const Permutation& p) const;

  /// Index of coset(rep_i * rep_j); independent of representative choice.
  std::size_t multiply(std::size_t i, std::size_t j) const {
    return data_->table[i][j];
  }

  bool is_abelian() const;

  /// The left regular action of the quotient on its own cosets, as a
  /// permutation group of degree order(). Faithful, so this is "the
  /// quotient as an abstract group" for isomorphism testing.
  PermGroup regular_rep() const;

  /// Image of a subgroup S <= ambient under the quotient map, realized
  /// inside regular_rep(): the subgroup { [s] : s in S } = SN/N.
  PermGroup image_of(const PermGroup& s) const;

  friend QuotientGroup quotient(const PermGroup& h, const PermGroup& n);

private:
  struct Data {
    PermGroup ambient;
    PermGroup kernel;
    std::vector<std::vector<Permutation>> cosets;
    std::vector<std::vector<std::size_t>> table;
  };

  explicit QuotientGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Build H/N. Throws validation_error if N is not a subgroup of H or not
/// normal in H; the message names a violating conjugation.
QuotientGroup quotient(const PermGroup& h, const PermGroup& n);

} // namespace orbistruct

#endif // ORBISTRUCT_QUOTIENT_GROUP_HPP
