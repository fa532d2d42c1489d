#ifndef ORBISTRUCT_GROUP_ALGEBRA_HPP
#define ORBISTRUCT_GROUP_ALGEBRA_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "orbistruct/perm_group.hpp"
#include "orbistruct/permutation.hpp"

namespace orbistruct::algebra {

/// Exact coefficients. Everything the substructure calculus decides is a
/// statement about supports and exact orbit equality, so floating point is
/// never acceptable here.
using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

/// An element of the group algebra of a finite permutation group: a formal
/// linear combination of group elements with exact rational coefficients,
/// stored sparsely (absent element = coefficient zero).
class AlgebraVector {
public:
  explicit AlgebraVector(PermGroup group) : group_(std::move(group)) {}

  /// 1 * element.
  static AlgebraVector basis(PermGroup group, const Permutation& element);

  static AlgebraVector from_terms(
      PermGroup group, const std::vector<std::pair<Permutation, Rational>>& terms);

  const PermGroup& group() const { return group_; }

  /// Nonzero terms only, in canonical element order.
  const std::map<Permutation, Rational>& terms() const { return terms_; }

  Rational coefficient(const Permutation& element) const;

  std::vector<Permutation> support() const;

  bool is_zero() const { return terms_.empty(); }

  bool operator==(const AlgebraVector& other) const {
    return group_ == other.group_ && terms_ == other.terms_;
  }

private:
  friend AlgebraVector add(const AlgebraVector&, const AlgebraVector&);
  friend AlgebraVector scale(const Rational&, const AlgebraVector&);
  friend AlgebraVector algebra_multiply(const AlgebraVector&, const AlgebraVector&);
  friend AlgebraVector conjugation_act(const Permutation&, const AlgebraVector&);

  void set(const Permutation& element, const Rational& value);

  PermGroup group_;
  std::map<Permutation, Rational> terms_;
};

AlgebraVector add(const AlgebraVector& a, const AlgebraVector& b);
AlgebraVector scale(const Rational& k, const AlgebraVector& a);

/// Convolution product: the coefficient of v in a*b is the sum of
/// c_x * d_y over all factorizations x*y = v.
AlgebraVector algebra_multiply(const AlgebraVector& a, const AlgebraVector& b);

/// Component-wise conjugation, d . sum(c_x x) = sum(c_x (d x d^-1)).
/// A left action that permutes the canonical basis, so it preserves
/// support cardinality.
AlgebraVector conjugation_act(const Permutation& d, const AlgebraVector& a);

/// The span of a subgroup inside the group algebra of an ambient group.
/// Because conjugation permutes basis elements, the subspace is fully
/// described by its basis subgroup; membership questions reduce to support
/// containment and no linear algebra is ever needed.
struct SubalgebraSpan {
  PermGroup ambient;
  PermGroup basis;
};

/// Validates basis <= ambient.
SubalgebraSpan make_span(PermGroup ambient, PermGroup basis);

/// { x in g : x . span subset of span }, computed by acting on the basis
/// vectors. Always equals normalizer(g, basis); the two computations stay
/// independent so they can cross-validate each other.
PermGroup subspace_stabilizer(const PermGroup& g, const SubalgebraSpan& span);

/// { x in g : x fixes every vector of the span }, computed on basis
/// vectors. Always equals centralizer(g, basis), same cross-validation.
PermGroup subspace_fixer(const PermGroup& g, const SubalgebraSpan& span);

/// True iff no non-identity element of g acts as the identity on the whole
/// group algebra of g. Computed from the action itself and cross-checked
/// against center(g) being trivial (internal_error on disagreement).
bool is_action_effective(const PermGroup& g);

/// A "generic" vector on the given support: the i-th support element gets
/// coefficient i+1. The coefficients are injective labels, never combined
/// arithmetically by the callers, so orbit comparisons behave exactly like
/// formal symbols with no chance of accidental collision.
AlgebraVector generic_vector(const PermGroup& group, std::span<const Permutation> support);

} // namespace orbistruct::algebra

#endif // ORBISTRUCT_GROUP_ALGEBRA_HPP
