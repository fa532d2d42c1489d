#ifndef ORBISTRUCT_SUBSTRUCTURE_HPP
#define ORBISTRUCT_SUBSTRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbistruct/group_algebra.hpp"
#include "orbistruct/isomorphism.hpp"
#include "orbistruct/perm_group.hpp"
#include "orbistruct/quotient_group.hpp"

namespace orbistruct::substructure {

/// Nested subgroups Delta <= B <= Gamma modeling a chain of invariant
/// subspaces R[Delta] < R[B] < R[Gamma] inside the group algebra, i.e. an
/// orbifold chart chain Q < P < O at the origin.
struct SubgroupChain {
  PermGroup gamma;
  PermGroup b;
  PermGroup delta;
  // Properness of each link; degenerate chains are accepted by the
  // component operations but flagged so reports can warn.
  bool delta_nontrivial = false;
  bool delta_proper_in_b = false;
  bool b_proper_in_gamma = false;

  bool proper() const { return delta_nontrivial && delta_proper_in_b && b_proper_in_gamma; }
};

/// Validates the inclusions (throws validation_error otherwise) and fills
/// the properness flags.
SubgroupChain make_chain(PermGroup gamma, PermGroup b, PermGroup delta);

/// A suborbifold of the single-chart orbifold R[Gamma]/Gamma: an invariant
/// span R[H], a choice of Lambda inside its stabilizer, the pointwise
/// fixer Omega = Lambda n C_Gamma(H), and the intrinsic isotropy group
/// Lambda/Omega.
struct SuborbifoldModel {
  PermGroup ambient;
  algebra::SubalgebraSpan span;
  PermGroup lambda;
  PermGroup omega;
  QuotientGroup intrinsic;
};

/// Validates that lambda stabilizes the span (the error names a violating
/// element) and assembles the model.
SuborbifoldModel make_suborbifold(const PermGroup& g, const PermGroup& h,
                                  const PermGroup& lambda);

/// The canonical structure group: the entire stabilizer of R[h] in g,
/// computed through the algebra action and asserted equal to the
/// normalizer (internal_error if the two computations ever disagree).
PermGroup canonical_lambda(const PermGroup& g, const PermGroup& h);

/// Lambda/Omega with Omega = lambda n C_g(h). For the canonical lambda
/// this is N_g(h)/C_g(h).
QuotientGroup intrinsic_isotropy(const PermGroup& g, const PermGroup& h,
                                 const PermGroup& lambda);

/// 1 -> Omega -> Lambda -> Lambda/Omega -> 1 together with the outcome of
/// the right-splitting search: split iff some subgroup H <= Lambda meets
/// Omega trivially and has the quotient's order; such an H is exactly the
/// image of a section of the quotient map.
struct ExactSequence {
  PermGroup omega;
  PermGroup lambda;
  QuotientGroup isotropy;
  bool split = false;
  std::optional<PermGroup> complement;
};

/// Builds the sequence (omega must be normal in lambda) and decides
/// splitness by exhaustive search over all_subgroups(lambda).
ExactSequence make_sequence(const PermGroup& lambda, const PermGroup& omega);

/// First violation of the saturation condition, in minimality order:
/// smallest support, then lexicographically smallest support, then
/// smallest conjugator.
struct SaturationWitness {
  Permutation gamma;
  std::vector<Permutation> support;
};

struct SaturationResult {
  bool saturated = true;
  std::optional<SaturationWitness> witness;
  /// Number of violating (gamma, support) pairs seen; only meaningful
  /// when the scan ran exhaustively.
  std::size_t violation_count = 0;
};

/// Decide whether the suborbifold R[h]/lambda is saturated inside
/// R[g]/g: whether every g-orbit point that lands back in R[h] is already
/// reached by lambda.
///
/// The condition quantifies over all points of the subspace R[h], but it
/// reduces to a finite scan: conjugation permutes the canonical basis, so
/// whether x.y lies in R[h] depends only on the support of y; and a point
/// whose support carries pairwise distinct coefficients forces exact
/// per-basis-element matching, which is the strictest coefficient pattern
/// possible (any lambda that matches element-by-element also matches every
/// pattern with repeats). Hence: saturated iff for every subset S of h and
/// every x in g with x S x^-1 inside h there is l in lambda agreeing with
/// x on all of S.
///
/// Requires lambda <= stabilizer of R[h] (i.e. lambda normalizes h) and
/// |h| <= 24 (the scan is 2^|h| * |g|); throws otherwise.
SaturationResult is_saturated(const PermGroup& g, const PermGroup& h,
                              const PermGroup& lambda, bool exhaustive = false);

/// Replay a witness against the definition directly: build the injectively
/// labeled vector on the witness support and confirm that conjugating by
/// witness.gamma lands inside R[h] but outside the lambda-orbit.
bool witness_violates(const PermGroup& g, const PermGroup& h, const PermGroup& lambda,
                      const SaturationWitness& witness);

/// Full suborbifold at the modeled point: lambda is all of g.
bool is_full(const PermGroup& g, const PermGroup& lambda);

/// The isotropy group Q inherits from P, computed literally inside
/// Gamma_P = N_Gamma(B)/C_Gamma(B): the stabilizer of R[Delta] in Gamma_P
/// modulo its pointwise fixer, both realized in the regular representation
/// of Gamma_P. Route 1 of the two-route cross-check.
QuotientGroup gamma_q_p_direct(const SubgroupChain& chain);

/// The same group by the closed formula
/// [(N_Gamma(Delta) n N_Gamma(B)) . C_Gamma(Delta)] / C_Gamma(Delta),
/// computed with subgroup primitives only. The product set is verified to
/// be a subgroup before quotienting (internal_error otherwise; that would
/// falsify the derivation and must never fire). Route 2.
QuotientGroup gamma_q_p_formula(const SubgroupChain& chain);

/// One suborbifold level of a report: the exact sequence, its label, the
/// saturation verdict and the fullness flag.
struct LevelInfo {
  ExactSequence sequence;
  std::string label;
  SaturationResult saturation;
  bool full = false;
};

/// Everything analyze_chain decides about one chain.
struct ChainAnalysis {
  SubgroupChain chain;
  bool gamma_centerless = false;

  LevelInfo p_in_o;   // P inside O, Lambda = N_Gamma(B)
  LevelInfo q_in_o;   // Q inside O, Lambda = N_Gamma(Delta)
  // Q inside P; the sequence lives in the regular representation of
  // Gamma_P, the saturation verdict is lifted back to Gamma-elements.
  LevelInfo qp_in_p;

  QuotientGroup gamma_q_p_route2;
  std::string route2_label;
  bool routes_agree = false;

  bool canonical_compatible = false;
  /// True when the two canonical Q-structures are the same subquotient of
  /// Gamma on the nose (same ambient subgroup, same kernel), not merely
  /// isomorphic. Only the isomorphism verdict drives canonical_compatible.
  bool equal_as_subquotients = false;
};

struct AnalyzeChainOptions {
  /// The orbifold model needs an effective action, i.e. a centerless
  /// Gamma; by default a non-centerless Gamma is rejected. Sweeps relax
  /// this and attach a warning instead.
  bool require_centerless = true;
  std::size_t subgroup_cap = kDefaultSubgroupsCap;
  std::size_t iso_cap = kDefaultIsoCap;
};

ChainAnalysis analyze_chain(const SubgroupChain& chain, const AnalyzeChainOptions& options = {});

} // namespace orbistruct::substructure

#endif // ORBISTRUCT_SUBSTRUCTURE_HPP
