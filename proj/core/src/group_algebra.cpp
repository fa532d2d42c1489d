#include "orbistruct/group_algebra.hpp"

#include <sstream>

#include "orbistruct/errors.hpp"

namespace orbistruct::algebra {

namespace {

void check_same_group(const AlgebraVector& a, const AlgebraVector& b, const char* what) {
  if (!(a.group() == b.group()))
    throw validation_error(std::string(what) + ": vectors live in different group algebras");
}

} // namespace

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1)
    out << '/' << r.denominator();
  return out.str();
}

AlgebraVector AlgebraVector::basis(PermGroup group, const Permutation& element) {
  if (!group.contains(element))
    throw validation_error("basis: element outside the group");
  AlgebraVector v(std::move(group));
  v.terms_.emplace(element, Rational(1));
  return v;
}

AlgebraVector AlgebraVector::from_terms(
    PermGroup group, const std::vector<std::pair<Permutation, Rational>>& terms) {
  AlgebraVector v(std::move(group));
  for (const auto& [element, value] : terms) {
    if (!v.group_.contains(element))
      throw validation_error("from_terms: element outside the group");
    v.set(element, v.coefficient(element) + value);
  }
  return v;
}

Rational AlgebraVector::coefficient(const Permutation& element) const {
  auto it = terms_.find(element);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Permutation> AlgebraVector::support() const {
  std::vector<Permutation> result;
  result.reserve(terms_.size());
  for (const auto& [element, value] : terms_)
    result.push_back(element);
  return result;
}

void AlgebraVector::set(const Permutation& element, const Rational& value) {
  if (value == Rational(0))
    terms_.erase(element);
  else
    terms_[element] = value;
}

AlgebraVector add(const AlgebraVector& a, const AlgebraVector& b) {
  check_same_group(a, b, "add");
  AlgebraVector result = a;
  for (const auto& [element, value] : b.terms_)
    result.set(element, result.coefficient(element) + value);
  return result;
}

AlgebraVector scale(const Rational& k, const AlgebraVector& a) {
  AlgebraVector result(a.group());
  if (k == Rational(0))
    return result;
  for (const auto& [element, value] : a.terms_)
    result.terms_.emplace(element, k * value);
  return result;
}

AlgebraVector algebra_multiply(const AlgebraVector& a, const AlgebraVector& b) {
  check_same_group(a, b, "algebra_multiply");
  AlgebraVector result(a.group());
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, dy] : b.terms_)
      result.set(compose(x, y), result.coefficient(compose(x, y)) + cx * dy);
  return result;
}

AlgebraVector conjugation_act(const Permutation& d, const AlgebraVector& a) {
  if (!a.group().contains(d))
    throw validation_error("conjugation_act: actor outside the group");
  AlgebraVector result(a.group());
  Permutation dinv = d.inverse();
  for (const auto& [element, value] : a.terms_)
    result.terms_.emplace(compose(compose(d, element), dinv), value);
  return result;
}

SubalgebraSpan make_span(PermGroup ambient, PermGroup basis) {
  if (!basis.is_subgroup_of(ambient))
    throw validation_error("make_span: basis subgroup not contained in the ambient group");
  return SubalgebraSpan{std::move(ambient), std::move(basis)};
}

PermGroup subspace_stabilizer(const PermGroup& g, const SubalgebraSpan& span) {
  if (!(span.ambient == g))
    throw validation_error("subspace_stabilizer: span lives in a different ambient group");
  std::vector<Permutation> members;
  for (const auto& x : g.elements()) {
    bool stabilizes = true;
    for (const auto& basis_elem : span.basis.elements()) {
      AlgebraVector moved = conjugation_act(x, AlgebraVector::basis(g, basis_elem));
      for (const auto& s : moved.support()) {
        if (!span.basis.contains(s)) {
          stabilizes = false;
          break;
        }
      }
      if (!stabilizes)
        break;
    }
    if (stabilizes)
      members.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), std::move(members));
}

PermGroup subspace_fixer(const PermGroup& g, const SubalgebraSpan& span) {
  if (!(span.ambient == g))
    throw validation_error("subspace_fixer: span lives in a different ambient group");
  std::vector<Permutation> members;
  for (const auto& x : g.elements()) {
    bool fixes = true;
    for (const auto& basis_elem : span.basis.elements()) {
      AlgebraVector b = AlgebraVector::basis(g, basis_elem);
      if (!(conjugation_act(x, b) == b)) {
        fixes = false;
        break;
      }
    }
    if (fixes)
      members.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), std::move(members));
}

bool is_action_effective(const PermGroup& g) {
  bool effective = true;
  for (const auto& x : g.elements()) {
    if (x.is_identity())
      continue;
    bool acts_trivially = true;
    for (const auto& y : g.elements()) {
      AlgebraVector b = AlgebraVector::basis(g, y);
      if (!(conjugation_act(x, b) == b)) {
        acts_trivially = false;
        break;
      }
    }
    if (acts_trivially) {
      effective = false;
      break;
    }
  }
  if (effective != (center(g).order() == 1))
    throw internal_error("is_action_effective: disagrees with center computation");
  return effective;
}

AlgebraVector generic_vector(const PermGroup& group,
                             std::span<const Permutation> support) {
  std::vector<std::pair<Permutation, Rational>> terms;
  terms.reserve(support.size());
  long long label = 1;
  for (const auto& element : support)
    terms.emplace_back(element, Rational(label++));
  return AlgebraVector::from_terms(group, terms);
}

} // namespace orbistruct::algebra
