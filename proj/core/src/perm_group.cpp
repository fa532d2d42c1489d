#include "orbistruct/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "orbistruct/errors.hpp"

namespace orbistruct {

namespace {

void check_same_degree(const std::vector<Permutation>& perms, unsigned degree,
                       const char* what) {
  for (const auto& p : perms)
    if (p.degree() != degree)
      throw validation_error(std::string(what) + ": degree mismatch (" +
                             std::to_string(p.degree()) + " vs " +
                             std::to_string(degree) + ")");
}

} // namespace

PermGroup PermGroup::closure(unsigned degree, std::vector<Permutation> generators,
                             std::size_t order_cap) {
  check_same_degree(generators, degree, "closure");

  std::set<Permutation> elements;
  elements.insert(Permutation(degree));
  std::vector<Permutation> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Permutation y = compose(x, g);
        if (elements.insert(y).second) {
          if (elements.size() > order_cap)
            throw resource_error("closure: group order cap (" +
                                 std::to_string(order_cap) + ") exceeded");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }

  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->generators = std::move(generators);
  data->elements.assign(elements.begin(), elements.end());
  return PermGroup(std::move(data));
}

PermGroup PermGroup::trivial(unsigned degree) {
  return closure(degree, {});
}

PermGroup PermGroup::from_elements(unsigned degree, std::vector<Permutation> elements) {
  check_same_degree(elements, degree, "from_elements");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() ||
      !std::binary_search(elements.begin(), elements.end(), Permutation(degree)))
    throw validation_error("from_elements: identity missing");
  for (const auto& x : elements) {
    if (!std::binary_search(elements.begin(), elements.end(), x.inverse()))
      throw validation_error("from_elements: set not closed under inverses");
    for (const auto& y : elements)
      if (!std::binary_search(elements.begin(), elements.end(), compose(x, y)))
        throw validation_error("from_elements: set not closed under composition");
  }
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = std::move(elements);
  return PermGroup(std::move(data));
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree())
    return false;
  return std::binary_search(data_->elements.begin(), data_->elements.end(), p);
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(data_->elements.begin(), data_->elements.end(), p);
  if (it == data_->elements.end() || *it != p)
    return std::nullopt;
  return static_cast<std::size_t>(it - data_->elements.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree() != g.degree())
    return false;
  return std::includes(g.elements().begin(), g.elements().end(),
                       elements().begin(), elements().end());
}

bool PermGroup::is_abelian() const {
  const auto& elems = elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (compose(elems[i], elems[j]) != compose(elems[j], elems[i]))
        return false;
  return true;
}

PermGroup PermGroup::extended(unsigned new_degree) const {
  if (new_degree == degree())
    return *this;
  auto data = std::make_shared<Data>();
  data->degree = new_degree;
  for (const auto& g : generators())
    data->generators.push_back(g.extended(new_degree));
  for (const auto& x : elements())
    data->elements.push_back(x.extended(new_degree));
  // Padding appends fixed points, so the sorted order is unchanged.
  return PermGroup(std::move(data));
}

std::vector<Permutation> PermGroup::small_generating_set() const {
  std::vector<Permutation> gens;
  PermGroup current = trivial(degree());
  for (const auto& x : elements()) {
    if (current.order() == order())
      break;
    if (current.contains(x))
      continue;
    gens.push_back(x);
    current = closure(degree(), gens, order());
  }
  return gens;
}

bool PermGroup::operator==(const PermGroup& other) const {
  if (data_ == other.data_)
    return true;
  return degree() == other.degree() && elements() == other.elements();
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  return h.is_subgroup_of(g);
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g))
    throw validation_error("normalizer: h is not a subgroup of g");
  std::vector<Permutation> members;
  for (const auto& x : g.elements()) {
    Permutation xinv = x.inverse();
    bool normalizes = true;
    for (const auto& y : h.elements()) {
      if (!h.contains(compose(compose(x, y), xinv))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes)
      members.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), std::move(members));
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g))
    throw validation_error("centralizer: h is not a subgroup of g");
  std::vector<Permutation> members;
  for (const auto& x : g.elements()) {
    bool commutes = true;
    for (const auto& y : h.elements()) {
      if (compose(x, y) != compose(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes)
      members.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), std::move(members));
}

PermGroup center(const PermGroup& g) {
  return centralizer(g, g);
}

PermGroup conjugated_subgroup(const PermGroup& h, const Permutation& p) {
  std::vector<Permutation> elements;
  elements.reserve(h.order());
  Permutation pinv = p.inverse();
  for (const auto& y : h.elements())
    elements.push_back(compose(compose(p, y), pinv));
  return PermGroup::from_elements(h.degree(), std::move(elements));
}

std::vector<PermGroup> subgroup_conjugacy_class(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g))
    throw validation_error("subgroup_conjugacy_class: h is not a subgroup of g");
  std::map<std::vector<Permutation>, PermGroup> conjugates;
  for (const auto& x : g.elements()) {
    PermGroup c = conjugated_subgroup(h, x);
    conjugates.emplace(c.elements(), c);
  }
  std::vector<PermGroup> result;
  result.reserve(conjugates.size());
  for (auto& [key, value] : conjugates)
    result.push_back(value);
  if (result.size() * normalizer(g, h).order() != g.order())
    throw internal_error("subgroup_conjugacy_class: orbit-stabilizer count violated");
  return result;
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    throw validation_error("intersection: degree mismatch");
  std::vector<Permutation> elements;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(elements));
  return PermGroup::from_elements(a.degree(), std::move(elements));
}

std::vector<Permutation> product_set(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    throw validation_error("product_set: degree mismatch");
  std::set<Permutation> products;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements())
      products.insert(compose(x, y));
  return {products.begin(), products.end()};
}

std::vector<PermGroup> all_subgroups(const PermGroup& g, std::size_t order_cap) {
  if (g.order() > order_cap)
    throw resource_error("all_subgroups: group order " + std::to_string(g.order()) +
                         " exceeds cap (" + std::to_string(order_cap) + ")");

  // Distinct cyclic subgroups.
  std::map<std::vector<Permutation>, PermGroup> found;
  std::vector<PermGroup> cyclic;
  for (const auto& x : g.elements()) {
    PermGroup c = PermGroup::closure(g.degree(), {x}, g.order());
    if (found.emplace(c.elements(), c).second)
      cyclic.push_back(c);
  }

  // Saturate under join-with-a-cyclic-subgroup. Any subgroup is a join of
  // cyclic subgroups one at a time, so the fixpoint contains them all.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PermGroup> snapshot;
    snapshot.reserve(found.size());
    for (auto& [key, value] : found)
      snapshot.push_back(value);
    for (const auto& s : snapshot) {
      for (const auto& c : cyclic) {
        if (c.is_subgroup_of(s))
          continue;
        std::vector<Permutation> gens = s.small_generating_set();
        gens.insert(gens.end(), c.generators().begin(), c.generators().end());
        PermGroup join = PermGroup::closure(g.degree(), std::move(gens), g.order());
        if (found.emplace(join.elements(), join).second)
          grew = true;
      }
    }
  }

  std::vector<PermGroup> result;
  result.reserve(found.size());
  for (auto& [key, value] : found)
    result.push_back(value);
  std::sort(result.begin(), result.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return result;
}

} // namespace orbistruct
