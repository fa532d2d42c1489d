#include "orbistruct/quotient_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbistruct/cycle_notation.hpp"
#include "orbistruct/errors.hpp"

namespace orbistruct {

std::size_t QuotientGroup::coset_index(const Permutation& p) const {
  // Canonical representative of pN is its minimal element.
  Permutation minimal = p;
  for (const auto& n : data_->kernel.elements()) {
    Permutation candidate = compose(p, n);
    if (candidate < minimal)
      minimal = candidate;
  }
  auto it = std::lower_bound(
      data_->cosets.begin(), data_->cosets.end(), minimal,
      [](const std::vector<Permutation>& block, const Permutation& value) {
        return block.front() < value;
      });
  if (it == data_->cosets.end() || it->front() != minimal)
    throw validation_error("coset_index: element outside the ambient group");
  return static_cast<std::size_t>(it - data_->cosets.begin());
}

bool QuotientGroup::is_abelian() const {
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = i + 1; j < order(); ++j)
      if (multiply(i, j) != multiply(j, i))
        return false;
  return true;
}

PermGroup QuotientGroup::regular_rep() const {
  std::vector<Permutation> elements;
  elements.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) {
    std::vector<unsigned> images(order());
    for (std::size_t j = 0; j < order(); ++j)
      images[j] = static_cast<unsigned>(multiply(i, j));
    elements.emplace_back(std::move(images));
  }
  return PermGroup::from_elements(static_cast<unsigned>(order()), std::move(elements));
}

PermGroup QuotientGroup::image_of(const PermGroup& s) const {
  std::set<std::size_t> touched;
  for (const auto& x : s.elements())
    touched.insert(coset_index(x));
  std::vector<Permutation> elements;
  elements.reserve(touched.size());
  for (std::size_t i : touched) {
    std::vector<unsigned> images(order());
    for (std::size_t j = 0; j < order(); ++j)
      images[j] = static_cast<unsigned>(multiply(i, j));
    elements.emplace_back(std::move(images));
  }
  return PermGroup::from_elements(static_cast<unsigned>(order()), std::move(elements));
}

QuotientGroup quotient(const PermGroup& h, const PermGroup& n) {
  if (!n.is_subgroup_of(h))
    throw validation_error("quotient: kernel is not a subgroup of the ambient group");
  for (const auto& x : h.elements()) {
    Permutation xinv = x.inverse();
    for (const auto& y : n.elements()) {
      Permutation conj = compose(compose(x, y), xinv);
      if (!n.contains(conj))
        throw validation_error("quotient: kernel not normal: " +
                               notation::render_cycles(x) + " conjugates " +
                               notation::render_cycles(y) + " to " +
                               notation::render_cycles(conj) + ", outside the kernel");
    }
  }

  // Partition into left cosets; the sorted element order makes the first
  // unassigned element the canonical representative of its block.
  std::vector<std::vector<Permutation>> cosets;
  std::set<Permutation> assigned;
  for (const auto& x : h.elements()) {
    if (assigned.count(x))
      continue;
    std::vector<Permutation> block;
    block.reserve(n.order());
    for (const auto& y : n.elements())
      block.push_back(compose(x, y));
    std::sort(block.begin(), block.end());
    assigned.insert(block.begin(), block.end());
    cosets.push_back(std::move(block));
  }
  std::sort(cosets.begin(), cosets.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (const auto& x : cosets[i])
      index.emplace(x, i);

  std::vector<std::vector<std::size_t>> table(cosets.size(),
                                              std::vector<std::size_t>(cosets.size()));
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (std::size_t j = 0; j < cosets.size(); ++j)
      table[i][j] = index.at(compose(cosets[i].front(), cosets[j].front()));

  auto data = std::make_shared<QuotientGroup::Data>(
      QuotientGroup::Data{h, n, std::move(cosets), std::move(table)});
  return QuotientGroup(std::move(data));
}

} // namespace orbistruct
