#include "orbistruct/isomorphism.hpp"

#include <algorithm>
#include <functional>

#include "orbistruct/cycle_notation.hpp"
#include "orbistruct/errors.hpp"

namespace orbistruct {

namespace {

// Index-based multiplication table; everything downstream works on indices
// into the sorted element vector.
struct Table {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> mult;
  std::vector<unsigned> elem_order;
  std::size_t identity = 0;

  explicit Table(const PermGroup& g) : n(g.order()) {
    const auto& elems = g.elements();
    mult.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        mult[i][j] = *g.index_of(compose(elems[i], elems[j]));
    elem_order.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      elem_order[i] = elems[i].order();
    identity = *g.index_of(Permutation(g.degree()));
  }
};

// A generating sequence of g as table indices.
std::vector<std::size_t> generator_indices(const PermGroup& g) {
  std::vector<std::size_t> result;
  for (const auto& gen : g.small_generating_set())
    result.push_back(*g.index_of(gen));
  return result;
}

// Attempt to extend gen_idx -> images to a homomorphism by walking the
// Cayley graph, then verify every edge and bijectivity.
bool extends_to_isomorphism(const Table& a, const Table& b,
                            const std::vector<std::size_t>& gen_idx,
                            const std::vector<std::size_t>& images) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(a.n, unset);
  map[a.identity] = b.identity;
  std::vector<std::size_t> frontier{a.identity};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t x : frontier) {
      for (std::size_t k = 0; k < gen_idx.size(); ++k) {
        std::size_t y = a.mult[x][gen_idx[k]];
        std::size_t fy = b.mult[map[x]][images[k]];
        if (map[y] == unset) {
          map[y] = fy;
          next.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<bool> hit(b.n, false);
  for (std::size_t x = 0; x < a.n; ++x) {
    if (map[x] == unset || hit[map[x]])
      return false;
    hit[map[x]] = true;
  }
  // Full edge check makes the map a homomorphism on all of a, not just on
  // the spanning tree.
  for (std::size_t x = 0; x < a.n; ++x)
    for (std::size_t k = 0; k < gen_idx.size(); ++k)
      if (map[a.mult[x][gen_idx[k]]] != b.mult[map[x]][images[k]])
        return false;
  return true;
}

bool isomorphic_tables(const Table& a, const Table& b,
                       const std::vector<std::size_t>& gen_idx) {
  // Candidate images bucketed by element order.
  std::vector<std::vector<std::size_t>> candidates(gen_idx.size());
  for (std::size_t k = 0; k < gen_idx.size(); ++k)
    for (std::size_t j = 0; j < b.n; ++j)
      if (b.elem_order[j] == a.elem_order[gen_idx[k]])
        candidates[k].push_back(j);

  std::vector<std::size_t> images(gen_idx.size());
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == gen_idx.size())
      return extends_to_isomorphism(a, b, gen_idx, images);
    for (std::size_t j : candidates[k]) {
      images[k] = j;
      if (search(k + 1))
        return true;
    }
    return false;
  };
  return search(0);
}

} // namespace

IsoFingerprint fingerprint(const PermGroup& g) {
  IsoFingerprint fp;
  fp.order = g.order();
  fp.abelian = g.is_abelian();
  for (const auto& x : g.elements())
    ++fp.element_order_histogram[x.order()];
  if (g.order() <= 24) {
    std::vector<std::size_t> orders;
    for (const auto& s : all_subgroups(g, 24))
      orders.push_back(s.order());
    std::sort(orders.begin(), orders.end());
    fp.subgroup_orders = std::move(orders);
  }
  return fp;
}

bool is_isomorphic(const PermGroup& g, const PermGroup& h, std::size_t order_cap) {
  if (g.order() > order_cap || h.order() > order_cap)
    throw resource_error("is_isomorphic: order cap (" + std::to_string(order_cap) +
                         ") exceeded");
  if (g.order() != h.order())
    return false;
  if (g.is_abelian() != h.is_abelian())
    return false;
  {
    std::map<unsigned, std::size_t> ha, hb;
    for (const auto& x : g.elements())
      ++ha[x.order()];
    for (const auto& x : h.elements())
      ++hb[x.order()];
    if (ha != hb)
      return false;
  }

  Table a(g), b(h);
  return isomorphic_tables(a, b, generator_indices(g));
}

std::string named_iso_class(const PermGroup& g) {
  struct Reference {
    std::string name;
    PermGroup group;
  };
  static const std::vector<Reference> references = [] {
    std::vector<Reference> refs;
    auto add = [&refs](const std::string& name, unsigned degree,
                       const std::string& gens) {
      refs.push_back(
          {name, PermGroup::closure(
                     degree, notation::parse_generator_list(gens, degree), 60)});
    };
    refs.push_back({"1", PermGroup::trivial(1)});
    add("Z2", 2, "(1 2)");
    add("Z3", 3, "(1 2 3)");
    add("Z4", 4, "(1 2 3 4)");
    add("Z5", 5, "(1 2 3 4 5)");
    add("Z6", 6, "(1 2 3 4 5 6)");
    add("Z7", 7, "(1 2 3 4 5 6 7)");
    add("Z8", 8, "(1 2 3 4 5 6 7 8)");
    add("Z9", 9, "(1 2 3 4 5 6 7 8 9)");
    add("Z10", 10, "(1 2 3 4 5 6 7 8 9 10)");
    add("Z12", 12, "(1 2 3 4 5 6 7 8 9 10 11 12)");
    add("V4", 4, "(1 2)(3 4);(1 3)(2 4)");
    add("S3", 3, "(1 2 3);(1 2)");
    add("D4", 4, "(1 2 3 4);(1 3)");
    add("Q8", 8, "(1 3 2 4)(5 7 6 8);(1 5 2 6)(3 8 4 7)");
    add("D5", 5, "(1 2 3 4 5);(2 5)(3 4)");
    add("D6", 6, "(1 2 3 4 5 6);(2 6)(3 5)");
    add("A4", 4, "(1 2 3);(1 2)(3 4)");
    add("S4", 4, "(1 2 3 4);(1 2)");
    add("A5", 5, "(1 2 3 4 5);(1 2 3)");
    return refs;
  }();

  if (g.order() <= kDefaultIsoCap) {
    for (const auto& ref : references)
      if (ref.group.order() == g.order() && is_isomorphic(g, ref.group))
        return ref.name;
  }
  return "order-" + std::to_string(g.order()) + "-unrecognized";
}

} // namespace orbistruct
