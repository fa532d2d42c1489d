#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "orbistruct/errors.hpp"
#include "orbistruct/perm_group.hpp"
#include "test_helpers.hpp"

using namespace orbistruct;
using testutil::a3_in_5;
using testutil::a4_in_5;
using testutil::a5;
using testutil::group_of;
using testutil::perm;

TEST_CASE("closure produces the expected small groups") {
  CHECK(a4_in_5().order() == 12);
  CHECK(a5().order() == 60);
  CHECK(PermGroup::closure(5, {}).order() == 1);
  CHECK(PermGroup::closure(5, {Permutation(5)}).order() == 1);

  // order cap
  CHECK_THROWS_AS(PermGroup::closure(
                      5, {perm("(1 2 3 4 5)", 5), perm("(1 2 3)", 5)}, 59),
                  resource_error);
}

TEST_CASE("elements are canonically sorted and deduplicated") {
  PermGroup g = testutil::s3();
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  for (const auto& x : g.elements())
    CHECK(g.contains(x));
  CHECK(g == group_of("(1 2);(2 3)", 3)); // same group, different generators
}

TEST_CASE("subgroup relations") {
  CHECK(is_subgroup(a3_in_5(), a4_in_5()));
  CHECK(is_subgroup(a4_in_5(), a5()));
  CHECK_FALSE(is_subgroup(a4_in_5(), a3_in_5())); // order obstruction

  // S3 on {1,2,3} contains the odd (1 2), so it is not inside A5;
  // cross-check oddness with the inversion-count oracle.
  PermGroup s3_in_5 = group_of("(1 2 3);(1 2)", 5);
  bool has_odd = false;
  for (const auto& x : s3_in_5.elements())
    if (!testutil::even_by_inversions(x))
      has_odd = true;
  CHECK(has_odd);
  CHECK_FALSE(is_subgroup(s3_in_5, a5()));

  // degree mismatch is false, not an error
  CHECK_FALSE(is_subgroup(testutil::s3(), a5()));
}

TEST_CASE("normalizers and centralizers of the alternating tower") {
  PermGroup gamma = a5();
  PermGroup b = a4_in_5();
  PermGroup delta = a3_in_5();

  PermGroup n_delta = normalizer(gamma, delta);
  CHECK(n_delta.order() == 6);
  PermGroup c_delta = centralizer(gamma, delta);
  CHECK(c_delta == delta);

  CHECK(normalizer(gamma, b) == b);
  CHECK(centralizer(gamma, b).order() == 1);

  // everything normalizes and centralizes the trivial subgroup
  PermGroup trivial = PermGroup::trivial(5);
  CHECK(normalizer(gamma, trivial) == gamma);
  CHECK(centralizer(gamma, trivial) == gamma);

  CHECK_THROWS_AS(normalizer(b, gamma), validation_error);
  CHECK_THROWS_AS(centralizer(b, gamma), validation_error);
}

TEST_CASE("centers") {
  CHECK(center(a5()).order() == 1);
  CHECK(center(a4_in_5()).order() == 1);
  CHECK(center(testutil::z3()) == testutil::z3());
  CHECK(center(testutil::s3()).order() == 1); // brute force agrees: no odd-order center
}

TEST_CASE("subgroup conjugacy classes in A5") {
  PermGroup gamma = a5();
  CHECK(subgroup_conjugacy_class(gamma, a3_in_5()).size() == 10);
  CHECK(subgroup_conjugacy_class(gamma, a4_in_5()).size() == 5);
  CHECK(subgroup_conjugacy_class(gamma, gamma).size() == 1);

  // orbit-stabilizer, explicitly
  for (const auto& h : {a3_in_5(), a4_in_5()}) {
    auto cls = subgroup_conjugacy_class(gamma, h);
    CHECK(cls.size() * normalizer(gamma, h).order() == gamma.order());
  }
}

namespace {

// Brute-force subgroup enumeration over all element subsets; only feasible
// for tiny groups, which is exactly why it can serve as the oracle for the
// cyclic-join algorithm.
std::set<std::vector<Permutation>> subgroups_by_brute_force(const PermGroup& g) {
  const auto& elems = g.elements();
  std::size_t n = elems.size();
  REQUIRE(n <= 12);
  std::set<std::vector<Permutation>> found;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Permutation> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i))
        subset.push_back(elems[i]);
    if (subset.empty())
      continue;
    bool contains_identity = false;
    for (const auto& x : subset)
      if (x.is_identity())
        contains_identity = true;
    if (!contains_identity)
      continue;
    bool closed = true;
    for (const auto& x : subset) {
      for (const auto& y : subset) {
        Permutation xy = compose(x, y);
        if (!std::binary_search(subset.begin(), subset.end(), xy)) {
          closed = false;
          break;
        }
      }
      if (!closed)
        break;
    }
    if (closed)
      found.insert(subset);
  }
  return found;
}

} // namespace

TEST_CASE("all_subgroups of A4 matches the brute-force oracle") {
  PermGroup a4 = group_of("(1 2 3);(1 2)(3 4)", 4);
  auto oracle = subgroups_by_brute_force(a4);
  CHECK(oracle.size() == 10);

  auto computed = all_subgroups(a4);
  CHECK(computed.size() == 10);
  std::set<std::vector<Permutation>> computed_sets;
  for (const auto& s : computed)
    computed_sets.insert(s.elements());
  CHECK(computed_sets == oracle);

  // order profile: 1, three Z2, four Z3, V4, A4
  std::multiset<std::size_t> orders;
  for (const auto& s : computed)
    orders.insert(s.order());
  CHECK(orders == std::multiset<std::size_t>{1, 2, 2, 2, 3, 3, 3, 3, 4, 12});
}

TEST_CASE("all_subgroups of A5 and the conjugacy-class recount") {
  PermGroup gamma = a5();
  auto subgroups = all_subgroups(gamma);
  CHECK(subgroups.size() == 59);

  // Independent recount: group the list into conjugacy classes and compare
  // each class size against the index of the normalizer.
  std::set<std::vector<Permutation>> remaining;
  for (const auto& s : subgroups)
    remaining.insert(s.elements());
  std::size_t recount = 0;
  while (!remaining.empty()) {
    PermGroup rep = PermGroup::from_elements(5, *remaining.begin());
    auto cls = subgroup_conjugacy_class(gamma, rep);
    CHECK(cls.size() == gamma.order() / normalizer(gamma, rep).order());
    for (const auto& conj : cls) {
      CHECK(remaining.erase(conj.elements()) == 1); // closed under conjugation
    }
    recount += cls.size();
  }
  CHECK(recount == 59);

  CHECK(all_subgroups(PermGroup::trivial(3)).size() == 1);
  CHECK_THROWS_AS(all_subgroups(gamma, 59), resource_error);
}

TEST_CASE("all_subgroups results are closed under intersection") {
  PermGroup s4 = testutil::s4();
  auto subgroups = all_subgroups(s4);
  CHECK(subgroups.size() == 30);
  std::set<std::vector<Permutation>> keys;
  for (const auto& s : subgroups)
    keys.insert(s.elements());
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = subgroups[rng() % subgroups.size()];
    const auto& b = subgroups[rng() % subgroups.size()];
    CHECK(keys.count(intersection(a, b).elements()) == 1);
  }
}

TEST_CASE("Lagrange over every subgroup of the tower groups") {
  for (const auto& g : {a5(), testutil::s4().extended(5)}) {
    for (const auto& h : all_subgroups(g))
      CHECK(g.order() % h.order() == 0);
  }
}

TEST_CASE("product sets and small generating sets") {
  PermGroup gamma = a5();
  PermGroup delta = a3_in_5();
  PermGroup n_delta = normalizer(gamma, delta);

  auto products = product_set(delta, n_delta);
  CHECK(products.size() == 6); // A3 . S3 = S3

  auto gens = gamma.small_generating_set();
  CHECK(gens.size() <= 3);
  CHECK(PermGroup::closure(5, gens) == gamma);

  CHECK(PermGroup::trivial(4).small_generating_set().empty());
}

TEST_CASE("from_elements validates group axioms") {
  CHECK_THROWS_AS(PermGroup::from_elements(3, {perm("(1 2)", 3)}), validation_error);
  CHECK_THROWS_AS(PermGroup::from_elements(
                      3, {Permutation(3), perm("(1 2 3)", 3)}),
                  validation_error);
  CHECK_NOTHROW(PermGroup::from_elements(
      3, {Permutation(3), perm("(1 2 3)", 3), perm("(1 3 2)", 3)}));
}
