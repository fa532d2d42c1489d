#ifndef ORBISTRUCT_TEST_HELPERS_HPP
#define ORBISTRUCT_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "orbistruct/cycle_notation.hpp"
#include "orbistruct/perm_group.hpp"
#include "orbistruct/permutation.hpp"

namespace testutil {

inline orbistruct::Permutation perm(const std::string& cycles, unsigned degree) {
  return orbistruct::notation::parse_permutation(cycles, degree);
}

inline orbistruct::PermGroup group_of(const std::string& generators, unsigned degree) {
  return orbistruct::PermGroup::closure(
      degree, orbistruct::notation::parse_generator_list(generators, degree));
}

// The recurring cast: A3 < A4 < A5, all on 5 points.
inline orbistruct::PermGroup a5() { return group_of("(1 2 3 4 5);(1 2 3)", 5); }
inline orbistruct::PermGroup a4_in_5() { return group_of("(1 2 3);(1 2)(3 4)", 5); }
inline orbistruct::PermGroup a3_in_5() { return group_of("(1 2 3)", 5); }
inline orbistruct::PermGroup s4() { return group_of("(1 2 3 4);(1 2)", 4); }
inline orbistruct::PermGroup s3() { return group_of("(1 2 3);(1 2)", 3); }
inline orbistruct::PermGroup z3() { return group_of("(1 2 3)", 3); }

// Parity by counting inversions; an oracle independent of the cycle
// machinery in the library.
inline bool even_by_inversions(const orbistruct::Permutation& p) {
  std::size_t inversions = 0;
  for (unsigned i = 0; i < p.degree(); ++i)
    for (unsigned j = i + 1; j < p.degree(); ++j)
      if (p(i) > p(j))
        ++inversions;
  return inversions % 2 == 0;
}

} // namespace testutil

#endif // ORBISTRUCT_TEST_HELPERS_HPP
