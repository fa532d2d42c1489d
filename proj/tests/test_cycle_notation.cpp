#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "orbistruct/cycle_notation.hpp"
#include "orbistruct/errors.hpp"
#include "test_helpers.hpp"

using namespace orbistruct;
using notation::parse_generator_list;
using notation::parse_permutation;
using notation::parse_product;
using notation::render_cycles;

TEST_CASE("basic expressions") {
  CHECK(parse_permutation("()", 5) == Permutation(5));
  CHECK(parse_permutation("()") == Permutation(1));

  Permutation p = parse_permutation("(1 2 3)", 5);
  CHECK(p(0) == 1);
  CHECK(p(1) == 2);
  CHECK(p(2) == 0);
  CHECK(p(3) == 3);
  CHECK(p(4) == 4);

  // commas and spaces are interchangeable separators
  CHECK(parse_permutation("(1,2)(3,4)") == parse_permutation("(1 2)(3 4)"));

  // degree defaults to the largest point
  CHECK(parse_permutation("(2 5)").degree() == 5);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)"), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1 1 2)"), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1)"), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1 2"), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1 x)"), parse_error);
  CHECK_THROWS_AS(parse_permutation("1 2 3"), parse_error);
  CHECK_THROWS_AS(parse_permutation("(0 1)"), parse_error);
  CHECK_THROWS_AS(parse_permutation(""), parse_error);
  CHECK_THROWS_AS(parse_permutation("() (1 2)"), parse_error);

  try {
    parse_permutation("(1 2)(2 3)");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 6); // the second '2'
  }

  // points above an explicit degree are rejected
  CHECK_THROWS_AS(parse_permutation("(1 6)", 5), validation_error);
}

TEST_CASE("products handle non-disjoint factors, rightmost first") {
  // (1 2) * (2 3): apply (2 3) first, so 1->2? no: 1 -> 1 -> 2, 2 -> 3 -> 3,
  // 3 -> 2 -> 1, i.e. (1 2 3).
  CHECK(parse_product("(1 2)*(2 3)") == parse_permutation("(1 2 3)"));
  CHECK(parse_product("(1 2)*(1 2)", 4) == Permutation(4));
  CHECK(parse_product("(1 2 3)") == parse_permutation("(1 2 3)"));
}

TEST_CASE("generator lists unify degrees") {
  auto gens = parse_generator_list("(1 2 3);(1 2)(4 5)");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].degree() == 5);
  CHECK(gens[1].degree() == 5);
}

TEST_CASE("render is canonical and inverts parse") {
  CHECK(render_cycles(Permutation(7)) == "()");
  CHECK(render_cycles(testutil::perm("(4 5)(1 2 3)", 5)) == "(1 2 3)(4 5)");
  CHECK(render_cycles(testutil::perm("(3 1 2)", 3)) == "(1 2 3)");
}

TEST_CASE("round-trip: exhaustive through degree 7, randomized beyond") {
  for (unsigned degree = 1; degree <= 7; ++degree) {
    std::vector<unsigned> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    do {
      Permutation p{images};
      CHECK(parse_permutation(render_cycles(p), degree) == p);
    } while (std::next_permutation(images.begin(), images.end()));
  }

  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned degree = 8 + static_cast<unsigned>(rng() % 5);
    std::vector<unsigned> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    std::shuffle(images.begin(), images.end(), rng);
    Permutation p{images};
    std::string text = render_cycles(p);
    CHECK(parse_permutation(text, degree) == p);
    CHECK(render_cycles(parse_permutation(text, degree)) == text);
  }
}
