#include "hopfknots/expr.hpp"

#include <doctest.h>

#include <random>

using namespace hopfknots;

TEST_CASE("knot expressions parse to the expected ids") {
  CHECK(parse_knot_expr("K''(3,1)") == KnotId::fam_kpp(3, 1));
  CHECK(parse_knot_expr("mirror(T(2,5))") == KnotId::mirror(KnotId::torus(2, 5)));
  CHECK(parse_knot_expr("Tn(-4)") == KnotId::tn(-4));
  CHECK(parse_knot_expr(" K' ( 2 , 1 ) ") == KnotId::fam_kp(2, 1));
  CHECK(parse_knot_expr("cable[(2,3);(2,13)]") ==
        KnotId::cable({{{2, 3}, {2, 13}}}));
  CHECK(parse_knot_expr("mirror(mirror(K(2,1)))") == KnotId::fam_k(2, 1));
}

TEST_CASE("constraint violations are reported as such") {
  CHECK_THROWS_AS(parse_knot_expr("K(1,2)"), ConstraintError);
  CHECK_THROWS_AS(parse_knot_expr("T(2,4)"), ConstraintError);
  CHECK_THROWS_AS(parse_knot_expr("K''(1,1)"), ConstraintError);
  CHECK_THROWS_AS(parse_knot_expr("cable[(2,3);(2,11)]"), ConstraintError);
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parse_knot_expr("Q(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_knot_expr("K(1,"), ParseError);
  CHECK_THROWS_AS(parse_knot_expr("K(1,1) extra"), ParseError);
  try {
    parse_knot_expr("K(1,1) extra");
  } catch (const ParseError& e) {
    CHECK(e.position >= 6);
  }
}

TEST_CASE("parsers reject garbage with exceptions, never crash") {
  std::mt19937 rng(17);
  const std::string alphabet = "TKnmirocable'()[];,+-^0123456789 t";
  std::uniform_int_distribution<int> len(0, 24);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int parsed = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    for (int j = len(rng); j > 0; --j) s += alphabet[pick(rng)];
    try {
      (void)parse_knot_expr(s);
      ++parsed;
    } catch (const std::invalid_argument&) {
    }
  }
  CHECK(parsed >= 0);
  CHECK_THROWS_AS(parse_knot_expr("T(99999999999999999999999,3)"), ParseError);
}

TEST_CASE("parse inverts printing on canonical forms") {
  const KnotId ids[] = {
      KnotId::tn(0),
      KnotId::tn(7),
      KnotId::torus(2, 9),
      KnotId::fam_k(4, 2),
      KnotId::fam_kp(3, 3),
      KnotId::fam_kpp(2, 5),
      KnotId::cable({{{2, 3}, {2, 13}}}),
      KnotId::mirror(KnotId::fam_kpp(3, 1)),
  };
  for (const auto& k : ids) CHECK(parse_knot_expr(k.str()) == k);
}
