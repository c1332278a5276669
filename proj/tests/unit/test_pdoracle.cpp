#include "hopfknots/pdoracle.hpp"

#include "hopfknots/closedform.hpp"
#include "hopfknots/knot_id.hpp"

#include <doctest.h>

#include <random>

using namespace hopfknots;

namespace {

LaurentPoly ap(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentPoly p(Var::A);
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("crossingless unknot") {
  PlanarDiagram empty;
  CHECK(kauffman_bracket_pd(empty) == LaurentPoly::one(Var::A));
}

TEST_CASE("positive kink") {
  PlanarDiagram kink;
  kink.crossings.push_back({{1, 1, 2, 2}});
  CHECK(kauffman_bracket_pd(kink) == ap({{3, -1}}));
  CHECK(writhe_pd(kink) == 1);
}

TEST_CASE("trefoil closure") {
  const PlanarDiagram pd = torus_braid_pd(2, 3);
  CHECK(pd.crossing_count() == 3);
  CHECK(is_knot_pd(pd));
  CHECK(writhe_pd(pd) == 3);
  CHECK(kauffman_bracket_pd(pd) == ap({{5, -1}, {-3, -1}, {-7, 1}}));
  CHECK(jones_from_pd(pd) == jones_torus(2, 3));
}

TEST_CASE("torus braid structure") {
  CHECK(torus_braid_pd(2, 5).crossing_count() == 5);
  const PlanarDiagram pd34 = torus_braid_pd(3, 4);
  CHECK(pd34.crossing_count() == 8);
  CHECK(is_knot_pd(pd34));
  CHECK(writhe_pd(pd34) == 8);
  CHECK_THROWS_AS(torus_braid_pd(2, 4), ConstraintError);
  CHECK_THROWS_AS(torus_braid_pd(1, 5), ConstraintError);
}

TEST_CASE("oracle equivalence on small torus knots") {
  const std::pair<long long, long long> cases[] = {{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}};
  for (auto [m, n] : cases)
    CHECK(jones_from_pd(torus_braid_pd(m, n)) == jones_torus(m, n));
}

TEST_CASE("a second Reidemeister pair does not change the Jones value") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord base;
    base.strands = 3;
    for (long long rep = 0; rep < 2; ++rep) {
      base.letters.push_back(1);
      base.letters.push_back(2);
    }
    const LaurentPoly reference = jones_from_pd(braid_closure_pd(base));

    BraidWord padded = base;
    std::uniform_int_distribution<int> gen(1, 2), where(0, static_cast<int>(padded.letters.size()));
    const int g = gen(rng);
    const int at = where(rng);
    padded.letters.insert(padded.letters.begin() + at, {g, -g});
    CHECK(jones_from_pd(braid_closure_pd(padded)) == reference);
  }
}

TEST_CASE("split unions pick up a loop factor") {
  // Two disjoint trefoils in one diagram.
  const PlanarDiagram one = torus_braid_pd(2, 3);
  PlanarDiagram two = one;
  for (const auto& x : one.crossings) {
    PdCrossing shifted{};
    for (int i = 0; i < 4; ++i) shifted.e[i] = x.e[i] + 100;
    two.crossings.push_back(shifted);
  }
  LaurentPoly delta(Var::A);
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  const LaurentPoly t = kauffman_bracket_pd(one);
  CHECK(kauffman_bracket_pd(two) == t * t * delta);
  CHECK(!is_knot_pd(two));
  CHECK_THROWS_AS(jones_from_pd(two), MultiComponent);
}

TEST_CASE("state budget") {
  BraidWord w;
  w.strands = 2;
  for (int i = 0; i < 21; ++i) w.letters.push_back(1);
  const PlanarDiagram pd = braid_closure_pd(w);
  CHECK_THROWS_AS(kauffman_bracket_pd(pd), StateBudgetExceeded);
}

TEST_CASE("pd text round-trip") {
  const PlanarDiagram pd = torus_braid_pd(2, 3);
  const PlanarDiagram back = parse_pd(pd_to_string(pd));
  CHECK(back.crossings.size() == pd.crossings.size());
  CHECK(kauffman_bracket_pd(back) == kauffman_bracket_pd(pd));
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), ConstraintError);  // edges not paired
}
