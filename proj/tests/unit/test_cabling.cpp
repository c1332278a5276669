#include "hopfknots/cabling.hpp"

#include <doctest.h>

#include <numeric>

using namespace hopfknots;

namespace {

LaurentPoly ap(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentPoly p(Var::A);
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

LaurentPoly tp(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentPoly p(Var::t);
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(0).is_zero());
  CHECK(quantum_integer(1) == LaurentPoly::one(Var::A));
  CHECK(quantum_integer(2) == ap({{2, 1}, {-2, 1}}));
  CHECK(quantum_integer(3) == ap({{4, 1}, {0, 1}, {-4, 1}}));
  for (long long n = 1; n <= 10; ++n)
    CHECK(quantum_integer(-n) == -quantum_integer(n));
}

TEST_CASE("colored Jones basics") {
  CHECK(colored_jones(KnotId::tn(0), 2) == quantum_integer(2));
  CHECK(colored_jones(KnotId::tn(1), 5) == quantum_integer(5));

  // V(2) = [2] * V for the ordinary Jones value.
  CHECK(colored_jones(KnotId::torus(2, 3), 2) ==
        quantum_integer(2) * convert(jones_torus(2, 3), Var::A));

  // Color one is trivial for every knot.
  CHECK(colored_jones(KnotId::torus(2, 3), 1) == LaurentPoly::one(Var::A));
  CHECK(colored_jones(KnotId::torus(3, 5), 1) == LaurentPoly::one(Var::A));
  CHECK(colored_jones(KnotId::cable({{{2, 3}, {2, 13}}}), 1) == LaurentPoly::one(Var::A));

  // A (1,q) first stage is the unknot.
  CHECK(colored_jones(KnotId::cable({{{1, 2}}}), 4) == quantum_integer(4));
}

TEST_CASE("J_K(n) values") {
  CHECK(j_colored(KnotId::tn(0), 3) == ap({{6, 1}, {-6, -1}}));
  CHECK(j_colored(KnotId::tn(0), 5) == ap({{10, 1}, {-10, -1}}));

  const LaurentPoly j2 = j_colored(KnotId::torus(2, 3), 2);
  CHECK(j2 == ap({{0, 1}, {-12, -1}, {-16, -1}, {-20, 1}}));
  // Its t-form is the familiar four-term J of the trefoil.
  CHECK(j_normalize(convert(j2, Var::t)) == tp({{0, 1}, {3, -1}, {4, -1}, {5, 1}}));
}

TEST_CASE("color one always gives the loop factor") {
  CHECK(colored_torus_direct(2, 3, 1) == ap({{2, 1}, {-2, -1}}));
  CHECK(j_colored(KnotId::tn(0), 1) == ap({{2, 1}, {-2, -1}}));
  CHECK(j_colored(KnotId::torus(3, 7), 1) == ap({{2, 1}, {-2, -1}}));
  CHECK(j_colored(KnotId::cable({{{2, 3}, {2, 13}}}), 1) == ap({{2, 1}, {-2, -1}}));
}

TEST_CASE("two colored-Jones routes agree on torus knots") {
  for (long long p : {2, 3})
    for (long long q = p + 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long long n = 1; n <= 5; ++n)
        CHECK(colored_torus_direct(p, q, n) == j_colored(KnotId::torus(p, q), n));
    }
}

TEST_CASE("cable Jones matches the torus route on single stages") {
  CHECK(jones_cable({{{2, 3}}}) == jones_torus(2, 3));
  CHECK(jones_cable({{{3, 5}}}) == jones_torus(3, 5));
  CHECK(jones_cable({{{1, 2}, {2, 5}}}) == jones_torus(2, 5));
}

TEST_CASE("color 2 of the cabling formula reproduces the J polynomial") {
  for (long long p : {2, 3})
    for (long long q = p + 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(j_normalize(convert(j_colored(KnotId::torus(p, q), 2), Var::t)) ==
            j_polynomial(KnotId::torus(p, q)));
    }
}

TEST_CASE("l sequences") {
  CHECK(l_sequence({{{2, 3}}}) == std::vector<long long>{-2});
  CHECK(l_sequence({{{2, 3}, {2, 13}}}) == std::vector<long long>{-2, -30});
  CHECK(l_sequence({{{3, 4}}}) == std::vector<long long>{-10});
  // Through a trivial first stage the recursion reproduces the direct value.
  CHECK(l_sequence({{{1, 2}, {2, 5}}}).back() == l_sequence({{{2, 5}}}).back());
}

TEST_CASE("gap predictions") {
  const GapPrediction p23 = predicted_gap_structure({{{2, 3}}}, 2);
  CHECK(p23.top == 0);
  REQUIRE(p23.gaps);
  CHECK(*p23.gaps == std::array<long long, 3>{12, 4, 4});

  CHECK(predicted_gap_structure({{{2, 3}}}, 1).top == 2);
  CHECK_FALSE(predicted_gap_structure({{{2, 3}}}, 1).gaps.has_value());

  const GapPrediction dbl = predicted_gap_structure({{{2, 3}, {2, 13}}}, 2);
  CHECK(dbl.top == -28);
  REQUIRE(dbl.gaps);
  CHECK((*dbl.gaps)[0] == 20);

  for (long long n = 2; n <= 4; ++n) {
    CHECK(gap_prediction_matches({{{2, 3}}}, n));
    CHECK(gap_prediction_matches({{{2, 5}}}, n));
    CHECK(gap_prediction_matches({{{3, 4}}}, n));
    CHECK(gap_prediction_matches({{{2, 3}, {2, 13}}}, n));
  }
}

TEST_CASE("doubly iterated closed form") {
  CHECK(jk_double(1, 5) == tp({{0, 1}, {3, -1}, {6, -1}, {7, 1}}));
  CHECK(jk_double(2, 13) ==
        tp({{0, 1}, {5, -1}, {7, -1}, {10, 1}, {11, 1}, {12, -2}, {13, 1}}));
  for (long long p = 1; p <= 5; ++p)
    CHECK(jk_double(p, 2 * p * (p + 1) + 1) == j_closed_branch(Family::Kpp, p + 1, p));

  // The closed form agrees with the full cabling computation, also away
  // from the boundary value of q.
  CHECK(jk_double(2, 13) == j_polynomial_cable({{{2, 3}, {2, 13}}}));
  CHECK(jk_double(2, 15) == j_polynomial_cable({{{2, 3}, {2, 15}}}));
  CHECK(jk_double(1, 5) == j_polynomial_cable({{{1, 2}, {2, 5}}}));

  CHECK_THROWS_AS(jk_double(2, 12), ConstraintError);
  CHECK_THROWS_AS(jk_double(2, 11), ConstraintError);
}

TEST_CASE("algebraic classification") {
  const AlgebraicVerdict match = classify_algebraic({{{2, 3}, {2, 13}}});
  CHECK(match.h.exact());
  CHECK(match.h.lower == 1);
  REQUIRE(match.matched_knot);
  CHECK(*match.matched_knot == KnotId::fam_kpp(3, 2));
  CHECK(match.c_alg == 1);
  CHECK(match.fiedler_lower_bound == 1);
  CHECK(match.fiedler_hypothesis_met);

  const AlgebraicVerdict miss = classify_algebraic({{{2, 3}, {2, 15}}});
  CHECK(miss.h.lower == 2);
  CHECK(!miss.h.upper);
  CHECK(!miss.matched_knot);
  CHECK(!miss.c_alg);
  CHECK(miss.fiedler_lower_bound == 1);

  const AlgebraicVerdict t35 = classify_algebraic({{{3, 5}}});
  CHECK(t35.h.exact());
  CHECK(t35.h.lower == 1);
  REQUIRE(t35.matched_knot);
  CHECK(*t35.matched_knot == KnotId::fam_kpp(3, 1));
  CHECK(t35.fiedler_lower_bound == 1);

  const AlgebraicVerdict unknot_cable = classify_algebraic({{{2, 3}}});
  CHECK(unknot_cable.h.exact());
  CHECK(unknot_cable.h.lower == 0);
  REQUIRE(unknot_cable.matched_knot);
  CHECK(*unknot_cable.matched_knot == KnotId::tn(2));
  CHECK(unknot_cable.c_alg == 0);

  const AlgebraicVerdict t25 = classify_algebraic({{{1, 2}, {2, 5}}});
  CHECK(t25.h.exact());
  CHECK(t25.h.lower == 1);
  REQUIRE(t25.matched_knot);
  CHECK(*t25.matched_knot == KnotId::fam_kpp(2, 1));

  // Torus knots with a wide gap keep their interval data.
  const AlgebraicVerdict t27 = classify_algebraic({{{2, 7}}});
  CHECK(t27.h.exact());
  CHECK(t27.h.lower == 2);
  CHECK(!t27.matched_knot);
}

TEST_CASE("cable type validity") {
  CHECK_THROWS_AS(validate_cable_type({{{2, 3}, {2, 11}}}), ConstraintError);
  CHECK_THROWS_AS(validate_cable_type({{{2, 4}}}), ConstraintError);
  CHECK_THROWS_AS(validate_cable_type({{{3, 2}}}), ConstraintError);
  CHECK_THROWS_AS(validate_cable_type({{{2, 3}, {1, 25}}}), ConstraintError);
  CHECK_NOTHROW(validate_cable_type({{{2, 3}, {2, 13}}}));
  CHECK_NOTHROW(validate_cable_type({{{1, 2}, {2, 5}}}));
}
