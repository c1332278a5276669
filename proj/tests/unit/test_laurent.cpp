#include "hopfknots/laurent.hpp"
#include "hopfknots/interchange.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hopfknots;

namespace {

LaurentPoly tp(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentPoly p(Var::t);
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

LaurentPoly random_poly(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> nterms(0, 5), exp(-6, 6), coef(-9, 9);
  LaurentPoly p(Var::t);
  const int n = nterms(rng) + (nonzero ? 1 : 0);
  for (int i = 0; i < n; ++i) {
    int c = coef(rng);
    if (nonzero && p.is_zero() && c == 0) c = 1;
    p.add_term(exp(rng), c);
  }
  if (nonzero && p.is_zero()) p.add_term(0, 1);
  return p;
}

}  // namespace

TEST_CASE("ring operations") {
  const LaurentPoly one_minus_t = tp({{0, 1}, {1, -1}});
  const LaurentPoly one_plus_t = tp({{0, 1}, {1, 1}});
  CHECK(one_minus_t * one_plus_t == tp({{0, 1}, {2, -1}}));

  const LaurentPoly p = tp({{-2, 3}, {0, -1}, {5, 7}});
  CHECK((p + (-p)).is_zero());

  // t^-1 (t - t^4) = 1 - t^3
  CHECK(tp({{1, 1}, {4, -1}}).shifted(-1) == tp({{0, 1}, {3, -1}}));

  LaurentPoly a_poly(Var::A);
  a_poly.add_term(0, 1);
  CHECK_THROWS_AS(a_poly + tp({{0, 1}}), VarMismatch);
}

TEST_CASE("exact division") {
  CHECK(div_exact(tp({{0, 1}, {6, -1}}), tp({{0, 1}, {2, -1}})) ==
        tp({{0, 1}, {2, 1}, {4, 1}}));
  // The numerator of the torus (2,3) Jones value.
  CHECK(div_exact(tp({{0, 1}, {3, -1}, {4, -1}, {5, 1}}), tp({{0, 1}, {2, -1}})) ==
        tp({{0, 1}, {2, 1}, {3, -1}}));
  CHECK_THROWS_AS(div_exact(tp({{0, 1}, {3, -1}}), tp({{0, 1}, {2, -1}})),
                  NonzeroRemainder);

  // Laurent shifts pass through division.
  CHECK(div_exact(tp({{-3, 1}, {3, -1}}).shifted(-4), tp({{0, 1}, {2, -1}}).shifted(5)) ==
        div_exact(tp({{-3, 1}, {3, -1}}), tp({{0, 1}, {2, -1}})).shifted(-9));
}

TEST_CASE("division round-trips on random products") {
  std::mt19937 rng(20240811);
  int ran = 0;
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng, true);
    CHECK(div_exact(a * b, b) == a);
    ++ran;
  }
  CHECK(ran == 300);
}

TEST_CASE("substitute_inverse") {
  const LaurentPoly p = tp({{1, 1}, {3, 1}, {4, -1}});
  CHECK(substitute_inverse(p) == tp({{-1, 1}, {-3, 1}, {-4, -1}}));
  CHECK(substitute_inverse(LaurentPoly::one(Var::t)) == LaurentPoly::one(Var::t));
  const LaurentPoly q = tp({{0, 1}, {1, -1}, {5, 1}, {6, -1}});
  CHECK(substitute_inverse(substitute_inverse(q)) == q);
}

TEST_CASE("variable conversion through t = A^-4") {
  CHECK(convert(LaurentPoly::monomial(Var::A, -4, 1), Var::t) ==
        LaurentPoly::monomial(Var::t, 1, 1));

  LaurentPoly p(Var::A);
  p.add_term(-8, 1);
  p.add_term(4, 1);
  CHECK(convert(p, Var::t) == tp({{2, 1}, {-1, 1}}));

  CHECK_THROWS_AS(convert(LaurentPoly::monomial(Var::A, 3, 1), Var::t), NotDivisible);

  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly q = random_poly(rng);
    CHECK(convert(convert(q, Var::A), Var::t) == q);
  }
}

TEST_CASE("gap signatures") {
  const GapSignature sig = gap_signature(tp({{0, 1}, {3, -1}, {6, -1}, {7, 1}}));
  CHECK(sig.coefficients == std::vector<Int>{1, -1, -1, 1});
  CHECK(sig.gaps == std::vector<std::int64_t>{3, 3, 1});
  CHECK(sig.lowest_coefficient_sign == 1);

  // 1 - t^{n+1} - t^{n+2} + t^{2n+1} at n = 4 has gaps (5,1,3).
  const GapSignature tn4 = gap_signature(tp({{0, 1}, {5, -1}, {6, -1}, {9, 1}}));
  CHECK(tn4.gaps == std::vector<std::int64_t>{5, 1, 3});

  const GapSignature mono = gap_signature(tp({{7, 1}}));
  CHECK(mono.gaps.empty());
  CHECK(mono.coefficients == std::vector<Int>{1});

  CHECK_THROWS_AS(gap_signature(LaurentPoly::zero(Var::t)), std::domain_error);
}

TEST_CASE("gap signature properties") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random_poly(rng, true);
    std::uniform_int_distribution<int> shift(-10, 10);
    const int k = shift(rng);
    CHECK(gap_signature(p) == gap_signature(p.shifted(k)));

    // Inversion reverses both lists.
    GapSignature fwd = gap_signature(p);
    GapSignature rev = gap_signature(substitute_inverse(p));
    std::reverse(fwd.coefficients.begin(), fwd.coefficients.end());
    std::reverse(fwd.gaps.begin(), fwd.gaps.end());
    CHECK(rev.coefficients == fwd.coefficients);
    CHECK(rev.gaps == fwd.gaps);

    // Signature + lowest exponent 0 reconstructs the shifted polynomial.
    const GapSignature sig = gap_signature(p);
    const LaurentPoly rebuilt = poly_from_signature(sig, Var::t);
    CHECK(gap_signature(rebuilt) == sig);
    CHECK(rebuilt == p.shifted(-p.min_exp()));
  }
}

TEST_CASE("text rendering and parsing") {
  const LaurentPoly p = tp({{0, -1}, {1, 1}, {2, 1}, {5, -1}});
  CHECK(p.str() == "-1 + t + t^2 - t^5");
  CHECK(parse_poly(p.str(), Var::t) == p);

  const LaurentPoly q = tp({{0, 1}, {5, -1}, {7, -1}, {11, 2}, {12, -1}});
  CHECK(q.str() == "1 - t^5 - t^7 + 2t^11 - t^12");
  CHECK(parse_poly("1-t^5-t^7+2t^11-t^12", Var::t) == q);

  CHECK(parse_poly("t^-3 + 4", Var::t) == tp({{-3, 1}, {0, 4}}));
  CHECK(LaurentPoly::zero(Var::t).str() == "0");
  CHECK(parse_poly("0", Var::t).is_zero());
  CHECK_THROWS_AS(parse_poly("1 + + t", Var::t), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x^2", Var::t), std::invalid_argument);

  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly r = random_poly(rng);
    CHECK(parse_poly(r.str(), Var::t) == r);
  }
}

TEST_CASE("json interchange round-trips byte-identically") {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = random_poly(rng);
    const auto j = poly_to_json(p);
    const std::string bytes = j.dump();
    const LaurentPoly back = poly_from_json(nlohmann::json::parse(bytes));
    CHECK(back == p);
    CHECK(poly_to_json(back).dump() == bytes);
  }

  // Coefficients beyond 64 bits ride as strings.
  LaurentPoly big(Var::t);
  big.add_term(0, Int("123456789012345678901234567890"));
  const std::string bytes = poly_to_json(big).dump();
  CHECK(poly_from_json(nlohmann::json::parse(bytes)) == big);
  CHECK(poly_to_json(poly_from_json(nlohmann::json::parse(bytes))).dump() == bytes);
}
