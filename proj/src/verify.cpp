#include "hopfknots/verify.hpp"

#include "hopfknots/cabling.hpp"
#include "hopfknots/closedform.hpp"
#include "hopfknots/jclass.hpp"
#include "hopfknots/pdoracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace hopfknots::verify {

namespace {

struct Check {
  int index;
  std::string name;
  // Returns empty string on success, a failure description otherwise.
  std::function<std::string(Level)> run;
  double time_limit_seconds = 0.0;  // 0 = no stated limit
};

std::string ok() { return {}; }

LaurentPoly neg_a_pow(std::int64_t e) {
  return LaurentPoly::monomial(Var::A, e, (e % 2 == 0) ? 1 : -1);
}

// ---- criterion implementations -------------------------------------------

std::string check_oracle_grounding(Level) {
  const std::pair<long long, long long> cases[] = {
      {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}};
  for (auto [m, n] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const LaurentPoly from_pd = jones_from_pd(torus_braid_pd(m, n));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (from_pd != jones_torus(m, n))
      return "state sum disagrees with the closed form at T(" +
             std::to_string(m) + "," + std::to_string(n) + ")";
    if (secs > 1.0)
      return "T(" + std::to_string(m) + "," + std::to_string(n) +
             ") took " + std::to_string(secs) + "s (> 1s)";
  }
  return ok();
}

std::string check_strategy_equality(Level level) {
  const long long lim = level == Level::Full ? 25 : 10;
  for (Family which : {Family::K, Family::Kp})
    for (long long a = 1; a <= lim; ++a)
      for (long long b = 1; b <= a; ++b)
        if (bracket_family(which, a, b, BracketStrategy::Recursion) !=
            bracket_family(which, a, b, BracketStrategy::Closed))
          return "recursion != closed at (" + std::to_string(a) + "," +
                 std::to_string(b) + ")";
  for (long long a = 2; a <= lim; ++a)
    for (long long b = 1; b <= lim; ++b)
      if (bracket_family(Family::Kpp, a, b, BracketStrategy::Recursion) !=
          bracket_family(Family::Kpp, a, b, BracketStrategy::Closed))
        return "K'' recursion != closed at (" + std::to_string(a) + "," +
               std::to_string(b) + ")";
  return ok();
}

std::string check_framing_identity(Level level) {
  const long long lim = level == Level::Full ? 25 : 10;
  auto check_one = [](const KnotId& k, Family which) -> bool {
    const LaurentPoly bracket =
        bracket_family(which, k.a(), k.b(), BracketStrategy::Recursion);
    const LaurentPoly framed = convert(neg_a_pow(-3 * writhe(k)) * bracket, Var::t);
    return framed == jones(k);
  };
  for (long long a = 1; a <= lim; ++a)
    for (long long b = 1; b <= a; ++b) {
      if (!check_one(KnotId::fam_k(a, b), Family::K))
        return "framing identity fails for K(" + std::to_string(a) + "," +
               std::to_string(b) + ")";
      if (!check_one(KnotId::fam_kp(a, b), Family::Kp))
        return "framing identity fails for K'(" + std::to_string(a) + "," +
               std::to_string(b) + ")";
    }
  for (long long a = 2; a <= lim; ++a)
    for (long long b = 1; b <= lim; ++b)
      if (!check_one(KnotId::fam_kpp(a, b), Family::Kpp))
        return "framing identity fails for K''(" + std::to_string(a) + "," +
               std::to_string(b) + ")";
  return ok();
}

std::string check_uv_and_telescoping(Level level) {
  const long long nlim = level == Level::Full ? 30 : 10;
  for (long long n = -nlim; n <= nlim; ++n) {
    const TnBracketParts parts_n = tn_bracket_parts(n);
    const TnBracketParts parts_n2 = tn_bracket_parts(n - 2);
    if (!(parts_n.v + parts_n2.u.shifted(2)).is_zero())
      return "V_n + A^2 U_{n-2} != 0 at n=" + std::to_string(n);
    if (!(parts_n.v_prime + parts_n2.u_prime.shifted(-2)).is_zero())
      return "V'_n + A^-2 U'_{n-2} != 0 at n=" + std::to_string(n);
    // The two splits reassemble to the same bracket numerator.
    LaurentPoly one_minus_t2(Var::A);
    one_minus_t2.add_term(0, 1);
    one_minus_t2.add_term(-8, -1);
    const LaurentPoly scaled = bracket_tn(n) * one_minus_t2;
    if (parts_n.u + parts_n.v != scaled || parts_n.u_prime + parts_n.v_prime != scaled)
      return "bracket parts do not reassemble at n=" + std::to_string(n);
  }
  const long long slim = level == Level::Full ? 20 : 8;
  const long long mlim = level == Level::Full ? 10 : 4;
  for (long long n = -slim; n <= slim; ++n)
    for (long long m = 1; m <= mlim; ++m)
      for (bool primed : {false, true})
        if (telescoped_sum(n, m, primed, SumStrategy::Direct) !=
            telescoped_sum(n, m, primed, SumStrategy::Closed))
          return "telescoped sum mismatch at n=" + std::to_string(n) +
                 ", m=" + std::to_string(m) + (primed ? " (primed)" : "");
  return ok();
}

std::string check_branch_audit(Level level) {
  const long long lim = level == Level::Full ? 30 : 12;
  for (long long a = 1; a <= lim; ++a)
    for (long long b = 1; b <= a; ++b) {
      if (j_closed_branch(Family::K, a, b) != j_polynomial(KnotId::fam_k(a, b)))
        return "J branch formula wrong for K(" + std::to_string(a) + "," +
               std::to_string(b) + ")";
      if (j_closed_branch(Family::Kp, a, b) != j_polynomial(KnotId::fam_kp(a, b)))
        return "J branch formula wrong for K'(" + std::to_string(a) + "," +
               std::to_string(b) + ")";
    }
  for (long long a = 2; a <= lim; ++a)
    for (long long b = 1; b <= lim; ++b)
      if (j_closed_branch(Family::Kpp, a, b) != j_polynomial(KnotId::fam_kpp(a, b)))
        return "J branch formula wrong for K''(" + std::to_string(a) + "," +
               std::to_string(b) + ")";
  return ok();
}

std::string check_eight_knot_table(Level) {
  const auto table = rolfsen_table();
  if (table.size() != 8) return "table does not have eight entries";
  const std::map<std::string, std::string> expected = {
      {"K(1,1)", "4_1"},           {"K(2,1)", "9_42"},
      {"K'(1,1)", "3_1"},          {"K'(2,1)", "5_2"},
      {"K'(3,1)", "10_132"},       {"K'(2,2)", "10_145"},
      {"K''(2,1)", "mirror of 5_1 = T(2,5)"},
      {"K''(3,1)", "10_124 = T(3,5)"},
  };
  for (const auto& [knot, name] : table) {
    auto it = expected.find(knot.str());
    if (it == expected.end() || it->second != name)
      return "unexpected table entry " + knot.str() + " = " + name;
    const IdentifyResult found = identify(j_polynomial(knot));
    bool contains = false;
    for (const auto& m : found.matches)
      if (m == knot) contains = true;
    if (!contains) return "identify does not recover " + knot.str();
    if (knot == KnotId::fam_k(2, 1)) {
      if (!found.ambiguous || found.matches.size() != 2)
        return "the K(2,1)/K(3,1) ambiguity is not flagged";
    } else if (found.matches.size() != 1) {
      return knot.str() + " should identify uniquely";
    }
  }
  return ok();
}

std::string check_distinctness(Level level) {
  const long long span = level == Level::Full ? 60 : 40;
  const auto census = enumerate_family(span);
  std::map<std::string, std::vector<KnotId>> by_j;
  for (const auto& entry : census) by_j[entry.j.str()].push_back(entry.knot);
  for (const auto& [j, knots] : by_j) {
    if (knots.size() == 1) continue;
    if (knots.size() == 2 && knots[0] == KnotId::fam_k(2, 1) &&
        knots[1] == KnotId::fam_k(3, 1))
      continue;
    std::string who;
    for (const auto& k : knots) who += k.str() + " ";
    return "unexpected J collision: " + who;
  }
  if (by_j.size() + 1 != census.size())
    return "expected exactly one collision pair in the census";
  return ok();
}

std::string check_coefficient_bound(Level level) {
  const long long lim = level == Level::Full ? 40 : 15;
  Int max_abs = 0;
  auto scan = [&max_abs](const KnotId& k) -> bool {
    const LaurentPoly v = jones(k);
    for (const auto& [e, c] : v.terms()) {
      Int a = c < 0 ? Int(-c) : c;
      if (a > max_abs) max_abs = a;
      if (a > 2) return false;
    }
    return true;
  };
  for (long long a = 1; a <= lim; ++a)
    for (long long b = 1; b <= a; ++b)
      if (!scan(KnotId::fam_k(a, b)) || !scan(KnotId::fam_kp(a, b)))
        return "coefficient above 2 at (a,b)=(" + std::to_string(a) + "," +
               std::to_string(b) + ")";
  for (long long a = 2; a <= lim; ++a)
    for (long long b = 1; b <= lim; ++b)
      if (!scan(KnotId::fam_kpp(a, b)))
        return "coefficient above 2 at K''(" + std::to_string(a) + "," +
               std::to_string(b) + ")";
  if (max_abs != 2) return "the bound 2 is never attained (extremal case missing)";
  return ok();
}

std::string check_mirror_analysis(Level level) {
  const long long span = level == Level::Full ? 60 : 40;
  for (const auto& entry : enumerate_family(span)) {
    const MirrorStatus st = mirror_status(entry.knot);
    const std::string who = entry.knot.str();
    if (who == "Tn(0)" || who == "K(1,1)") {
      if (st.kind != MirrorStatus::Kind::Amphichiral)
        return who + " should be amphichiral";
    } else if (who == "Tn(2)") {
      if (st.kind != MirrorStatus::Kind::MirrorInFamily ||
          !(*st.mirror == KnotId::fam_kp(1, 1)))
        return "mirror of Tn(2) should be K'(1,1)";
    } else if (who == "K'(1,1)") {
      if (st.kind != MirrorStatus::Kind::MirrorInFamily ||
          !(*st.mirror == KnotId::tn(2)))
        return "mirror of K'(1,1) should be Tn(2)";
    } else if (st.kind != MirrorStatus::Kind::MirrorExceedsOne) {
      return who + " unexpectedly has a mirror with Hopf crossing number <= 1";
    }
  }
  return ok();
}

std::string check_torus_hopf(Level) {
  // The displayed small cases first.
  struct Expect {
    long long m, n, lower;
    std::optional<long long> upper;
  };
  const Expect cases[] = {
      {3, 4, 0, 0}, {4, 7, 2, 2}, {2, 9, 2, 3}, {2, 5, 1, 1},
      {2, 7, 2, 2}, {3, 5, 1, 1}, {2, 3, 0, 0},
  };
  for (const auto& c : cases) {
    const HopfInfo h = hopf_number(KnotId::torus(c.m, c.n));
    if (h.lower != c.lower || h.upper != c.upper)
      return "wrong Hopf data for T(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
  }
  // Systematic sweep against the displayed bounds.
  for (long long m = 2; m <= 10; ++m)
    for (long long k = 1; k <= 12; ++k) {
      if (std::gcd(m, m + k) != 1) continue;
      const HopfInfo h = hopf_number(KnotId::torus(m, m + k));
      if (k <= 3) {
        const long long want = (m == 2 && k == 3) ? 1 : k - 1;
        if (!h.exact() || h.lower != want)
          return "T(" + std::to_string(m) + "," + std::to_string(m + k) +
                 ") should have exact Hopf number " + std::to_string(want);
      } else {
        long long upper = k < m ? k - 1 : k - 2;
        if (m == 2) upper = (k - 1) / 2;
        if (h.lower != 2 || h.upper != upper)
          return "T(" + std::to_string(m) + "," + std::to_string(m + k) +
                 ") should be the interval [2," + std::to_string(upper) + "]";
      }
    }
  return ok();
}

std::string check_crossing_bounds(Level) {
  if (crossing_upper_bound(1, 4, 0) != 13) return "bound for K'(3,1) is not 13";
  if (crossing_upper_bound(1, 0, 3) != 9) return "bound for K(2,1) is not 9";
  for (long long k = 0; k <= 5; ++k)
    if (crossing_upper_bound(k, 0, 0) != k) return "arrowless bound should be k";
  return ok();
}

std::string check_colored_two_route(Level level) {
  const long long nlim = level == Level::Full ? 6 : 4;
  for (long long p : {2, 3})
    for (long long q = p + 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long long n = 1; n <= nlim; ++n)
        if (colored_torus_direct(p, q, n) != j_colored(KnotId::torus(p, q), n))
          return "two-route mismatch at T(" + std::to_string(p) + "," +
                 std::to_string(q) + "), n=" + std::to_string(n);
    }
  return ok();
}

std::string check_gap_predictions(Level level) {
  const std::vector<CableType> types = {
      {{{2, 3}}},          {{{2, 5}}},          {{{3, 4}}},
      {{{2, 3}, {2, 13}}}, {{{2, 3}, {2, 15}}}, {{{3, 4}, {2, 25}}},
  };
  const long long nmax = level == Level::Full ? 5 : 3;
  for (const auto& c : types) {
    const auto ls = l_sequence(c);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const auto [p, q] = c.stages[i];
      if (!(-2 * q * p < ls[i] && ls[i] < 0))
        return "l-sequence bound fails for " + KnotId::cable(c).str();
    }
    for (long long n = 2; n <= nmax; ++n)
      if (!gap_prediction_matches(c, n))
        return "gap prediction wrong for " + KnotId::cable(c).str() +
               " at n=" + std::to_string(n);
  }
  return ok();
}

std::string check_doubly_iterated(Level) {
  LaurentPoly expected(Var::t);
  expected.add_term(0, 1);
  expected.add_term(3, -1);
  expected.add_term(6, -1);
  expected.add_term(7, 1);
  if (jk_double(1, 5) != expected) return "jk_double(1,5) is not 1-t^3-t^6+t^7";
  if (jk_double(1, 5) != j_closed_branch(Family::Kpp, 2, 1))
    return "jk_double(1,5) does not match J of K''(2,1)";
  for (long long p = 1; p <= 6; ++p) {
    const long long q0 = 2 * p * (p + 1) + 1;
    if (jk_double(p, q0) != j_closed_branch(Family::Kpp, p + 1, p))
      return "jk_double(p, 2p(p+1)+1) mismatch at p=" + std::to_string(p);
  }
  return ok();
}

std::string check_fiedler_not_sharp(Level) {
  const CableType c{{{2, 3}, {2, 15}}};
  const FiedlerBound fb = fiedler_bound(c);
  if (fb.value != 1) return "Fiedler bound for {(2,3),(2,15)} is not 1";
  const AlgebraicVerdict v = classify_algebraic(c);
  if (v.h.lower < 2) return "{(2,3),(2,15)} should have Hopf crossing number >= 2";
  if (v.matched_knot) return "{(2,3),(2,15)} should not match a census knot";
  return ok();
}

}  // namespace

std::vector<CriterionResult> run_all(Level level) {
  const std::vector<Check> checks = {
      {1, "oracle grounding: state sum vs closed-form torus Jones", check_oracle_grounding, 5.0},
      {2, "bracket strategy equality: recursion vs closed form", check_strategy_equality, 10.0},
      {3, "framing identity (-A)^{-3w}<K> = V", check_framing_identity, 0.0},
      {4, "part cancellation and telescoped sums", check_uv_and_telescoping, 0.0},
      {5, "J branch formulas vs computed J", check_branch_audit, 0.0},
      {6, "eight-knot table and the J ambiguity flag", check_eight_knot_table, 0.0},
      {7, "census distinctness of J polynomials", check_distinctness, 30.0},
      {8, "Jones coefficients bounded by 2 (bound attained)", check_coefficient_bound, 0.0},
      {9, "mirror analysis over the census", check_mirror_analysis, 0.0},
      {10, "torus Hopf crossing numbers", check_torus_hopf, 0.0},
      {11, "classical crossing number bounds", check_crossing_bounds, 0.0},
      {12, "colored torus two-route equality", check_colored_two_route, 5.0},
      {13, "l-sequences and gap predictions", check_gap_predictions, 0.0},
      {14, "doubly iterated closed form", check_doubly_iterated, 0.0},
      {15, "Fiedler bound non-sharpness", check_fiedler_not_sharp, 0.0},
  };

  std::vector<CriterionResult> results;
  for (const auto& check : checks) {
    CriterionResult r;
    r.index = check.index;
    r.name = check.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = check.run(level);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && check.time_limit_seconds > 0 && r.seconds > check.time_limit_seconds) {
      r.passed = false;
      r.detail = "exceeded the " + std::to_string(check.time_limit_seconds) + "s budget";
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool report(const std::vector<CriterionResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    std::ostringstream line;
    line << (r.passed ? "PASS" : "FAIL") << "  #" << r.index << " " << r.name;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " [%.2fs]", r.seconds);
    line << buf;
    if (!r.detail.empty()) line << " - " << r.detail;
    std::printf("%s\n", line.str().c_str());
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
  return all;
}

}  // namespace hopfknots::verify
