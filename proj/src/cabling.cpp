#include "hopfknots/cabling.hpp"

#include <cassert>
#include <map>
#include <numeric>

namespace hopfknots {

namespace {

// A^2 - A^-2
LaurentPoly loop_factor() {
  LaurentPoly p(Var::A);
  p.add_term(2, 1);
  p.add_term(-2, -1);
  return p;
}

}  // namespace

LaurentPoly quantum_integer(long long n) {
  LaurentPoly num(Var::A);
  num.add_term(2 * n, 1);
  num.add_term(-2 * n, -1);
  if (num.is_zero()) return LaurentPoly::zero(Var::A);  // [0] = 0
  return div_exact(num, loop_factor());
}

namespace {

// Stages of the cabling tower for a supported KnotId; innermost knot is the
// unknot.
std::vector<CableStage> tower_of(const KnotId& k) {
  switch (k.kind()) {
    case KnotId::Kind::Tn: {
      const long long n = tn_canonical_index(k.tn_index());
      if (n <= 1) return {};  // unknot
      return {{n, n + 1}};
    }
    case KnotId::Kind::Torus: {
      if (k.torus_m() == 1) return {};  // unknot
      return {{k.torus_m(), k.torus_n()}};
    }
    case KnotId::Kind::Cable:
      return k.cable_type().stages;
    default:
      throw ConstraintError("colored_jones: unsupported id " + k.str());
  }
}

// V at stage `s` of the tower (s = 0 is the unknot), color n.
LaurentPoly colored_value(const std::vector<CableStage>& tower, std::size_t s,
                          long long n,
                          std::map<std::pair<std::size_t, long long>, LaurentPoly>& memo) {
  if (n == 0) return LaurentPoly::zero(Var::A);
  if (n < 0) return -colored_value(tower, s, -n, memo);
  const auto key = std::make_pair(s, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  LaurentPoly result(Var::A);
  if (s == 0) {
    result = quantum_integer(n);
  } else {
    const auto [p, q] = tower[s - 1];
    // Sum over the doubled half-integer index k = 2j, k = -(n-1), ..., n-1:
    //   V(n) = A^{-pq(n^2-1)} sum_k A^{q k (k p + 2)} V_inner(p k + 1)
    LaurentPoly sum(Var::A);
    long long term_count = 0;
    for (long long kk = -(n - 1); kk <= n - 1; kk += 2) {
      assert((n - 1 - kk) % 2 == 0);
      sum += colored_value(tower, s - 1, p * kk + 1, memo)
                 .shifted(q * kk * (kk * p + 2));
      ++term_count;
    }
    assert(term_count == n);
    (void)term_count;
    result = sum.shifted(-p * q * (n * n - 1));
  }
  return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace

LaurentPoly colored_jones(const KnotId& k, long long n) {
  if (n < 1) throw ConstraintError("colored_jones: color must be positive");
  const auto tower = tower_of(k);
  std::map<std::pair<std::size_t, long long>, LaurentPoly> memo;
  return colored_value(tower, tower.size(), n, memo);
}

LaurentPoly j_colored(const KnotId& k, long long n) {
  return loop_factor() * colored_jones(k, n);
}

LaurentPoly colored_torus_direct(long long p, long long q, long long n) {
  if (std::gcd(p, q) != 1) throw ConstraintError("colored_torus_direct: gcd(p,q) must be 1");
  if (n < 1) throw ConstraintError("colored_torus_direct: color must be positive");
  LaurentPoly sum(Var::A);
  for (long long kk = -(n - 1); kk <= n - 1; kk += 2) {
    LaurentPoly bracket(Var::A);
    bracket.add_term(2 * p * kk + 2, 1);
    bracket.add_term(-2 * p * kk - 2, -1);
    sum += bracket.shifted(q * kk * (kk * p + 2));
  }
  return sum.shifted(-p * q * (n * n - 1));
}

LaurentPoly jones_cable(const CableType& c) {
  validate_cable_type(c);
  const LaurentPoly v2 = colored_jones(KnotId::cable(c), 2);
  return convert(div_exact(v2, quantum_integer(2)), Var::t);
}

LaurentPoly j_polynomial_cable(const CableType& c) {
  LaurentPoly one_minus_t2 = LaurentPoly::one(Var::t);
  one_minus_t2.add_term(2, -1);
  return j_normalize(one_minus_t2 * jones_cable(c));
}

LaurentPoly jones_any(const KnotId& k) {
  switch (k.kind()) {
    case KnotId::Kind::Cable: return jones_cable(k.cable_type());
    case KnotId::Kind::Mirror: return substitute_inverse(jones_any(k.inner()));
    default: return jones(k);
  }
}

LaurentPoly j_polynomial_any(const KnotId& k) {
  LaurentPoly one_minus_t2 = LaurentPoly::one(Var::t);
  one_minus_t2.add_term(2, -1);
  return j_normalize(one_minus_t2 * jones_any(k));
}

std::vector<long long> l_sequence(const CableType& c) {
  validate_cable_type(c);
  std::vector<long long> ls;
  for (std::size_t i = 0; i < c.stages.size(); ++i) {
    const auto [p, q] = c.stages[i];
    if (i == 0)
      ls.push_back(-2 * (q - 1) * (p - 1) + 2);
    else
      ls.push_back(-2 * q * p + 2 * q + p * ls.back());
  }
  return ls;
}

GapPrediction predicted_gap_structure(const CableType& c, long long n) {
  if (n < 1) throw ConstraintError("predicted_gap_structure: n must be positive");
  const auto ls = l_sequence(c);
  const auto& stages = c.stages;
  const std::size_t s = stages.size();

  for (std::size_t i = 0; i < s; ++i) {
    if (stages[i].p == 1) continue;  // trivial first stage sits outside the bound
    if (!(-2 * stages[i].q * stages[i].p < ls[i] && ls[i] < 0))
      throw ConstraintError("l-sequence bound violated at stage " + std::to_string(i + 1));
  }
  if (s >= 2) {
    long long pprod = 1;
    for (std::size_t i = 1; i < s; ++i) pprod *= stages[i].p;
    const long long lhs = 4 * stages[s - 1].q -
                          4 * (stages[0].p + stages[0].q) * pprod + 2 * ls[s - 2];
    if (lhs <= 0)
      throw ConstraintError("gap-separation inequality failed for this cable type");
  }

  GapPrediction pred;
  pred.top = (n - 1) * ls.back() + 2;
  if (n >= 2) {
    long long all = 1;
    for (const auto& st : stages) all *= st.p;
    const long long tail = all / stages[0].p;  // p_2 ... p_s
    pred.gaps = {{4 * all * (n - 1) + 4,
                  4 * (stages[0].q - stages[0].p) * tail * (n - 1),
                  4 * all * (n - 1) - 4}};
  }
  return pred;
}

bool gap_prediction_matches(const CableType& c, long long n) {
  const GapPrediction pred = predicted_gap_structure(c, n);
  const LaurentPoly j = j_colored(KnotId::cable(c), n);
  if (j.is_zero()) return false;
  if (j.max_exp() != pred.top) return false;
  if (n == 1) return true;
  // Gaps between the four highest powers.
  std::vector<std::int64_t> exps;
  for (const auto& [e, coef] : j.terms()) exps.push_back(e);
  if (exps.size() < 4) return false;
  const std::size_t m = exps.size();
  const auto& gaps = *pred.gaps;
  return exps[m - 1] - exps[m - 2] == gaps[0] &&
         exps[m - 2] - exps[m - 3] == gaps[1] &&
         exps[m - 3] - exps[m - 4] == gaps[2];
}

LaurentPoly jk_double(long long p, long long q) {
  if (p < 1) throw ConstraintError("jk_double: p must be positive");
  if (q % 2 == 0) throw ConstraintError("jk_double: q must be odd");
  if (q < 2 * p * (p + 1) + 1)
    throw ConstraintError("jk_double: q must be at least 2p(p+1)+1");
  LaurentPoly j(Var::t);
  j.add_term(0, 1);
  j.add_term(2 * p + 1, -1);
  j.add_term(2 * p + 3, -1);
  j.add_term(4 * p + 2, 1);
  j.add_term(p * p + 3 * p + 1, 1);
  j.add_term(p * p + 3 * p + 2, -1);
  j.add_term(q - p * p + p + 1, -1);
  j.add_term(q - p * p + p + 2, 1);
  return j;
}

FiedlerBound fiedler_bound(const CableType& c) {
  validate_cable_type(c);
  long long tail = 1;
  for (std::size_t i = 1; i < c.stages.size(); ++i) tail *= c.stages[i].p;
  return {(c.stages[0].q - c.stages[0].p) * tail - 1,
          c.stages[0].q < 2 * c.stages[0].p};
}

AlgebraicVerdict classify_algebraic(const CableType& c) {
  validate_cable_type(c);
  AlgebraicVerdict verdict;
  const FiedlerBound fb = fiedler_bound(c);
  verdict.fiedler_lower_bound = fb.value;
  verdict.fiedler_hypothesis_met = fb.hypothesis_met;

  const IdentifyResult found = identify(j_polynomial_cable(c));
  if (!found.matches.empty()) {
    const KnotId& m = found.matches.front();
    const bool unknotted = m.kind() == KnotId::Kind::Tn;
    verdict.h = unknotted ? HopfInfo{0, 0} : HopfInfo{1, 1};
    verdict.matched_knot = m;
    verdict.c_alg = verdict.h.lower;
    return verdict;
  }

  // Not the J of any knot with Hopf crossing number <= 1.
  verdict.h = HopfInfo{2, std::nullopt};
  if (c.stages.size() == 1 && c.stages[0].p > 1)
    verdict.h = hopf_number(KnotId::torus(c.stages[0].p, c.stages[0].q));
  return verdict;
}

}  // namespace hopfknots
