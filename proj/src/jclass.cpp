#include "hopfknots/jclass.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace hopfknots {

namespace {

LaurentPoly one_minus_t2() {
  LaurentPoly d = LaurentPoly::one(Var::t);
  d.add_term(2, -1);
  return d;
}

LaurentPoly from_terms(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentPoly p(Var::t);
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

LaurentPoly j_normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("j_normalize: zero polynomial");
  return p.shifted(-p.min_exp());
}

LaurentPoly j_polynomial(const KnotId& k) {
  return j_normalize(one_minus_t2() * jones(k));
}

LaurentPoly j_closed_branch(Family which, long long a, long long b) {
  if (which == Family::Kpp) {
    if (a <= 1 || b < 1) throw ConstraintError("K'' requires a>1 and b>=1");
  } else if (b < 1 || a < b) {
    throw ConstraintError("K/K' require a>=b>=1");
  }
  switch (which) {
    case Family::K:
      if (b == 1)
        return from_terms({{0, 1}, {1, -1}, {a + 4, 1}, {2 * a + 2, -1},
                           {2 * a + 4, -1}, {3 * a + 1, 1}});
      if (a == b)
        return from_terms({{0, 1}, {1, -1}, {2 * b + 2, -1}, {2 * b + 3, 1},
                           {b * b + 2 * b + 1, 1}, {b * b + 2 * b + 3, -1}});
      if (a == b + 1)
        return from_terms({{0, 1}, {1, -1}, {2 * b + 3, -1}, {2 * b + 4, 1},
                           {b * b + 3 * b + 1, 1}, {b * b + 3 * b + 2, -1},
                           {b * b + 3 * b + 3, 1}, {b * b + 3 * b + 4, -1}});
      if (a == b + 2)
        return from_terms({{0, 1}, {1, -1}, {2 * b + 4, -1}, {2 * b + 5, 1},
                           {b * b + 4 * b + 1, 1}, {b * b + 4 * b + 3, -1}});
      return from_terms({{0, 1}, {1, -1}, {a + b + 2, -1}, {a + b + 3, 1},
                         {a * b + 2 * b + 1, 1}, {a * b + a + b + 1, -1},
                         {a * b + a + b + 3, -1}, {a * b + 2 * a + 1, 1}});
    case Family::Kp:
      if (b == 1)
        return from_terms({{0, -1}, {1, 1}, {a + 1, 1}, {2 * a + 1, -1},
                           {2 * a + 3, -1}, {3 * a, 1}});
      if (a == b)
        return from_terms({{0, -1}, {1, 1}, {2 * b, 1}, {2 * b + 1, -1},
                           {b * b + 2 * b, 1}, {b * b + 2 * b + 2, -1}});
      if (a == b + 1)
        return from_terms({{0, -1}, {1, 1}, {2 * b + 1, 1}, {2 * b + 2, -1},
                           {b * b + 3 * b, 1}, {b * b + 3 * b + 1, -1},
                           {b * b + 3 * b + 2, 1}, {b * b + 3 * b + 3, -1}});
      if (a == b + 2)
        return from_terms({{0, -1}, {1, 1}, {2 * b + 2, 1}, {2 * b + 3, -1},
                           {b * b + 4 * b, 1}, {b * b + 4 * b + 2, -1}});
      return from_terms({{0, -1}, {1, 1}, {a + b, 1}, {a + b + 1, -1},
                         {a * b + 2 * b, 1}, {a * b + a + b, -1},
                         {a * b + a + b + 2, -1}, {a * b + 2 * a, 1}});
    case Family::Kpp:
      if (b == 1)
        return from_terms({{0, 1}, {a + 1, -1}, {a + 3, -1}, {2 * a + 3, 1},
                           {3 * a - 1, 1}, {3 * a, -1}});
      if (a == 2)
        return from_terms({{0, 1}, {b + 2, -1}, {b + 4, -1}, {2 * b + 3, 1},
                           {3 * b + 3, -1}, {3 * b + 4, 1}});
      if (a <= b)
        return from_terms({{0, 1}, {a + b, -1}, {a + b + 2, -1}, {2 * a + 2 * b, 1},
                           {a * b + 2 * a - 1, 1}, {a * b + 2 * a, -1},
                           {a * b + a + b + 1, -1}, {a * b + a + b + 2, 1}});
      if (a == b + 1)
        return from_terms({{0, 1}, {2 * b + 1, -1}, {2 * b + 3, -1}, {4 * b + 2, 1},
                           {b * b + 3 * b + 1, 1}, {b * b + 3 * b + 2, -2},
                           {b * b + 3 * b + 3, 1}});
      if (a == b + 2)
        return from_terms({{0, 1}, {2 * b + 2, -1}, {2 * b + 4, -1}, {4 * b + 4, 1}});
      if (a == b + 3)
        return from_terms({{0, 1}, {2 * b + 3, -1}, {2 * b + 5, -1}, {4 * b + 6, 1},
                           {b * b + 5 * b + 4, -1}, {b * b + 5 * b + 5, 2},
                           {b * b + 5 * b + 6, -1}});
      return from_terms({{0, 1}, {a + b, -1}, {a + b + 2, -1}, {2 * a + 2 * b, 1},
                         {a * b + a + b + 1, -1}, {a * b + a + b + 2, 1},
                         {a * b + 2 * a - 1, 1}, {a * b + 2 * a, -1}});
  }
  throw std::logic_error("unreachable family");
}

namespace {

// J of T_n straight from (1-t^2) V_{T_n}: the four-term polynomial
// 1 - t^{n+1} - t^{n+2} + t^{2n+1} (terms combine at n=0).
LaurentPoly j_of_tn(long long n) {
  LaurentPoly p(Var::t);
  p.add_term(0, 1);
  p.add_term(n + 1, -1);
  p.add_term(n + 2, -1);
  p.add_term(2 * n + 1, 1);
  return p;
}

std::shared_ptr<const std::vector<CensusEntry>> census_for(long long max_span) {
  static std::map<long long, std::shared_ptr<const std::vector<CensusEntry>>> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(max_span);
    if (it != cache.end()) return it->second;
  }

  auto census = std::make_shared<std::vector<CensusEntry>>();
  if (max_span > 0) {
    // T_n ovals: canonical indices are 0 and n >= 2 (T_1 is the unknot again).
    if (max_span >= 2) census->push_back({KnotId::tn(0), j_of_tn(0)});
    for (long long n = 2; 2 * n + 1 <= max_span; ++n)
      census->push_back({KnotId::tn(n), j_of_tn(n)});
    // Family parameters are bounded by the span: every branch's top exponent
    // grows at least linearly in each of a and b.
    for (long long a = 1; a <= max_span; ++a)
      for (long long b = 1; b <= a; ++b) {
        LaurentPoly j = j_closed_branch(Family::K, a, b);
        if (j.span() <= max_span) census->push_back({KnotId::fam_k(a, b), std::move(j)});
      }
    for (long long a = 1; a <= max_span; ++a)
      for (long long b = 1; b <= a; ++b) {
        LaurentPoly j = j_closed_branch(Family::Kp, a, b);
        if (j.span() <= max_span) census->push_back({KnotId::fam_kp(a, b), std::move(j)});
      }
    for (long long a = 2; a <= max_span; ++a)
      for (long long b = 1; b <= max_span; ++b) {
        LaurentPoly j = j_closed_branch(Family::Kpp, a, b);
        if (j.span() <= max_span) census->push_back({KnotId::fam_kpp(a, b), std::move(j)});
      }
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(max_span, std::move(census)).first->second;
}

const char* homfly_k21() {
  return "-2*l^-2 - 3 - 2*l^2 + m^2*l^-2 + 4*m^2 + m^2*l^2 - m^4";
}
const char* homfly_k31() {
  return "5 + 10*l^2 + 8*l^4 + 2*l^6 - 10*m^2 - 25*m^2*l^2 - 14*m^2*l^4 - m^2*l^6"
         " + 6*m^4 + 22*m^4*l^2 + 7*m^4*l^4 - m^6 - 8*m^6*l^2 - m^6*l^4 + m^8*l^2";
}

}  // namespace

std::vector<CensusEntry> enumerate_family(long long max_span) {
  return *census_for(max_span);
}

IdentifyResult identify(const LaurentPoly& q) {
  IdentifyResult result;
  if (q.is_zero()) {
    result.note = "zero polynomial";
    return result;
  }
  const LaurentPoly j = j_normalize(convert(q, Var::t));
  const auto census = census_for(j.span());
  for (const auto& entry : *census)
    if (entry.j == j) result.matches.push_back(entry.knot);

  if (result.matches.size() == 2 &&
      result.matches[0] == KnotId::fam_k(2, 1) &&
      result.matches[1] == KnotId::fam_k(3, 1)) {
    result.ambiguous = true;
    result.note = std::string("K(2,1) and K(3,1) share this Jones polynomial; "
                              "they are distinguished by HOMFLY: P[K(2,1)] = ") +
                  homfly_k21() + "; P[K(3,1)] = " + homfly_k31();
  }
  return result;
}

KnotId reduce_zero_crossing(long long net_arrows) {
  // An oval with k clockwise arrows is T_{-k} = T_{k-1}.
  return KnotId::tn(tn_canonical_index(net_arrows));
}

KnotId reduce_one_crossing(const OneCrossingDiagram& d) {
  if (d.nested)
    throw NestedUnsupported("nested one-crossing diagrams are not supported");
  long long l = d.left_arrows, r = d.right_arrows;
  auto crossing = d.crossing;
  using Crossing = OneCrossingDiagram::Crossing;

  if (l == 0 && r == 0) return KnotId::tn(0);
  if (l == 0) return reduce_zero_crossing(r);  // empty loop removed
  if (r == 0) return reduce_zero_crossing(l);

  if (l > 0 && r > 0) {
    if (crossing != Crossing::KType) {
      // Push one arrow through the crossing; it lands with reversed sense
      // and cancels, so both net counts drop by one.
      --l;
      --r;
      if (l == 0 || r == 0) return reduce_zero_crossing(l + r);
    }
    return KnotId::fam_k(std::max(l, r), std::min(l, r));  // rotate if needed
  }

  if (l < 0 && r < 0) {
    if (crossing != Crossing::KpType) {
      ++l;
      ++r;
      if (l == 0 || r == 0) return reduce_zero_crossing(l + r);
    }
    return KnotId::fam_kp(std::max(-l, -r), std::min(-l, -r));
  }

  // Mixed senses: canonical form has the clockwise arrows on the left loop.
  if (crossing != Crossing::KType) {
    if (l > 0) std::swap(l, r);  // rotate by pi first
    // Push a counterclockwise arrow from the right loop; it lands clockwise
    // on the left loop.
    --l;
    --r;
    crossing = Crossing::KType;
    if (r == 0) return reduce_zero_crossing(l);
  }
  if (l > 0) std::swap(l, r);
  const long long a = -l, b = r;
  if (a == 1) {
    // A single clockwise arrow on the left pushes to the right loop, where
    // it lands counterclockwise; the empty loop disappears.
    return reduce_zero_crossing(b + 1);
  }
  return KnotId::fam_kpp(a, b);
}

OneCrossingDiagram encode_one_crossing(const KnotId& k) {
  OneCrossingDiagram d;
  using Crossing = OneCrossingDiagram::Crossing;
  switch (k.kind()) {
    case KnotId::Kind::Tn:
      d.crossing = Crossing::KType;
      d.left_arrows = k.tn_index();
      d.right_arrows = 0;  // an empty kink, removable by the first move
      return d;
    case KnotId::Kind::FamK:
      d.crossing = Crossing::KType;
      d.left_arrows = k.a();
      d.right_arrows = k.b();
      return d;
    case KnotId::Kind::FamKp:
      d.crossing = Crossing::KpType;
      d.left_arrows = -k.a();
      d.right_arrows = -k.b();
      return d;
    case KnotId::Kind::FamKpp:
      d.crossing = Crossing::KType;
      d.left_arrows = -k.a();
      d.right_arrows = k.b();
      return d;
    default:
      throw ConstraintError("encode_one_crossing: unsupported id " + k.str());
  }
}

MirrorStatus mirror_status(const KnotId& k) {
  if (!(k.is_family() || k.kind() == KnotId::Kind::Tn))
    throw ConstraintError("mirror_status: expects a family member or Tn");
  const LaurentPoly mirror_j =
      j_normalize(one_minus_t2() * substitute_inverse(jones(k)));
  const IdentifyResult found = identify(mirror_j);
  if (found.matches.empty())
    return {MirrorStatus::Kind::MirrorExceedsOne, std::nullopt};

  // A nonempty lookup only says the mirror's J coincides with a census J;
  // J is not a complete invariant, so the survivors are settled by the
  // stored reference identities. The confirmed ones: the unknot and the
  // figure-eight K(1,1) are amphichiral, and Tn(2) / K'(1,1) are the two
  // trefoils. Every other hit is a coincidence of polynomials between
  // distinct knots (the palindromic K(2,1)/K(3,1) pair, whose chirality
  // even HOMFLY partly misses, and K'(3,1) = 10_132 versus the mirror of
  // K''(2,1) = 5_1), so the mirror still leaves the census.
  if (k.kind() == KnotId::Kind::Tn) {
    const long long n = tn_canonical_index(k.tn_index());
    if (n <= 1) return {MirrorStatus::Kind::Amphichiral, std::nullopt};
    if (n == 2) return {MirrorStatus::Kind::MirrorInFamily, KnotId::fam_kp(1, 1)};
  }
  if (k == KnotId::fam_k(1, 1))
    return {MirrorStatus::Kind::Amphichiral, std::nullopt};
  if (k == KnotId::fam_kp(1, 1))
    return {MirrorStatus::Kind::MirrorInFamily, KnotId::tn(2)};
  return {MirrorStatus::Kind::MirrorExceedsOne, std::nullopt};
}

std::vector<std::pair<KnotId, std::string>> rolfsen_table() {
  return {
      {KnotId::fam_k(1, 1), "4_1"},
      {KnotId::fam_k(2, 1), "9_42"},
      {KnotId::fam_kp(1, 1), "3_1"},
      {KnotId::fam_kp(2, 1), "5_2"},
      {KnotId::fam_kp(3, 1), "10_132"},
      {KnotId::fam_kp(2, 2), "10_145"},
      {KnotId::fam_kpp(2, 1), "mirror of 5_1 = T(2,5)"},
      {KnotId::fam_kpp(3, 1), "10_124 = T(3,5)"},
  };
}

HopfInfo hopf_number(const KnotId& k) {
  switch (k.kind()) {
    case KnotId::Kind::Tn:
      return {0, 0};
    case KnotId::Kind::FamK:
    case KnotId::Kind::FamKp:
    case KnotId::Kind::FamKpp:
      return {1, 1};
    case KnotId::Kind::Torus: {
      const long long m = k.torus_m();
      const long long gap = k.torus_n() - m;
      if (m == 1) return {0, 0};  // unknot
      if (gap == 1) return {0, 0};
      if (gap == 2) return {1, 1};
      if (gap == 3) return m == 2 ? HopfInfo{1, 1} : HopfInfo{2, 2};
      long long upper = gap < m ? gap - 1 : gap - 2;
      if (m == 2) upper = (gap - 1) / 2;
      return {2, upper};
    }
    default:
      throw ConstraintError("hopf_number: unsupported id " + k.str());
  }
}

long long crossing_upper_bound(long long k, long long a, long long b) {
  if (k < 0 || a < 0 || b < 0)
    throw ConstraintError("crossing_upper_bound: arguments must be nonnegative");
  if (b == 0) return k + a * (a - 1);
  return k + b - 1 + (a + b) * (a + b - 1);
}

bool coefficient_bound_holds(const KnotId& k) {
  const LaurentPoly v = jones(k);
  for (const auto& [e, c] : v.terms())
    if (c > 2 || c < -2) return false;
  return true;
}

}  // namespace hopfknots
