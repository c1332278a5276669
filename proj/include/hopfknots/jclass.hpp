// Classification machinery for knots of Hopf crossing number at most one:
// normalized J polynomials, their closed branch formulas, the family census,
// identification, the mirror analysis, the small Rolfsen table, Hopf
// crossing numbers for torus knots, and the reduction of zero/one-crossing
// arrow-diagram descriptors.
#pragma once

#include "hopfknots/closedform.hpp"
#include "hopfknots/knot_id.hpp"
#include "hopfknots/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfknots {

// The J polynomial: (1-t^2) * V, shifted so the lowest exponent is 0.
// The sign is not normalized (J of K' genuinely starts at -1).
LaurentPoly j_polynomial(const KnotId& k);

// Shift a nonzero polynomial so its lowest exponent is 0.
LaurentPoly j_normalize(const LaurentPoly& p);

// The per-branch closed formulas for J of a family member (b=1 specials,
// a=b, a=b+-1, a=b+2, a=b+3 and the general shapes). Equal to
// j_polynomial of the same knot on every branch.
LaurentPoly j_closed_branch(Family which, long long a, long long b);

// Census entry: a knot of Hopf crossing number <= 1 with its J polynomial.
struct CensusEntry {
  KnotId knot;
  LaurentPoly j;
};

// All Tn(n) (canonical indices 0 and n>=2) and family members whose J-span
// is at most max_span, ordered by (family, a, b).
std::vector<CensusEntry> enumerate_family(long long max_span);

struct IdentifyResult {
  std::vector<KnotId> matches;
  bool ambiguous = false;  // exactly the {K(2,1), K(3,1)} Jones coincidence
  std::string note;
};

// Exact-match lookup of a candidate J polynomial (shifted internally to
// lowest exponent 0) against the census of its span. Empty matches mean the
// polynomial is not the J of any knot with Hopf crossing number <= 1.
IdentifyResult identify(const LaurentPoly& q);

// Combinatorial descriptor of a one-crossing arrow diagram. Arrow counts
// are net counts (opposite pairs already cancelled); positive means
// counterclockwise.
struct OneCrossingDiagram {
  bool nested = false;
  enum class Crossing { KType, KpType } crossing = Crossing::KType;
  long long left_arrows = 0;
  long long right_arrows = 0;
};

struct NestedUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An oval with a net arrow count reduces to a torus knot.
KnotId reduce_zero_crossing(long long net_arrows);

// Reduce a one-crossing descriptor to its canonical knot: Tn, K(a,b),
// K'(a,b) with a>=b>=1, or K''(a,b) with a>1. Nested inputs are rejected.
KnotId reduce_one_crossing(const OneCrossingDiagram& d);

// Canonical descriptor of a reduced knot; reduce_one_crossing(encode(k)) == k.
OneCrossingDiagram encode_one_crossing(const KnotId& k);

struct MirrorStatus {
  enum class Kind { Amphichiral, MirrorInFamily, MirrorExceedsOne } kind;
  std::optional<KnotId> mirror;  // set for MirrorInFamily
};

// Mirror the J polynomial (reverse coefficients, negate) and identify it.
MirrorStatus mirror_status(const KnotId& k);

// The eight knots with at most 10 crossings and Hopf crossing number 1.
std::vector<std::pair<KnotId, std::string>> rolfsen_table();

struct HopfInfo {
  long long lower = 0;
  std::optional<long long> upper;  // nullopt = unbounded
  bool exact() const { return upper && *upper == lower; }
};

// Hopf crossing number: exact for T(n,n+k) with k<=3 (T(2,5) is the
// exception with value 1) and for family members; an interval [2, bound]
// for torus knots with k>3.
HopfInfo hopf_number(const KnotId& k);

// Classical crossing number bound from an arrow diagram with k crossings,
// a removable arrows and b non-removable (unseparated) arrows.
long long crossing_upper_bound(long long k, long long a, long long b);

// True when every Jones coefficient of the knot has absolute value <= 2.
bool coefficient_bound_holds(const KnotId& k);

}  // namespace hopfknots
