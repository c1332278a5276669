// Colored Jones polynomials through the cabling formula, quantum integers,
// the l_i gap calculus for iterated torus knots, the doubly-iterated closed
// form, and the classification of algebraic knots with Hopf crossing number
// at most one.
#pragma once

#include "hopfknots/jclass.hpp"
#include "hopfknots/knot_id.hpp"
#include "hopfknots/laurent.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hopfknots {

// Quantum integer [n] = (A^{2n} - A^{-2n}) / (A^2 - A^-2); [0]=0, [-n]=-[n].
LaurentPoly quantum_integer(long long n);

// Colored Jones V_K(n) in the variable A, normalized so the unknot gives
// [n]. Supported knots: Tn, T(m,n) and iterated torus (cable) types; each
// cabling stage is evaluated through the (p,q)-cabling sum with the
// half-integer index doubled to keep all exponents integral.
LaurentPoly colored_jones(const KnotId& k, long long n);

// J_K(n) = (A^2 - A^-2) V_K(n).
LaurentPoly j_colored(const KnotId& k, long long n);

// J_{T(p,q)}(n) evaluated as the displayed single sum (the unknot's quantum
// bracket folded in); an independent route that must equal j_colored.
LaurentPoly colored_torus_direct(long long p, long long q, long long n);

// Ordinary Jones polynomial of a cable type (V(2)/[2], converted to t).
LaurentPoly jones_cable(const CableType& c);

// J polynomial of a cable type (lowest exponent shifted to zero).
LaurentPoly j_polynomial_cable(const CableType& c);

// Jones / J polynomial for any KnotId, dispatching cables to the cabling
// route and mirrors to exponent reversal.
LaurentPoly jones_any(const KnotId& k);
LaurentPoly j_polynomial_any(const KnotId& k);

// The gap sequence l_1 = -2(q_1-1)(p_1-1)+2, l_i = -2 q_i p_i + 2 q_i + p_i l_{i-1}.
std::vector<long long> l_sequence(const CableType& c);

// Predicted top A-power (n-1) l_s + 2 of J_{K_s}(n) and, for n >= 2, the
// three gaps below it. Asserts the l-bounds and (for s >= 2) the positivity
// inequality they depend on.
struct GapPrediction {
  long long top = 0;
  std::optional<std::array<long long, 3>> gaps;
};
GapPrediction predicted_gap_structure(const CableType& c, long long n);

// Companion check: computes J_{K_s}(n) and compares its top power and first
// three gaps with the prediction.
bool gap_prediction_matches(const CableType& c, long long n);

// Closed form of J for the doubly iterated type {(p,p+1),(2,q)}, q odd and
// at least 2p(p+1)+1; like terms combined (the sixth coefficient becomes -2
// exactly at q = 2p(p+1)+1).
LaurentPoly jk_double(long long p, long long q);

struct FiedlerBound {
  long long value = 0;
  bool hypothesis_met = false;  // the bound assumes q_1 < 2 p_1
};
// (q_1 - p_1) p_2 ... p_s - 1.
FiedlerBound fiedler_bound(const CableType& c);

struct AlgebraicVerdict {
  HopfInfo h;
  std::optional<KnotId> matched_knot;
  std::optional<long long> c_alg;  // equals h when h is exact and <= 1
  long long fiedler_lower_bound = 0;
  bool fiedler_hypothesis_met = false;
};

// Decides where an iterated torus knot sits relative to Hopf crossing
// number one by exact J comparison against the family census.
AlgebraicVerdict classify_algebraic(const CableType& c);

}  // namespace hopfknots
