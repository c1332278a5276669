// Closed-form Kauffman brackets, writhes and Jones polynomials for the
// torus knots T(m,n), the ovals T_n and the one-crossing families
// K_{a,b}, K'_{a,b}, K''_{a,b}, each with a second, independent
// evaluation route used as a cross-check.
#pragma once

#include "hopfknots/knot_id.hpp"
#include "hopfknots/laurent.hpp"

namespace hopfknots {

enum class Family { K, Kp, Kpp };
enum class BracketStrategy { Recursion, Closed };
enum class SumStrategy { Direct, Closed };

// Jones polynomial of the torus knot T(m,n) in t:
//   t^{(m-1)(n-1)/2} (1 - t^{m+1} - t^{n+1} + t^{m+n}) / (1 - t^2).
// Requires gcd(m,n)=1, m,n >= 1. Symmetric in (m,n).
LaurentPoly jones_torus(long long m, long long n);

// Kauffman bracket of the oval T_n (valid for every integer n).
LaurentPoly bracket_tn(long long n);

// The numerator split of <T_n>. The textbook parts U_n, V_n, U'_n, V'_n are
// rational functions with denominator 1-t^2; what is stored here is the
// denominator-cleared version (prefactor times numerator piece), so that
//   u + v = u' + v' = bracket_tn(n) * (1 - t^2)
// and the cancellation identities
//   v(n) + A^2 u(n-2) = 0,   v'(n) + A^-2 u'(n-2) = 0
// hold exactly as Laurent polynomials.
struct TnBracketParts {
  LaurentPoly u, v, u_prime, v_prime;  // variable A
};
TnBracketParts tn_bracket_parts(long long n);

// The telescoping bracket sums
//   S_{n,m}  = <T_n> + A^2 <T_{n-2}> + ... + A^{2m} <T_{n-2m}>
//   S'_{n,m} = <T_n> + A^-2 <T_{n-2}> + ... + A^{-2m} <T_{n-2m}>
// evaluated either term by term or through their closed forms.
LaurentPoly telescoped_sum(long long n, long long m, bool primed, SumStrategy s);

// Kauffman bracket of a family member, by unrolling the one-crossing skein
// recursion down to b=0 or by the closed two-fraction formula. The two
// strategies agree exactly.
LaurentPoly bracket_family(Family which, long long a, long long b, BracketStrategy s);

// Writhe of the framed arrow diagram: n(n+1) for T_n and the three family
// formulas. Only Tn and family ids carry a framing here.
long long writhe(const KnotId& k);

// Jones polynomial in t. Supports every KnotId except cables (computed by
// the cabling module). Family members are evaluated from the closed Jones
// formulas and redundantly cross-checked against (-A)^{-3w} <K>.
LaurentPoly jones(const KnotId& k);

}  // namespace hopfknots
