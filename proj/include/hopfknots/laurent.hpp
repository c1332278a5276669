// Exact sparse Laurent-polynomial arithmetic over the integers, in the
// bracket variable A or the Jones variable t (related by t = A^-4).
//
// Values are canonical: no zero coefficients are stored and terms are kept
// sorted by exponent, so structural equality is polynomial equality.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfknots {

using Int = boost::multiprecision::cpp_int;

enum class Var { A, t };

inline const char* var_name(Var v) { return v == Var::A ? "A" : "t"; }

struct VarMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact division failed: the dividend is not a multiple of the divisor.
struct NonzeroRemainder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A-to-t substitution hit an exponent not divisible by 4.
struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class LaurentPoly {
public:
  explicit LaurentPoly(Var v = Var::t) : var_(v) {}

  static LaurentPoly zero(Var v) { return LaurentPoly(v); }
  static LaurentPoly one(Var v) { return monomial(v, 0, 1); }
  static LaurentPoly monomial(Var v, std::int64_t exp, Int coef);

  Var var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Lowest / highest exponent carrying a nonzero coefficient; polynomial
  // must be nonzero.
  std::int64_t min_exp() const;
  std::int64_t max_exp() const;
  std::int64_t span() const { return max_exp() - min_exp(); }

  Int coeff(std::int64_t exp) const;
  const std::map<std::int64_t, Int>& terms() const { return terms_; }

  void add_term(std::int64_t exp, const Int& coef);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Multiply by the monomial coef * x^exp.
  LaurentPoly shifted(std::int64_t exp, const Int& coef = 1) const;

  bool operator==(const LaurentPoly& rhs) const {
    return var_ == rhs.var_ && terms_ == rhs.terms_;
  }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  // Ascending-exponent text form, e.g. "-1 + t + t^2 - t^5".
  std::string str() const;

private:
  Var var_;
  std::map<std::int64_t, Int> terms_;

  void check_var(const LaurentPoly& rhs) const;
};

// Exact quotient num/den; throws NonzeroRemainder when the division does not
// come out exactly. Operates on Laurent polynomials by pre-shifting both
// operands to lowest exponent 0 and re-applying the shift difference.
LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den);

// x -> x^-1 on the polynomial's variable (every exponent negated).
LaurentPoly substitute_inverse(const LaurentPoly& p);

// Change of variable through t = A^-4. A-exponents must be divisible by 4.
LaurentPoly convert(const LaurentPoly& p, Var target);

// Coefficient/gap fingerprint of a nonzero polynomial, read from the lowest
// exponent up. Invariant under multiplication by a monomial.
struct GapSignature {
  int lowest_coefficient_sign = 0;       // sign of the lowest-degree coefficient
  std::vector<Int> coefficients;         // all nonzero coefficients, ascending exponent
  std::vector<std::int64_t> gaps;        // differences of consecutive exponents

  bool operator==(const GapSignature&) const = default;
  std::string str() const;
};

GapSignature gap_signature(const LaurentPoly& p);

// Rebuild the polynomial with lowest exponent 0 from a signature.
LaurentPoly poly_from_signature(const GapSignature& sig, Var v);

// Parse the text form produced by LaurentPoly::str(): signed terms like
// "1 - t + 2t^11 - t^-3", whitespace-insensitive. Accepts variable letter
// matching `v`.
LaurentPoly parse_poly(const std::string& text, Var v);

}  // namespace hopfknots
