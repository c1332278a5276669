#include "hopfknots/laurent.hpp"

#include <cctype>
#include <sstream>

namespace hopfknots {

LaurentPoly LaurentPoly::monomial(Var v, std::int64_t exp, Int coef) {
  LaurentPoly p(v);
  if (coef != 0) p.terms_.emplace(exp, std::move(coef));
  return p;
}

std::int64_t LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(std::int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t exp, const Int& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_var(const LaurentPoly& rhs) const {
  if (var_ != rhs.var_)
    throw VarMismatch(std::string("variable mismatch: ") + var_name(var_) +
                      " vs " + var_name(rhs.var_));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_var(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_var(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_var(b);
  LaurentPoly r(a.var_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t exp, const Int& coef) const {
  LaurentPoly r(var_);
  if (coef == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + exp, c * coef);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  const char* x = var_name(var_);
  for (const auto& [e, c] : terms_) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str();
      out << x;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.var() != den.var())
    throw VarMismatch("div_exact: operands in different variables");
  LaurentPoly quotient(num.var());
  if (num.is_zero()) return quotient;

  // Shift both operands to lowest exponent 0; restore the difference at the end.
  const std::int64_t shift = num.min_exp() - den.min_exp();
  LaurentPoly rem = num.shifted(-num.min_exp());
  const LaurentPoly d = den.shifted(-den.min_exp());
  const std::int64_t dtop = d.max_exp();
  const Int dlead = d.coeff(dtop);

  while (!rem.is_zero()) {
    const std::int64_t rtop = rem.max_exp();
    if (rtop < dtop)
      throw NonzeroRemainder("div_exact: nonzero remainder " + rem.str());
    const Int rlead = rem.coeff(rtop);
    if (rlead % dlead != 0)
      throw NonzeroRemainder("div_exact: leading coefficient " + rlead.str() +
                             " not divisible by " + dlead.str());
    const Int q = rlead / dlead;
    const std::int64_t qe = rtop - dtop;
    quotient.add_term(qe + shift, q);
    rem -= d.shifted(qe, q);
  }
  return quotient;
}

LaurentPoly substitute_inverse(const LaurentPoly& p) {
  LaurentPoly r(p.var());
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

LaurentPoly convert(const LaurentPoly& p, Var target) {
  if (p.var() == target) return p;
  LaurentPoly r(target);
  if (p.var() == Var::A) {
    // t = A^-4, so A^e = t^(-e/4).
    for (const auto& [e, c] : p.terms()) {
      if (e % 4 != 0)
        throw NotDivisible("convert: A-exponent " + std::to_string(e) +
                           " is not divisible by 4");
      r.add_term(-e / 4, c);
    }
  } else {
    for (const auto& [e, c] : p.terms()) r.add_term(-4 * e, c);
  }
  return r;
}

GapSignature gap_signature(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("gap_signature of zero polynomial");
  GapSignature sig;
  bool have_prev = false;
  std::int64_t prev = 0;
  for (const auto& [e, c] : p.terms()) {
    if (have_prev) sig.gaps.push_back(e - prev);
    sig.coefficients.push_back(c);
    prev = e;
    have_prev = true;
  }
  sig.lowest_coefficient_sign = sig.coefficients.front() < 0 ? -1 : 1;
  return sig;
}

LaurentPoly poly_from_signature(const GapSignature& sig, Var v) {
  LaurentPoly p(v);
  std::int64_t e = 0;
  for (std::size_t i = 0; i < sig.coefficients.size(); ++i) {
    if (i > 0) e += sig.gaps.at(i - 1);
    p.add_term(e, sig.coefficients[i]);
  }
  return p;
}

std::string GapSignature::str() const {
  std::ostringstream out;
  out << "coefficients (";
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out << (i ? "," : "") << coefficients[i].str();
  out << "), gaps (";
  for (std::size_t i = 0; i < gaps.size(); ++i) out << (i ? "," : "") << gaps[i];
  out << ")";
  return out.str();
}

namespace {

struct PolyParser {
  const std::string& text;
  std::size_t pos = 0;
  Var var;

  explicit PolyParser(const std::string& s, Var v) : text(s), var(v) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial syntax error at position " +
                                std::to_string(pos) + ": " + what);
  }

  Int parse_natural() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Int(text.substr(start, pos - start));
  }

  std::int64_t parse_exponent() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an exponent");
    try {
      const std::int64_t e = std::stoll(text.substr(start, pos - start));
      return neg ? -e : e;
    } catch (const std::out_of_range&) {
      fail("exponent out of range");
    }
  }

  LaurentPoly parse() {
    LaurentPoly p(var);
    skip_ws();
    if (pos == text.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos == text.size()) break;
      int sign = 1;
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      Int coef = 1;
      bool saw_number = false;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coef = parse_natural();
        saw_number = true;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(); }
      }
      std::int64_t exp = 0;
      const char letter = var_name(var)[0];
      if (pos < text.size() && text[pos] == letter) {
        ++pos;
        exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          exp = parse_exponent();
        }
      } else if (!saw_number) {
        fail(std::string("expected a coefficient or '") + letter + "'");
      }
      p.add_term(exp, sign * coef);
      first = false;
    }
    return p;
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, Var v) {
  PolyParser parser(text, v);
  return parser.parse();
}

}  // namespace hopfknots
