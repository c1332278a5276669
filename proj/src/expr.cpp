#include "hopfknots/expr.hpp"

#include <cctype>

namespace hopfknots {

namespace {

struct ExprParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit ExprParser(const std::string& s) : text(s) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(pos, what); }

  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  long long parse_integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected an integer");
    try {
      return std::stoll(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  std::pair<long long, long long> parse_pair() {
    expect('(');
    long long first = parse_integer();
    expect(',');
    long long second = parse_integer();
    expect(')');
    return {first, second};
  }

  std::string parse_word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '\''))
      ++pos;
    return text.substr(start, pos - start);
  }

  KnotId parse_expr() {
    const std::size_t word_pos = pos;
    std::string word = parse_word();
    if (word == "T") {
      auto [m, n] = parse_pair();
      return KnotId::torus(m, n);
    }
    if (word == "Tn") {
      expect('(');
      long long n = parse_integer();
      expect(')');
      return KnotId::tn(n);
    }
    if (word == "K") {
      auto [a, b] = parse_pair();
      return KnotId::fam_k(a, b);
    }
    if (word == "K'") {
      auto [a, b] = parse_pair();
      return KnotId::fam_kp(a, b);
    }
    if (word == "K''") {
      auto [a, b] = parse_pair();
      return KnotId::fam_kpp(a, b);
    }
    if (word == "mirror") {
      expect('(');
      KnotId inner = parse_expr();
      expect(')');
      return KnotId::mirror(std::move(inner));
    }
    if (word == "cable") {
      expect('[');
      CableType c;
      do {
        auto [p, q] = parse_pair();
        c.stages.push_back({p, q});
      } while (consume(';'));
      expect(']');
      return KnotId::cable(std::move(c));
    }
    pos = word_pos;
    fail("expected one of T, Tn, K, K', K'', mirror, cable");
  }

  KnotId parse_all() {
    KnotId k = parse_expr();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return k;
  }
};

}  // namespace

KnotId parse_knot_expr(const std::string& text) {
  ExprParser parser(text);
  return parser.parse_all();
}

}  // namespace hopfknots
