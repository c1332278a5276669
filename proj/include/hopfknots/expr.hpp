// Parser for the CLI knot-expression grammar:
//   T(m,n) | Tn(k) | K(a,b) | K'(a,b) | K''(a,b)
//   | mirror(EXPR) | cable[(p,q);(p,q);...]
// Whitespace-insensitive; parse(print(k)) == k on canonical forms.
#pragma once

#include "hopfknots/knot_id.hpp"

#include <stdexcept>
#include <string>

namespace hopfknots {

// Syntax error with the offending position (0-based).
struct ParseError : std::invalid_argument {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : std::invalid_argument("parse error at position " + std::to_string(pos) +
                              ": " + what),
        position(pos) {}
};

// Parses one expression; throws ParseError on bad syntax and
// ConstraintError on violated parameter ranges (e.g. K(1,2)).
KnotId parse_knot_expr(const std::string& text);

}  // namespace hopfknots
