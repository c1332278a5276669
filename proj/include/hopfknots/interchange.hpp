// Machine-readable polynomial interchange: a variable tag plus the list of
// [exponent, coefficient] pairs in ascending exponent order. Coefficients
// that fit in 64 bits are emitted as JSON numbers, larger ones as decimal
// strings; re-serialization is byte-identical.
#pragma once

#include "hopfknots/laurent.hpp"

#include <limits>

#include <json.hpp>

namespace hopfknots {

inline nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json pair = nlohmann::json::array();
    pair.push_back(e);
    if (c <= kMax && c >= kMin)
      pair.push_back(c.convert_to<std::int64_t>());
    else
      pair.push_back(c.str());
    terms.push_back(std::move(pair));
  }
  return nlohmann::json{{"variable", var_name(p.var())}, {"terms", std::move(terms)}};
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
  const std::string v = j.at("variable").get<std::string>();
  if (v != "A" && v != "t")
    throw std::invalid_argument("interchange: unknown variable tag '" + v + "'");
  LaurentPoly p(v == "A" ? Var::A : Var::t);
  for (const auto& pair : j.at("terms")) {
    const std::int64_t e = pair.at(0).get<std::int64_t>();
    Int c = pair.at(1).is_string() ? Int(pair.at(1).get<std::string>())
                                   : Int(pair.at(1).get<std::int64_t>());
    p.add_term(e, c);
  }
  return p;
}

}  // namespace hopfknots
