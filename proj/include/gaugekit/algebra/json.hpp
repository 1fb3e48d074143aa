#pragma once

// JSON shapes for the exact types. Rationals are "num/den" strings; exponent
// maps are objects keyed by the decimal exponent.

#include <json.hpp>

#include "gaugekit/algebra/laurent.hpp"
#include "gaugekit/algebra/partition.hpp"
#include "gaugekit/algebra/ratfun.hpp"
#include "gaugekit/algebra/series.hpp"

namespace gaugekit {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const LaurentPoly& p) {
  json terms = json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = to_string(c);
  return json{{"var", p.var()}, {"terms", terms}};
}

inline LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p(j.at("var").get<std::string>());
  for (const auto& [key, value] : j.at("terms").items()) p.add_term(std::stoi(key), parse_rational(value.get<std::string>()));
  return p;
}

inline json to_json(const RationalFunction& f) { return f.to_string(); }

inline json to_json(const Partition& p) { return p.parts(); }

template <typename Coeff>
json to_json(const TruncatedSeries<Coeff>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return json{{"var", s.var()}, {"order", s.order()}, {"coefficients", coeffs}};
}

}  // namespace gaugekit
