#pragma once

#include <json.hpp>

#include "pqdist/algebraic.hpp"
#include "pqdist/errors.hpp"
#include "pqdist/polynomial.hpp"
#include "pqdist/rational.hpp"

namespace pqdist {

using Json = nlohmann::ordered_json;

inline Json poly_to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

inline IntPolynomial poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.emplace_back(x.get<std::string>());
  return IntPolynomial(std::move(c));
}

inline Json algebraic_to_json(const AlgebraicNumber& a, int digits = 15) {
  Json j;
  if (a.is_rational()) {
    j["rational"] = to_string(a.lo);
  } else {
    j["polynomial"] = a.poly.to_string();
    j["coefficients"] = poly_to_json(a.poly);
    j["interval"] = Json::array({to_string(a.lo), to_string(a.hi)});
  }
  j["decimal"] = a.decimal(digits);
  return j;
}

inline AlgebraicNumber algebraic_from_json(const Json& j) {
  if (j.contains("rational")) return AlgebraicNumber::from_rational(parse_rational(j["rational"].get<std::string>()));
  AlgebraicNumber a;
  a.poly = poly_from_json(j.at("coefficients"));
  a.lo = parse_rational(j.at("interval").at(0).get<std::string>());
  a.hi = parse_rational(j.at("interval").at(1).get<std::string>());
  return a;
}

}  // namespace pqdist
