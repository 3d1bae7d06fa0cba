#pragma once

#include <pcx/piecewise.hpp>
#include <pcx/poly.hpp>
#include <pcx/rational.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace pcx {

inline nlohmann::json to_json(const Rational& r) {
  return {{"num", numerator_of(r).str()}, {"den", denominator_of(r).str()}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  Int num(j.at("num").get<std::string>());
  Int den(j.at("den").get<std::string>());
  if (den <= 0) throw std::invalid_argument("rational JSON: denominator must be positive");
  return Rational(num, den);
}

/// A polynomial is the array of its coefficients, ascending by degree.
inline nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

inline Poly poly_from_json(const nlohmann::json& j) {
  std::vector<Rational> cs;
  for (const auto& e : j) cs.push_back(rational_from_json(e));
  return Poly(std::move(cs));
}

/// Report for a complexity result: the front, the minimum's segments with
/// decimal bounds and member indices, and the breakpoint enclosures.
inline nlohmann::json complexity_report(const PPoly& front, const std::vector<Breakpoint>& bps,
                                        const std::vector<Segment>& segments,
                                        int decimal_digits = 6) {
  nlohmann::json j;
  j["front"] = nlohmann::json::array();
  std::vector<Poly> members(front.begin(), front.end());
  for (const Poly& p : members) j["front"].push_back(to_json(p));

  j["segments"] = nlohmann::json::array();
  for (const Segment& s : segments) {
    std::size_t idx = 0;
    while (idx < members.size() && members[idx] != s.which) ++idx;
    j["segments"].push_back({{"from", to_decimal(s.from, decimal_digits)},
                             {"to", to_decimal(s.to, decimal_digits)},
                             {"poly", idx}});
  }

  j["breakpoints"] = nlohmann::json::array();
  for (const Breakpoint& b : bps)
    j["breakpoints"].push_back(
        {{"low", to_string(b.where.low)}, {"high", to_string(b.where.high)}});
  return j;
}

}  // namespace pcx
