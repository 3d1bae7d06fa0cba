#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcx {

using Int = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Boost keeps the value canonical:
/// denominator > 0 and gcd(|num|, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

inline Int pow_int(Int base, unsigned e) {
  Int acc = 1;
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

/// Renders `r` in lowest terms as "num" or "num/den".
inline std::string to_string(const Rational& r) {
  std::string s = numerator_of(r).str();
  if (denominator_of(r) != 1) s += "/" + denominator_of(r).str();
  return s;
}

/// Parses "n", "n/d" or a plain decimal such as "0.356" or "-1.5".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("bad rational: '" + std::string(text) + "'"); };

  std::string s(text);
  if (s.empty()) fail();

  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }

  auto digits = [&](std::size_t from, std::size_t to) -> Int {
    if (from >= to) fail();
    for (std::size_t k = from; k < to; ++k)
      if (s[k] < '0' || s[k] > '9') fail();
    return Int(s.substr(from, to - from));
  };

  Rational value;
  if (auto slash = s.find('/', pos); slash != std::string::npos) {
    Int n = digits(pos, slash);
    Int d = digits(slash + 1, s.size());
    if (d == 0) fail();
    value = Rational(n, d);
  } else if (auto dot = s.find('.', pos); dot != std::string::npos) {
    Int whole = dot == pos ? Int(0) : digits(pos, dot);
    std::size_t nfrac = s.size() - dot - 1;
    Int frac = nfrac == 0 ? Int(0) : digits(dot + 1, s.size());
    Int scale = pow_int(10, static_cast<unsigned>(nfrac));
    value = Rational(whole * scale + frac, scale);
  } else {
    value = Rational(digits(pos, s.size()));
  }
  return negative ? Rational(-value) : value;
}

/// Fixed-point decimal rendering with `digits` fraction digits, rounding
/// half away from zero. Deterministic; used for CSV and report output.
inline std::string to_decimal(const Rational& r, int digits) {
  Int scale = pow_int(10, static_cast<unsigned>(digits));
  Int num = numerator_of(r);
  bool negative = num < 0;
  if (negative) num = -num;
  Int den = denominator_of(r);
  Int scaled = num * scale;
  Int q = scaled / den;
  Int rem = scaled % den;
  if (2 * rem >= den) ++q;

  std::string frac = Int(q % scale).str();
  std::string out = Int(q / scale).str();
  if (digits > 0) {
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  if (negative && q != 0) out.insert(out.begin(), '-');
  return out;
}

}  // namespace pcx
