#pragma once

#include <pcx/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcx {

/// Univariate polynomial over Rational. Coefficients are stored ascending
/// by degree: coeffs()[k] multiplies x^k.
///
/// Invariant: the last stored coefficient is nonzero; the zero polynomial
/// is the empty list and has no degree.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> cs) : coeffs_(cs) { normalize(); }
  explicit Poly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { normalize(); }

  static Poly constant(Rational c) {
    Poly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
  }
  static Poly one() { return constant(1); }
  static Poly x() { return Poly{0, 1}; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Degree of a nonzero polynomial; the zero polynomial has none.
  std::size_t degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  const Rational& leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Horner evaluation, exact.
  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < cs.size(); ++k) cs[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(cs));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(cs));
  }

  friend Poly operator*(const Rational& c, const Poly& p) {
    if (c == 0) return Poly();
    Poly r = p;
    for (auto& a : r.coeffs_) a *= c;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Total order for deterministic set storage: first by degree, then by
  /// the coefficient list from the constant term up.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
      if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
    }
    return false;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

using PolySet = std::set<Poly>;

inline Poly derivative(const Poly& p) {
  if (p.is_constant()) return Poly();
  std::vector<Rational> cs(p.degree());
  for (std::size_t k = 1; k <= p.degree(); ++k) cs[k - 1] = Rational(k) * p.coeff(k);
  return Poly(std::move(cs));
}

struct PolyDivMod {
  Poly quot;
  Poly rem;
};

/// Exact Euclidean division: p = quot * q + rem with deg(rem) < deg(q).
inline PolyDivMod divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.is_zero() || (!p.is_zero() && p.degree() < q.degree())) return {Poly(), p};

  std::vector<Rational> rem(p.coeffs());
  std::vector<Rational> quot(p.degree() - q.degree() + 1, Rational(0));
  const auto& d = q.coeffs();
  while (rem.size() >= d.size()) {
    Rational c = rem.back() / d.back();
    std::size_t shift = rem.size() - d.size();
    quot[shift] = c;
    for (std::size_t k = 0; k < d.size(); ++k) rem[shift + k] -= c * d[k];
    rem.pop_back();  // leading term cancels exactly
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.leading()) * p;
}

/// Monic greatest common divisor; errors when both arguments are zero.
inline Poly gcd_poly(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// q with q(x) = p(x + c).
inline Poly taylor_shift(const Poly& p, const Rational& c) {
  Poly acc;
  Poly shift{c, 1};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * shift + Poly::constant(*it);
  return acc;
}

/// x^deg(p) * p(1/x): the coefficient list reversed, then normalized.
inline Poly reverse_coeffs(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("reverse_coeffs of the zero polynomial");
  std::vector<Rational> cs(p.coeffs().rbegin(), p.coeffs().rend());
  return Poly(std::move(cs));
}

/// q with q(x) = p(c * x).
inline Poly scale_arg(const Poly& p, const Rational& c) {
  std::vector<Rational> cs = p.coeffs();
  Rational power = 1;
  for (std::size_t k = 1; k < cs.size(); ++k) {
    power *= c;
    cs[k] *= power;
  }
  return Poly(std::move(cs));
}

/// Paper-style rendering: "P [a0, a1, ...]" with exact rational entries.
inline std::string to_string(const Poly& p) {
  std::string out = "P [";
  bool first = true;
  for (const auto& c : p.coeffs()) {
    if (!first) out += ", ";
    out += to_string(c);
    first = false;
  }
  return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

/// Parses the "P [a0, a1, ...]" form; entries may be "n" or "n/d".
inline Poly parse_poly(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("bad polynomial: '" + std::string(text) + "'"); };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != 'P') fail();
  ++i;
  skip_ws();
  if (i >= text.size() || text[i] != '[') fail();
  ++i;

  std::vector<Rational> cs;
  for (;;) {
    skip_ws();
    if (i >= text.size()) fail();
    if (text[i] == ']') {
      ++i;
      break;
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != ',' && text[i] != ']') ++i;
    std::size_t end = i;
    while (end > start && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
    cs.push_back(parse_rational(text.substr(start, end - start)));
    skip_ws();
    if (i < text.size() && text[i] == ',') ++i;
  }
  skip_ws();
  if (i != text.size()) fail();
  return Poly(std::move(cs));
}

}  // namespace pcx
