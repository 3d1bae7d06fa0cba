#pragma once

#include <pcx/poly.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcx {

/// Four-valued result of the "uniformly worse" comparison. Less means the
/// first argument dominates: it is everywhere <= the second on [0,1] and
/// strictly below somewhere inside. Incomparable means the curves cross.
enum class CmpOutcome { Less, Equal, Greater, Incomparable };

inline std::string to_string(CmpOutcome c) {
  switch (c) {
    case CmpOutcome::Less: return "Less";
    case CmpOutcome::Equal: return "Equal";
    case CmpOutcome::Greater: return "Greater";
    case CmpOutcome::Incomparable: return "Incomparable";
  }
  return "?";
}

struct SquareFreeFactor {
  Poly factor;       // monic, degree >= 1, square-free
  unsigned multiplicity;
};

/// p = content * prod factor_i ^ multiplicity_i, multiplicities strictly
/// increasing, factors pairwise coprime.
struct SquareFreeFactorization {
  Rational content;
  std::vector<SquareFreeFactor> factors;

  Poly expand() const {
    Poly acc = Poly::constant(content);
    for (const auto& [factor, multiplicity] : factors)
      for (unsigned k = 0; k < multiplicity; ++k) acc = acc * factor;
    return acc;
  }
};

/// Yun's square-free factorization.
inline SquareFreeFactorization yun_square_free(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("square-free factorization of zero");

  SquareFreeFactorization out{p.leading(), {}};
  Poly p0 = monic(p);
  if (p0.is_constant()) return out;

  Poly g = gcd_poly(p0, derivative(p0));
  Poly b = divmod(p0, g).quot;
  Poly c = divmod(derivative(p0), g).quot;
  Poly d = c - derivative(b);
  unsigned i = 1;
  while (!b.is_constant()) {
    Poly a = gcd_poly(b, d);
    if (!a.is_constant()) out.factors.push_back({a, i});
    b = divmod(b, a).quot;
    c = divmod(d, a).quot;
    d = c - derivative(b);
    ++i;
  }
  return out;
}

/// Number of sign alternations in the nonzero coefficients, in degree
/// order (Descartes' bound on positive roots).
inline unsigned descartes_sign_changes(const Poly& p) {
  unsigned changes = 0;
  int prev = 0;
  for (const auto& c : p.coeffs()) {
    int s = c.sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

/// Descartes' bound for roots in the open unit interval, via the transform
/// q(x) = (1+x)^deg(p) * p(1/(1+x)). The bound is >= the true count and of
/// the same parity. Roots exactly at 0 are dropped by the coefficient
/// reversal, so callers that care about them must deflate first.
inline unsigned root_bound_unit(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  return descartes_sign_changes(taylor_shift(reverse_coeffs(p), 1));
}

/// An interval with exactly one root of the associated polynomial inside.
/// low == high marks an exactly-known rational root.
struct IsolatingInterval {
  Rational low;
  Rational high;

  bool is_exact() const { return low == high; }
  Rational midpoint() const { return (low + high) / 2; }
  Rational width() const { return high - low; }
};

namespace detail {

// Bisection on polynomials remapped to (0,1). q(t) = p(lo + t*(hi-lo));
// roots of p at previously split points are deflated before recursing, so
// every subinterval endpoint is root-free for q.
inline void isolate_rec(Poly q, const Rational& lo, const Rational& hi, int depth,
                        std::vector<IsolatingInterval>& out) {
  if (q.is_constant()) return;
  unsigned bound = root_bound_unit(q);
  if (bound == 0) return;
  if (bound == 1) {
    out.push_back({lo, hi});
    return;
  }
  if (depth >= 128) throw std::runtime_error("root isolation exceeded depth bound");

  Rational mid = (lo + hi) / 2;
  bool hit = q(Rational(1, 2)) == 0;
  if (hit) q = divmod(q, Poly{Rational(-1, 2), 1}).quot;

  Poly left = scale_arg(q, Rational(1, 2));
  Poly right = taylor_shift(left, 1);
  isolate_rec(std::move(left), lo, mid, depth + 1, out);
  if (hit) out.push_back({mid, mid});
  isolate_rec(std::move(right), mid, hi, depth + 1, out);
}

}  // namespace detail

/// Isolating intervals, ascending, for all roots of a square-free
/// polynomial in the open interval (0,1). Roots exactly at 0 or 1 are
/// excluded; roots hit exactly by a bisection point come back as
/// zero-width intervals.
inline std::vector<IsolatingInterval> isolate_unit_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  if (!p.is_constant() && !gcd_poly(p, derivative(p)).is_constant())
    throw std::invalid_argument("root isolation requires a square-free polynomial");

  Poly work = p;
  if (work(0) == 0) work = divmod(work, Poly::x()).quot;
  if (work(1) == 0) work = divmod(work, Poly{-1, 1}).quot;

  std::vector<IsolatingInterval> out;
  detail::isolate_rec(work, 0, 1, 0, out);
  return out;
}

/// Multiplicities (ascending) of the distinct roots of p in (0,1):
/// one entry per isolated root of each square-free factor.
inline std::vector<unsigned> unit_root_multiplicities(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("root multiplicities of the zero polynomial");
  std::vector<unsigned> out;
  for (const auto& [factor, multiplicity] : yun_square_free(p).factors) {
    std::size_t roots = isolate_unit_roots(factor).size();
    out.insert(out.end(), roots, multiplicity);
  }
  return out;
}

/// Sign of p relative to zero over the unit interval. Equal for the zero
/// polynomial; Incomparable when p changes sign inside (0,1) (some odd
/// root multiplicity); otherwise decided by evaluating at r+1 interior
/// points i/(r+2), where r is the number of distinct interior roots.
inline CmpOutcome cmp_zero(const Poly& p) {
  if (p.is_zero()) return CmpOutcome::Equal;
  std::vector<unsigned> mults = unit_root_multiplicities(p);
  for (unsigned m : mults)
    if (m % 2 == 1) return CmpOutcome::Incomparable;

  auto r = static_cast<unsigned>(mults.size());
  bool any_pos = false;
  bool any_neg = false;
  for (unsigned i = 1; i <= r + 1; ++i) {
    int s = p(Rational(i, r + 2)).sign();
    any_pos |= s > 0;
    any_neg |= s < 0;
  }
  if (any_pos) return CmpOutcome::Less;
  if (any_neg) return CmpOutcome::Greater;
  return CmpOutcome::Equal;
}

/// The "uniformly worse" pre-order: Less iff p <= q on all of [0,1] with
/// strict inequality somewhere in (0,1); Equal iff identical; Incomparable
/// iff the curves cross.
inline CmpOutcome cmp_poly(const Poly& p, const Poly& q) {
  Poly d = q - p;
  if (d.is_zero()) return CmpOutcome::Equal;

  // Cheap sampling pre-check: opposite strict signs anywhere on [0,1]
  // already prove a crossing, with no factorization work.
  bool any_pos = false;
  bool any_neg = false;
  for (int k = 0; k <= 8; ++k) {
    int s = d(Rational(k, 8)).sign();
    any_pos |= s > 0;
    any_neg |= s < 0;
    if (any_pos && any_neg) return CmpOutcome::Incomparable;
  }
  return cmp_zero(d);
}

/// Shrinks an isolating interval around its root to the requested width by
/// sign-driven bisection. Roots of p sitting exactly on an endpoint (but
/// outside the open interval) are deflated away first.
inline IsolatingInterval refine_interval(const Poly& p, IsolatingInterval iv,
                                         const Rational& width) {
  if (p.is_zero()) throw std::domain_error("refine_interval on the zero polynomial");
  if (iv.is_exact()) return iv;

  Poly f = p;
  while (!f.is_zero() && f(iv.low) == 0) f = divmod(f, Poly{-iv.low, 1}).quot;
  while (!f.is_zero() && f(iv.high) == 0) f = divmod(f, Poly{-iv.high, 1}).quot;

  int sign_low = f(iv.low).sign();
  int sign_high = f(iv.high).sign();
  if (sign_low == sign_high || sign_low == 0 || sign_high == 0)
    throw std::invalid_argument("refine_interval: no sign change across the interval");

  while (iv.width() > width) {
    Rational mid = iv.midpoint();
    int s = f(mid).sign();
    if (s == 0) return {mid, mid};
    if (s == sign_low)
      iv.low = mid;
    else
      iv.high = mid;
  }
  return iv;
}

}  // namespace pcx
