#pragma once

#include <pcx/poly.hpp>
#include <pcx/rootiso.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcx {

/// A piecewise-polynomial function represented as the set of polynomials
/// whose pointwise minimum it is. Results of the complexity computation
/// are pairwise incomparable under cmp_poly.
using PPoly = PolySet;

/// Exact pointwise minimum of the member polynomials at p.
inline Rational eval_min(const PPoly& s, const Rational& p) {
  if (s.empty()) throw std::invalid_argument("eval_min of an empty set");
  if (p < 0 || p > 1) throw std::out_of_range("eval_min outside [0,1]");
  bool first = true;
  Rational best;
  for (const Poly& q : s) {
    Rational v = q(p);
    if (first || v < best) best = std::move(v);
    first = false;
  }
  return best;
}

/// The subset of members not dominated (Less) by any other member.
inline PPoly pareto_front(const PPoly& s) {
  PPoly out;
  for (const Poly& x : s) {
    bool dominated = false;
    for (const Poly& y : s) {
      if (y != x && cmp_poly(y, x) == CmpOutcome::Less) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(x);
  }
  return out;
}

/// A point where the identity of the pointwise minimum changes: left is
/// the strict minimum just below the enclosed crossing, right just above.
struct Breakpoint {
  IsolatingInterval where;
  Poly left;
  Poly right;
};

namespace detail {

// Minimal member at point t; ties broken towards the set-least member so
// the answer is deterministic.
inline const Poly* min_member_at(const std::vector<Poly>& members, const Rational& t) {
  const Poly* best = nullptr;
  Rational best_value;
  for (const Poly& q : members) {
    Rational v = q(t);
    if (best == nullptr || v < best_value) {
      best = &q;
      best_value = std::move(v);
    }
  }
  return best;
}

}  // namespace detail

/// Ordered breakpoints of the pointwise minimum of `s` over (0,1), each
/// enclosed in an interval of width <= `width`. Candidate points are the
/// odd-multiplicity roots of pairwise differences (even-order touch points
/// do not change the minimum's identity and are not breakpoints).
inline std::vector<Breakpoint> breakpoints(const PPoly& s, const Rational& width) {
  std::vector<Poly> members(s.begin(), s.end());
  if (members.size() <= 1) return {};

  std::vector<IsolatingInterval> cands;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Poly d = members[j] - members[i];
      if (d.is_zero()) continue;
      for (const auto& [factor, multiplicity] : yun_square_free(d).factors) {
        if (multiplicity % 2 == 0) continue;
        for (const IsolatingInterval& iv : isolate_unit_roots(factor)) {
          IsolatingInterval refined = refine_interval(factor, iv, width);
          // Keep the enclosure strictly inside (0,1) so every candidate
          // has a testable region on both sides.
          while (!refined.is_exact() && (refined.low == 0 || refined.high == 1))
            refined = refine_interval(factor, refined, refined.width() / 2);
          cands.push_back(refined);
        }
      }
    }
  }
  std::sort(cands.begin(), cands.end(), [](const IsolatingInterval& a, const IsolatingInterval& b) {
    return a.low != b.low ? a.low < b.low : a.high < b.high;
  });
  // Crossings of different pairs can coincide or their enclosures overlap;
  // collapse overlapping candidates into one region.
  std::vector<IsolatingInterval> merged;
  for (const IsolatingInterval& c : cands) {
    if (!merged.empty() && c.low <= merged.back().high)
      merged.back().high = std::max(merged.back().high, c.high);
    else
      merged.push_back(c);
  }

  std::vector<Breakpoint> out;
  Rational prev_high = 0;
  for (std::size_t k = 0; k < merged.size(); ++k) {
    Rational left_point = (prev_high + merged[k].low) / 2;
    Rational right_point =
        (merged[k].high + (k + 1 < merged.size() ? merged[k + 1].low : Rational(1))) / 2;
    const Poly* left = detail::min_member_at(members, left_point);
    const Poly* right = detail::min_member_at(members, right_point);
    if (*left != *right) out.push_back({merged[k], *left, *right});
    prev_high = merged[k].high;
  }
  return out;
}

/// Piece of the pointwise minimum between consecutive breakpoints.
struct Segment {
  Rational from;
  Rational to;
  Poly which;
};

/// Splits [0,1] at the breakpoint enclosures' midpoints and names the
/// minimal member of each piece (identified by exact midpoint evaluation).
inline std::vector<Segment> min_segments(const PPoly& s, const std::vector<Breakpoint>& bps) {
  std::vector<Poly> members(s.begin(), s.end());
  if (members.empty()) return {};
  std::vector<Rational> bounds{Rational(0)};
  for (const Breakpoint& b : bps) bounds.push_back(b.where.midpoint());
  bounds.push_back(Rational(1));

  std::vector<Segment> out;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    Rational mid = (bounds[k] + bounds[k + 1]) / 2;
    out.push_back({bounds[k], bounds[k + 1], *detail::min_member_at(members, mid)});
  }
  return out;
}

namespace detail {

// Interval-arithmetic Horner: encloses { p(x) : x in [lo,hi] }.
inline std::pair<Rational, Rational> range_on(const Poly& p, const Rational& lo,
                                              const Rational& hi) {
  Rational acc_lo = 0, acc_hi = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    Rational a = acc_lo * lo, b = acc_lo * hi, c = acc_hi * lo, d = acc_hi * hi;
    acc_lo = std::min(std::min(a, b), std::min(c, d)) + *it;
    acc_hi = std::max(std::max(a, b), std::max(c, d)) + *it;
  }
  return {acc_lo, acc_hi};
}

}  // namespace detail

struct UnitMax {
  IsolatingInterval where;       // encloses the argmax
  Rational value_low;            // exact bounds on the maximum value
  Rational value_high;
};

/// Locates the maximum of p over [0,1]: the candidates are the endpoints
/// and the critical points inside, each refined to `width`; value bounds
/// come from exact interval evaluation over the candidates.
inline UnitMax max_on_unit(const Poly& p, const Rational& width) {
  if (p.is_zero()) throw std::domain_error("max_on_unit of the zero polynomial");

  std::vector<IsolatingInterval> cands{{0, 0}, {1, 1}};
  Poly dp = derivative(p);
  if (!dp.is_zero() && !dp.is_constant()) {
    for (const auto& [factor, multiplicity] : yun_square_free(dp).factors) {
      (void)multiplicity;
      for (const IsolatingInterval& iv : isolate_unit_roots(factor))
        cands.push_back(refine_interval(factor, iv, width));
    }
  }

  std::vector<std::pair<Rational, Rational>> ranges;
  ranges.reserve(cands.size());
  for (const IsolatingInterval& iv : cands)
    ranges.push_back(iv.is_exact() ? std::pair{p(iv.low), p(iv.low)}
                                   : detail::range_on(p, iv.low, iv.high));

  std::size_t best = 0;
  Rational value_low = ranges[0].first, value_high = ranges[0].second;
  for (std::size_t k = 1; k < ranges.size(); ++k) {
    value_low = std::max(value_low, ranges[k].first);
    if (ranges[k].second > value_high) {
      value_high = ranges[k].second;
      best = k;
    }
  }
  return {cands[best], value_low, value_high};
}

}  // namespace pcx
