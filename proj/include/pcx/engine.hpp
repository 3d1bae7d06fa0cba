#pragma once

#include <pcx/boolfun.hpp>
#include <pcx/dectree.hpp>
#include <pcx/piecewise.hpp>
#include <pcx/poly.hpp>
#include <pcx/rootiso.hpp>

#include <cstddef>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pcx {

namespace detail {

template <TreeAlgebra A>
const std::set<typename A::Carrier>& generate_all_rec(
    const A& alg, const BoolFun& f,
    std::unordered_map<BoolFun, std::set<typename A::Carrier>, BoolFun::Hash>& memo) {
  if (auto it = memo.find(f); it != memo.end()) return it->second;

  std::set<typename A::Carrier> out;
  if (auto b = f.is_const()) {
    out.insert(alg.res(*b));
  } else {
    for (unsigned i = 0; i < f.arity(); ++i) {
      const auto& s0 = generate_all_rec(alg, f.fix_bit(i, false), memo);
      const auto& s1 = generate_all_rec(alg, f.fix_bit(i, true), memo);
      for (const auto& t0 : s0)
        for (const auto& t1 : s1) out.insert(alg.pic(i, t0, t1));
    }
  }
  return memo.emplace(f, std::move(out)).first->second;
}

}  // namespace detail

/// Exhaustive candidate generation over any tree algebra: the full set of
/// foldings of every valid decision tree of f. No thinning; the result can
/// be astronomically large, which is the caller's responsibility.
/// Subfunction results are shared through a canonical-table cache, which
/// does not change the outcome.
template <TreeAlgebra A>
std::set<typename A::Carrier> generate_all(const A& alg, const BoolFun& f) {
  std::unordered_map<BoolFun, std::set<typename A::Carrier>, BoolFun::Hash> memo;
  return detail::generate_all_rec(alg, f, memo);
}

namespace detail {

inline Int count_trees_rec(const BoolFun& f,
                           std::unordered_map<BoolFun, Int, BoolFun::Hash>& memo) {
  if (f.is_const()) return 1;
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  Int total = 0;
  for (unsigned i = 0; i < f.arity(); ++i)
    total += count_trees_rec(f.fix_bit(i, false), memo) *
             count_trees_rec(f.fix_bit(i, true), memo);
  memo.emplace(f, total);
  return total;
}

}  // namespace detail

/// Number of valid decision trees of f: constants have exactly one, and
/// otherwise T_f = sum over i of T_{f|i=0} * T_{f|i=1}.
inline Int count_decision_trees(const BoolFun& f) {
  std::unordered_map<BoolFun, Int, BoolFun::Hash> memo;
  return detail::count_trees_rec(f, memo);
}

/// Greedy keeps an element unless something already kept dominates it;
/// Optimal additionally evicts kept elements dominated by a newcomer,
/// which yields exactly the Pareto front.
enum class ThinMode { Greedy, Optimal };

/// Prunes a candidate set: the result is a subset that dominates
/// everything removed (for every removed x some kept y has
/// cmp_poly(y, x) in {Less, Equal}).
inline PolySet thin(const PolySet& xs, ThinMode mode = ThinMode::Optimal) {
  std::vector<Poly> kept;
  for (const Poly& x : xs) {
    bool dominated = false;
    for (const Poly& y : kept) {
      CmpOutcome c = cmp_poly(y, x);
      if (c == CmpOutcome::Less || c == CmpOutcome::Equal) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    if (mode == ThinMode::Optimal) {
      std::erase_if(kept, [&](const Poly& y) { return cmp_poly(x, y) == CmpOutcome::Less; });
    }
    kept.push_back(x);
  }
  return PolySet(kept.begin(), kept.end());
}

/// Map from canonical truth tables to their pruned cost-polynomial sets.
/// One cache drives one computation session; distinct caches are fully
/// independent.
class MemoCache {
 public:
  const PolySet* find(const BoolFun& f) const {
    auto it = map_.find(f);
    return it == map_.end() ? nullptr : &it->second;
  }
  const PolySet& store(const BoolFun& f, PolySet s) {
    return map_.emplace(f, std::move(s)).first->second;
  }
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<BoolFun, PolySet, BoolFun::Hash> map_;
};

namespace detail {

template <class Rec>
PolySet thinned_step(const BoolFun& f, ThinMode mode, Rec&& rec) {
  if (auto b = f.is_const()) return {CostAlgebra{}.res(*b)};
  CostAlgebra alg;
  PolySet combined;
  for (unsigned i = 0; i < f.arity(); ++i) {
    PolySet s0 = rec(f.fix_bit(i, false));
    PolySet s1 = rec(f.fix_bit(i, true));
    for (const Poly& q0 : s0)
      for (const Poly& q1 : s1) combined.insert(alg.pic(i, q0, q1));
  }
  return thin(combined, mode);
}

inline PolySet generate_thinned_memo_rec(const BoolFun& f, MemoCache& cache, ThinMode mode) {
  if (const PolySet* hit = cache.find(f)) return *hit;
  PolySet out = thinned_step(
      f, mode, [&](const BoolFun& g) { return generate_thinned_memo_rec(g, cache, mode); });
  return cache.store(f, std::move(out));
}

}  // namespace detail

/// Candidate cost polynomials with thinning pushed into every recursive
/// step: a subset of generate_all(CostAlgebra, f) that dominates it.
inline PolySet generate_thinned(const BoolFun& f, ThinMode mode = ThinMode::Optimal) {
  return detail::thinned_step(f, mode,
                              [&](const BoolFun& g) { return generate_thinned(g, mode); });
}

/// Same result as generate_thinned; each distinct subfunction is computed
/// once per cache lifetime.
inline PolySet generate_thinned_memo(const BoolFun& f, MemoCache& cache,
                                     ThinMode mode = ThinMode::Optimal) {
  return detail::generate_thinned_memo_rec(f, cache, mode);
}

inline PolySet generate_thinned_memo(const BoolFun& f, ThinMode mode = ThinMode::Optimal) {
  MemoCache cache;
  return generate_thinned_memo(f, cache, mode);
}

/// Number of distinct subfunctions of arity >= 1 encountered in the
/// recursive generation call graph, f itself included; constants are
/// leaves. A 0-ary f counts as 1.
inline std::size_t count_distinct_subfunctions(const BoolFun& f) {
  if (f.arity() == 0) return 1;
  std::set<BoolFun> seen;
  std::vector<BoolFun> stack{f};
  seen.insert(f);
  while (!stack.empty()) {
    BoolFun g = stack.back();
    stack.pop_back();
    if (g.is_const() || g.arity() == 0) continue;
    for (unsigned i = 0; i < g.arity(); ++i) {
      for (bool b : {false, true}) {
        BoolFun sub = g.fix_bit(i, b);
        if (seen.insert(sub).second) stack.push_back(sub);
      }
    }
  }
  std::size_t count = 0;
  for (const BoolFun& g : seen)
    if (g.arity() >= 1) ++count;
  return count;
}

/// The level-p-complexity of f: the Pareto front of the thinned, memoized
/// cost-polynomial set. Its pointwise minimum at any p equals the minimum
/// expected cost over all decision trees of f.
inline PPoly level_p_complexity(const BoolFun& f) {
  return pareto_front(generate_thinned_memo(f));
}

}  // namespace pcx
