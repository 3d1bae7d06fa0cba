#pragma once

#include <pcx/boolfun.hpp>
#include <pcx/dectree.hpp>
#include <pcx/poly.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace pcxtest {

using Rng = std::mt19937_64;

inline pcx::Rational random_rational(Rng& rng, int num_range = 9, int den_range = 9) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return pcx::Rational(num(rng), den(rng));
}

inline pcx::Poly random_poly(Rng& rng, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<pcx::Rational> cs(deg(rng) + 1);
  for (auto& c : cs) c = random_rational(rng);
  return pcx::Poly(std::move(cs));
}

inline pcx::BoolFun random_boolfun(Rng& rng, unsigned arity) {
  return pcx::BoolFun::from_predicate(arity, [&](std::uint64_t) { return rng() & 1u; });
}

/// A uniformly-picked valid decision tree: random index at every
/// non-constant node, Res as soon as the restriction is constant.
inline pcx::DecTree random_valid_tree(Rng& rng, const pcx::BoolFun& f) {
  if (auto b = f.is_const()) return pcx::DecTree::res(*b);
  std::uniform_int_distribution<unsigned> pick(0, f.arity() - 1);
  unsigned i = pick(rng);
  return pcx::DecTree::pick(i, random_valid_tree(rng, f.fix_bit(i, false)),
                            random_valid_tree(rng, f.fix_bit(i, true)));
}

inline std::vector<bool> bits_of(std::uint64_t k, unsigned n) {
  std::vector<bool> bits(n);
  for (unsigned i = 0; i < n; ++i) bits[i] = (k >> i) & 1u;
  return bits;
}

}  // namespace pcxtest
