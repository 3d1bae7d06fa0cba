#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcx {

/// A Boolean function of n inputs, stored as its full truth table.
///
/// Table bit k holds f(x) where bit i of the integer k is input variable i.
/// The representation is canonical: two values are semantically equal iff
/// their (arity, table) pairs are byte-equal, which makes BoolFun directly
/// usable as a memoization key.
class BoolFun {
 public:
  static constexpr unsigned kMaxArity = 24;

  explicit BoolFun(unsigned arity) : arity_(check_arity(arity)), words_(word_count(arity), 0) {}

  template <class Pred>
  static BoolFun from_predicate(unsigned arity, Pred&& f) {
    BoolFun r(arity);
    for (std::uint64_t k = 0; k < r.table_size(); ++k)
      if (f(k)) r.set_value(k, true);
    return r;
  }

  /// Builds from a 0/1 string of length 2^n, position k = table bit k.
  static BoolFun from_table_string(std::string_view bits) {
    unsigned arity = 0;
    while ((std::uint64_t{1} << arity) < bits.size()) ++arity;
    if ((std::uint64_t{1} << arity) != bits.size())
      throw std::invalid_argument("table length must be a power of two");
    check_arity(arity);
    BoolFun r(arity);
    for (std::uint64_t k = 0; k < bits.size(); ++k) {
      if (bits[k] == '1')
        r.set_value(k, true);
      else if (bits[k] != '0')
        throw std::invalid_argument("table must consist of 0s and 1s");
    }
    return r;
  }

  unsigned arity() const { return arity_; }
  std::uint64_t table_size() const { return std::uint64_t{1} << arity_; }

  bool value(std::uint64_t input) const {
    return (words_[input >> 6] >> (input & 63)) & 1u;
  }

  void set_value(std::uint64_t input, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (input & 63);
    if (v)
      words_[input >> 6] |= mask;
    else
      words_[input >> 6] &= ~mask;
  }

  /// The constant value of the function, if it is constant.
  std::optional<bool> is_const() const {
    std::uint64_t first = words_[0] & 1u;
    std::uint64_t expect = first ? ~std::uint64_t{0} : 0;
    std::uint64_t used = table_size();
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t mask = used >= 64 ? ~std::uint64_t{0}
                                      : ((std::uint64_t{1} << used) - 1);
      if ((words_[w] & mask) != (expect & mask)) return std::nullopt;
      used -= used >= 64 ? 64 : used;
    }
    return first != 0;
  }

  /// The subfunction with input bit i fixed to b. The remaining variables
  /// keep their relative order and are reindexed 0..n-2.
  BoolFun fix_bit(unsigned i, bool b) const {
    if (arity_ == 0) throw std::domain_error("fix_bit on a 0-ary function");
    if (i >= arity_) throw std::out_of_range("fix_bit index out of range");
    BoolFun r(arity_ - 1);
    std::uint64_t low_mask = (std::uint64_t{1} << i) - 1;
    for (std::uint64_t k = 0; k < r.table_size(); ++k) {
      std::uint64_t idx = (k & low_mask) | (std::uint64_t{b} << i) | ((k & ~low_mask) << 1);
      if (value(idx)) r.set_value(k, true);
    }
    return r;
  }

  std::string table_string() const {
    std::string s(table_size(), '0');
    for (std::uint64_t k = 0; k < table_size(); ++k)
      if (value(k)) s[k] = '1';
    return s;
  }

  friend bool operator==(const BoolFun& a, const BoolFun& b) {
    return a.arity_ == b.arity_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BoolFun& a, const BoolFun& b) { return !(a == b); }
  friend bool operator<(const BoolFun& a, const BoolFun& b) {
    if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
    return a.words_ < b.words_;
  }

  struct Hash {
    std::size_t operator()(const BoolFun& f) const {
      std::uint64_t h = 0x9e3779b97f4a7c15ull ^ f.arity_;
      for (std::uint64_t w : f.words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  static unsigned check_arity(unsigned arity) {
    if (arity > kMaxArity) throw std::invalid_argument("arity too large");
    return arity;
  }
  static std::size_t word_count(unsigned arity) {
    std::uint64_t bits = std::uint64_t{1} << arity;
    return static_cast<std::size_t>((bits + 63) / 64);
  }

  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

inline unsigned popcount64(std::uint64_t v) {
  unsigned c = 0;
  while (v) {
    v &= v - 1;
    ++c;
  }
  return c;
}

inline BoolFun const_fun(unsigned n, bool b) {
  return BoolFun::from_predicate(n, [b](std::uint64_t) { return b; });
}

/// Projection onto input bit 0.
inline BoolFun dict_fun(unsigned n) {
  if (n < 1) throw std::invalid_argument("dict_fun needs arity >= 1");
  return BoolFun::from_predicate(n, [](std::uint64_t k) { return k & 1; });
}

inline BoolFun and_fun(unsigned n) {
  return BoolFun::from_predicate(
      n, [n](std::uint64_t k) { return k == (std::uint64_t{1} << n) - 1; });
}

inline BoolFun or_fun(unsigned n) {
  return BoolFun::from_predicate(n, [](std::uint64_t k) { return k != 0; });
}

inline BoolFun parity_fun(unsigned n) {
  return BoolFun::from_predicate(n, [](std::uint64_t k) { return popcount64(k) & 1u; });
}

/// True iff all inputs are equal.
inline BoolFun same_fun(unsigned n) {
  return BoolFun::from_predicate(n, [n](std::uint64_t k) {
    return k == 0 || k == (std::uint64_t{1} << n) - 1;
  });
}

/// Majority with ties going to 1, so even arities are permitted.
inline BoolFun maj_fun(unsigned n) {
  return BoolFun::from_predicate(
      n, [n](std::uint64_t k) { return 2 * popcount64(k) >= n; });
}

/// 5-bit example: not-all-equal on bits 0..2, or all-equal on bits 3..4.
inline BoolFun sim5_fun() {
  return BoolFun::from_predicate(5, [](std::uint64_t k) {
    std::uint64_t as = k & 7;
    std::uint64_t cs = (k >> 3) & 3;
    bool same_as = as == 0 || as == 7;
    bool same_cs = cs == 0 || cs == 3;
    return !same_as || same_cs;
  });
}

/// Applies `inner` to consecutive blocks of the input and `outer` to the
/// block results.
inline BoolFun compose_two_level(const BoolFun& outer, const BoolFun& inner) {
  unsigned m = outer.arity();
  unsigned k = inner.arity();
  unsigned arity = m * k;
  if (arity > BoolFun::kMaxArity) throw std::invalid_argument("composed arity too large");
  std::uint64_t inner_mask = (std::uint64_t{1} << k) - 1;
  return BoolFun::from_predicate(arity, [&, m, k](std::uint64_t input) {
    std::uint64_t outer_input = 0;
    for (unsigned j = 0; j < m; ++j) {
      std::uint64_t block = (input >> (j * k)) & inner_mask;
      if (inner.value(block)) outer_input |= std::uint64_t{1} << j;
    }
    return outer.value(outer_input);
  });
}

/// Two-level iterated 3-majority: maj3 of three block-wise maj3 results.
inline BoolFun maj2level_fun() { return compose_two_level(maj_fun(3), maj_fun(3)); }

}  // namespace pcx
