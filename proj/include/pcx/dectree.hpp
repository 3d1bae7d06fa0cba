#pragma once

#include <pcx/boolfun.hpp>
#include <pcx/poly.hpp>

#include <concepts>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcx {

/// A decision tree: either a result leaf or a branch that queries one input
/// bit and continues in the subtree selected by its value.
///
/// Indices are local: `pick(i, ...)` queries position i of the *remaining*
/// inputs, so subtrees compose with BoolFun::fix_bit without renaming.
/// Validity relative to a function is a runtime check (validate_tree).
class DecTree {
 public:
  static DecTree res(bool b) {
    return DecTree(std::make_shared<const Node>(Node{true, b, 0, nullptr, nullptr}));
  }

  static DecTree pick(unsigned index, DecTree if0, DecTree if1) {
    return DecTree(std::make_shared<const Node>(
        Node{false, false, index, std::move(if0.node_), std::move(if1.node_)}));
  }

  bool is_res() const { return node_->leaf; }
  bool result() const {
    require(is_res(), "result() on a Pick node");
    return node_->value;
  }
  unsigned index() const {
    require(!is_res(), "index() on a Res leaf");
    return node_->index;
  }
  DecTree child(bool b) const {
    require(!is_res(), "child() on a Res leaf");
    return DecTree(b ? node_->c1 : node_->c0);
  }

  unsigned depth() const {
    if (is_res()) return 0;
    return 1 + std::max(child(false).depth(), child(true).depth());
  }

  friend bool operator==(const DecTree& a, const DecTree& b) { return compare(a, b) == 0; }
  friend bool operator!=(const DecTree& a, const DecTree& b) { return compare(a, b) != 0; }
  friend bool operator<(const DecTree& a, const DecTree& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    bool leaf;
    bool value;
    unsigned index;
    std::shared_ptr<const Node> c0, c1;
  };

  explicit DecTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static void require(bool ok, const char* msg) {
    if (!ok) throw std::logic_error(msg);
  }

  // Res < Pick; leaves by value; branches by (index, child0, child1).
  static int compare(const DecTree& a, const DecTree& b) {
    if (a.node_ == b.node_) return 0;
    if (a.is_res() != b.is_res()) return a.is_res() ? -1 : 1;
    if (a.is_res()) return int(a.result()) - int(b.result());
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    if (int c = compare(a.child(false), b.child(false)); c != 0) return c;
    return compare(a.child(true), b.child(true));
  }

  std::shared_ptr<const Node> node_;
};

/// A tree algebra: a carrier with a leaf constructor and a branch
/// combiner, plus a total order so candidate sets can be stored.
template <class A>
concept TreeAlgebra = requires(const A& alg, bool b, unsigned i, const typename A::Carrier& c) {
  typename A::Carrier;
  { alg.res(b) } -> std::same_as<typename A::Carrier>;
  { alg.pic(i, c, c) } -> std::same_as<typename A::Carrier>;
  { c < c } -> std::convertible_to<bool>;
};

template <TreeAlgebra A>
typename A::Carrier fold_tree(const A& alg, const DecTree& t) {
  if (t.is_res()) return alg.res(t.result());
  return alg.pic(t.index(), fold_tree(alg, t.child(false)), fold_tree(alg, t.child(true)));
}

/// Expected-cost polynomials: a leaf costs nothing; a branch costs one
/// query plus (1-x) times the 0-branch cost plus x times the 1-branch cost.
struct CostAlgebra {
  using Carrier = Poly;
  Poly res(bool) const { return Poly(); }
  Poly pic(unsigned, const Poly& q0, const Poly& q1) const {
    return Poly::one() + (Poly::one() - Poly::x()) * q0 + Poly::x() * q1;
  }
};

/// The initial algebra: folding with it rebuilds the tree.
struct DecTreeAlgebra {
  using Carrier = DecTree;
  DecTree res(bool b) const { return DecTree::res(b); }
  DecTree pic(unsigned i, const DecTree& t0, const DecTree& t1) const {
    return DecTree::pick(i, t0, t1);
  }
};

inline Poly expected_cost(const DecTree& t) { return fold_tree(CostAlgebra{}, t); }

namespace detail {
inline void cost_paths(const DecTree& t, unsigned zeros, unsigned ones, unsigned remaining,
                       Poly& acc) {
  if (t.is_res()) {
    Rational len(zeros + ones);
    Poly term = Poly::constant(len);
    for (unsigned k = 0; k < ones; ++k) term = term * Poly::x();
    for (unsigned k = 0; k < zeros; ++k) term = term * (Poly::one() - Poly::x());
    acc = acc + term;
    return;
  }
  if (t.index() >= remaining)
    throw std::invalid_argument("invalid tree: pick index exceeds remaining inputs");
  cost_paths(t.child(false), zeros + 1, ones, remaining - 1, acc);
  cost_paths(t.child(true), zeros, ones + 1, remaining - 1, acc);
}
}  // namespace detail

/// Independent expected-cost computation: sums, over every root-to-leaf
/// path, the path length weighted by x^(#ones queried) (1-x)^(#zeros
/// queried). Agrees with expected_cost for every valid tree; kept separate
/// as a cross-check.
inline Poly expected_cost_oracle(const DecTree& t, unsigned arity) {
  Poly acc;
  detail::cost_paths(t, 0, 0, arity, acc);
  return acc;
}

/// Checks the rules of the game: Res only at constant functions (with the
/// right value), Pick only at non-constant ones with an in-range index,
/// and both subtrees valid for the corresponding restrictions.
inline bool validate_tree(const DecTree& t, const BoolFun& f) {
  auto c = f.is_const();
  if (t.is_res()) return c.has_value() && *c == t.result();
  if (c.has_value() || t.index() >= f.arity()) return false;
  return validate_tree(t.child(false), f.fix_bit(t.index(), false)) &&
         validate_tree(t.child(true), f.fix_bit(t.index(), true));
}

struct TreeRun {
  bool result;
  unsigned cost;
};

/// Evaluates `bits` along the tree. Pick i consumes position i of the
/// current remaining-bit list; cost is the number of picks traversed.
inline TreeRun run_tree(const DecTree& t, std::vector<bool> bits) {
  DecTree cur = t;
  unsigned cost = 0;
  while (!cur.is_res()) {
    unsigned i = cur.index();
    if (i >= bits.size()) throw std::out_of_range("run_tree: pick index out of range");
    bool b = bits[i];
    bits.erase(bits.begin() + i);
    cur = cur.child(b);
    ++cost;
  }
  return {cur.result(), cost};
}

inline std::string to_string(const DecTree& t) {
  if (t.is_res()) return std::string("Res ") + (t.result() ? "1" : "0");
  return "Pick " + std::to_string(t.index()) + " (" + to_string(t.child(false)) + ") (" +
         to_string(t.child(true)) + ")";
}

namespace detail {
inline DecTree parse_tree(std::string_view s, std::size_t& i);

inline void skip_spaces(std::string_view s, std::size_t& i) {
  while (i < s.size() && s[i] == ' ') ++i;
}

inline unsigned parse_number(std::string_view s, std::size_t& i) {
  skip_spaces(s, i);
  if (i >= s.size() || s[i] < '0' || s[i] > '9')
    throw std::invalid_argument("bad decision tree literal");
  unsigned v = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') v = v * 10 + unsigned(s[i++] - '0');
  return v;
}

inline DecTree parse_operand(std::string_view s, std::size_t& i) {
  skip_spaces(s, i);
  if (i < s.size() && s[i] == '(') {
    ++i;
    DecTree t = parse_tree(s, i);
    skip_spaces(s, i);
    if (i >= s.size() || s[i] != ')') throw std::invalid_argument("bad decision tree literal");
    ++i;
    return t;
  }
  return parse_tree(s, i);
}

inline DecTree parse_tree(std::string_view s, std::size_t& i) {
  skip_spaces(s, i);
  if (s.substr(i).starts_with("Res")) {
    i += 3;
    return DecTree::res(parse_number(s, i) != 0);
  }
  if (s.substr(i).starts_with("Pick")) {
    i += 4;
    unsigned idx = parse_number(s, i);
    DecTree t0 = parse_operand(s, i);
    DecTree t1 = parse_operand(s, i);
    return DecTree::pick(idx, std::move(t0), std::move(t1));
  }
  throw std::invalid_argument("bad decision tree literal");
}
}  // namespace detail

/// Parses the textual form, e.g. "Pick 0 (Res 0) (Res 1)".
inline DecTree parse_dectree(std::string_view s) {
  std::size_t i = 0;
  DecTree t = detail::parse_tree(s, i);
  detail::skip_spaces(s, i);
  if (i != s.size()) throw std::invalid_argument("bad decision tree literal");
  return t;
}

}  // namespace pcx
