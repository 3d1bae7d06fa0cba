#include <pcx/dectree.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace pcx;

namespace {

// The 3-majority example tree: query bit 0; on 0 continue with (what was)
// bit 2, on 1 with bit 1. Indices are local to the remaining inputs.
DecTree ex1() {
  return DecTree::pick(
      0,
      DecTree::pick(1, DecTree::res(false),
                    DecTree::pick(0, DecTree::res(false), DecTree::res(true))),
      DecTree::pick(0, DecTree::pick(0, DecTree::res(false), DecTree::res(true)),
                    DecTree::res(true)));
}

}  // namespace

TEST_CASE("folding with the initial algebra rebuilds the tree") {
  DecTree t = ex1();
  CHECK(fold_tree(DecTreeAlgebra{}, t) == t);
}

TEST_CASE("expected cost of the example trees") {
  CHECK(expected_cost(DecTree::res(false)) == Poly());
  CHECK(expected_cost(DecTree::res(true)) == Poly());
  CHECK(expected_cost(DecTree::pick(0, DecTree::res(false), DecTree::res(true))) == Poly{1});
  CHECK(expected_cost(ex1()) == Poly{2, 2, -2});
}

TEST_CASE("every decision tree of parity costs exactly its arity") {
  pcxtest::Rng rng(31);
  for (unsigned n = 1; n <= 4; ++n) {
    BoolFun par = parity_fun(n);
    for (int it = 0; it < 20; ++it) {
      DecTree t = pcxtest::random_valid_tree(rng, par);
      CHECK(expected_cost(t) == Poly{Rational(n)});
    }
  }
}

TEST_CASE("path-sum oracle on fixed examples") {
  CHECK(expected_cost_oracle(ex1(), 3) == Poly{2, 2, -2});
  CHECK(expected_cost_oracle(DecTree::res(true), 5) == Poly());
  CHECK_THROWS_AS(
      expected_cost_oracle(DecTree::pick(1, DecTree::res(false), DecTree::res(true)), 1),
      std::invalid_argument);
}

TEST_CASE("expected cost equals the path-sum oracle on random valid trees") {
  pcxtest::Rng rng(61);
  std::uniform_int_distribution<unsigned> arity(1, 5);
  for (int it = 0; it < 200; ++it) {
    unsigned n = arity(rng);
    BoolFun f = pcxtest::random_boolfun(rng, n);
    DecTree t = pcxtest::random_valid_tree(rng, f);
    CHECK(expected_cost(t) == expected_cost_oracle(t, n));
  }
}

TEST_CASE("tree validation enforces the rules of the game") {
  CHECK(validate_tree(DecTree::res(false), const_fun(2, false)));
  CHECK(!validate_tree(DecTree::res(true), const_fun(2, false)));
  CHECK(!validate_tree(DecTree::res(false), dict_fun(2)));
  CHECK(validate_tree(ex1(), maj_fun(3)));
  CHECK(!validate_tree(ex1(), parity_fun(3)));
  // Picking once the function is constant is illegal.
  CHECK(!validate_tree(DecTree::pick(0, DecTree::res(true), DecTree::res(true)),
                       const_fun(1, true)));
  // Out-of-range index.
  CHECK(!validate_tree(DecTree::pick(2, DecTree::res(false), DecTree::res(true)), dict_fun(2)));

  pcxtest::Rng rng(62);
  for (int it = 0; it < 50; ++it) {
    BoolFun f = pcxtest::random_boolfun(rng, 4);
    CHECK(validate_tree(pcxtest::random_valid_tree(rng, f), f));
  }
}

TEST_CASE("running a tree on explicit inputs") {
  auto [value, cost] = run_tree(ex1(), {true, true, false});
  CHECK(value == true);
  CHECK(cost == 2);

  auto [v2, c2] = run_tree(DecTree::res(true), {});
  CHECK(v2 == true);
  CHECK(c2 == 0);

  CHECK_THROWS_AS(run_tree(DecTree::pick(1, DecTree::res(false), DecTree::res(true)), {true}),
                  std::out_of_range);

  // The average path length over all 8 inputs is the expected cost at 1/2.
  Rational total = 0;
  for (std::uint64_t k = 0; k < 8; ++k) total += run_tree(ex1(), pcxtest::bits_of(k, 3)).cost;
  CHECK(total / 8 == expected_cost(ex1())(Rational(1, 2)));
  CHECK(total / 8 == Rational(5, 2));
}

TEST_CASE("valid trees compute their function on every input") {
  pcxtest::Rng rng(63);
  for (unsigned n = 1; n <= 5; ++n) {
    for (int it = 0; it < 10; ++it) {
      BoolFun f = pcxtest::random_boolfun(rng, n);
      DecTree t = pcxtest::random_valid_tree(rng, f);
      for (std::uint64_t k = 0; k < f.table_size(); ++k) {
        auto [value, cost] = run_tree(t, pcxtest::bits_of(k, n));
        CHECK(value == f.value(k));
        CHECK(cost <= n);
      }
    }
  }
}

TEST_CASE("cost polynomials stay within the depth bound on samples") {
  pcxtest::Rng rng(64);
  const Rational samples[] = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
  for (int it = 0; it < 50; ++it) {
    BoolFun f = pcxtest::random_boolfun(rng, 4);
    DecTree t = pcxtest::random_valid_tree(rng, f);
    Poly cost = expected_cost(t);
    for (const Rational& p : samples) {
      CHECK(cost(p) >= 0);
      CHECK(cost(p) <= 4);
    }
    // At the deterministic endpoints the cost is the exact path length.
    CHECK(cost(0) == run_tree(t, pcxtest::bits_of(0, 4)).cost);
    CHECK(cost(1) == run_tree(t, pcxtest::bits_of(15, 4)).cost);
  }
}

TEST_CASE("tree literals round-trip") {
  DecTree t = ex1();
  CHECK(to_string(t) ==
        "Pick 0 (Pick 1 (Res 0) (Pick 0 (Res 0) (Res 1))) "
        "(Pick 0 (Pick 0 (Res 0) (Res 1)) (Res 1))");
  CHECK(parse_dectree(to_string(t)) == t);
  CHECK(parse_dectree("Res 1") == DecTree::res(true));
  CHECK(parse_dectree("Pick 2 (Res 0) (Res 1)") ==
        DecTree::pick(2, DecTree::res(false), DecTree::res(true)));
  CHECK_THROWS_AS(parse_dectree("Pick 0 (Res 0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dectree("Nonsense"), std::invalid_argument);

  pcxtest::Rng rng(65);
  for (int it = 0; it < 30; ++it) {
    DecTree random = pcxtest::random_valid_tree(rng, pcxtest::random_boolfun(rng, 4));
    CHECK(parse_dectree(to_string(random)) == random);
  }
}

TEST_CASE("trees order deterministically") {
  DecTree a = DecTree::res(false);
  DecTree b = DecTree::res(true);
  DecTree c = DecTree::pick(0, a, b);
  CHECK(a < b);
  CHECK(b < c);  // leaves sort before branches
  CHECK(!(c < c));
}
