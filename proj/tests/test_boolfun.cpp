#include <pcx/boolfun.hpp>
#include <pcx/funcspec.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "support.hpp"

using namespace pcx;

namespace {

// Reference semantics for fixing one input: splice b back into position i.
std::uint64_t splice(std::uint64_t rest, unsigned i, bool b) {
  std::uint64_t low = rest & ((std::uint64_t{1} << i) - 1);
  std::uint64_t high = rest >> i;
  return low | (std::uint64_t{b} << i) | (high << (i + 1));
}

}  // namespace

TEST_CASE("builders produce the expected truth tables") {
  CHECK(parity_fun(2).table_string() == "0110");
  CHECK(and_fun(2).table_string() == "0001");
  CHECK(or_fun(2).table_string() == "0111");
  CHECK(same_fun(2).table_string() == "1001");
  CHECK(dict_fun(2).table_string() == "0101");
  CHECK(const_fun(2, true).table_string() == "1111");

  for (std::uint64_t k = 0; k < 8; ++k)
    CHECK(maj_fun(3).value(k) == (popcount64(k) >= 2));
  // Ties go to 1, so even arity is permitted.
  CHECK(maj_fun(2).table_string() == "0111");

  CHECK_THROWS_AS(dict_fun(0), std::invalid_argument);
}

TEST_CASE("the two-level majority example vote") {
  BoolFun f = maj2level_fun();
  // Groups (0,1,0), (1,0,1), (0,1,0): block majorities 0,1,0, so the final
  // majority is 0. Variable i is bit i of the table index.
  std::uint64_t k = 0b010101010;
  CHECK(f.value(k) == false);
  // Flipping the first and 8th bit swings the outcome.
  std::uint64_t swapped = k ^ 0b010000001;
  CHECK(f.value(swapped) == true);
}

TEST_CASE("sim5 matches its definition") {
  BoolFun f = sim5_fun();
  for (std::uint64_t k = 0; k < 32; ++k) {
    bool x0 = k & 1, x1 = (k >> 1) & 1, x2 = (k >> 2) & 1;
    bool x3 = (k >> 3) & 1, x4 = (k >> 4) & 1;
    bool same_as = (x0 == x1) && (x1 == x2);
    bool same_cs = x3 == x4;
    CHECK(f.value(k) == (!same_as || same_cs));
  }
}

TEST_CASE("constancy detection") {
  CHECK(const_fun(3, true).is_const() == std::optional<bool>(true));
  CHECK(const_fun(3, false).is_const() == std::optional<bool>(false));
  CHECK(!dict_fun(3).is_const().has_value());
  CHECK(and_fun(2).fix_bit(0, false).is_const() == std::optional<bool>(false));

  pcxtest::Rng rng(17);
  for (int it = 0; it < 50; ++it) {
    BoolFun f = pcxtest::random_boolfun(rng, 4);
    bool all0 = f.table_string().find('1') == std::string::npos;
    bool all1 = f.table_string().find('0') == std::string::npos;
    CHECK(f.is_const().has_value() == (all0 || all1));
  }
}

TEST_CASE("fixing bits of the dictator and conjunction") {
  CHECK(dict_fun(3).fix_bit(0, true) == const_fun(2, true));
  CHECK(dict_fun(3).fix_bit(0, false) == const_fun(2, false));
  CHECK(dict_fun(3).fix_bit(2, false) == dict_fun(2));
  CHECK(dict_fun(3).fix_bit(1, true) == dict_fun(2));
  CHECK(and_fun(2).fix_bit(1, true).table_string() == "01");  // identity on one bit

  CHECK_THROWS_AS(const_fun(0, true).fix_bit(0, false), std::domain_error);
  CHECK_THROWS_AS(dict_fun(2).fix_bit(2, false), std::out_of_range);
}

TEST_CASE("fix_bit agrees with splicing the bit back in") {
  pcxtest::Rng rng(4242);
  for (unsigned arity = 1; arity <= 6; ++arity) {
    for (int it = 0; it < 8; ++it) {
      BoolFun f = pcxtest::random_boolfun(rng, arity);
      for (unsigned i = 0; i < arity; ++i) {
        for (bool b : {false, true}) {
          BoolFun g = f.fix_bit(i, b);
          CHECK(g.arity() == arity - 1);
          for (std::uint64_t rest = 0; rest < g.table_size(); ++rest)
            CHECK(g.value(rest) == f.value(splice(rest, i, b)));
        }
      }
    }
  }
}

TEST_CASE("fixing the same variables in any order is canonical") {
  pcxtest::Rng rng(555);
  for (int it = 0; it < 40; ++it) {
    BoolFun f = pcxtest::random_boolfun(rng, 5);
    std::uniform_int_distribution<unsigned> pick(0, 4);
    unsigned i = pick(rng);
    unsigned j = pick(rng);
    if (i == j) continue;
    bool bi = rng() & 1, bj = rng() & 1;
    // Remaining variables shift down when an earlier one is fixed first.
    BoolFun ij = f.fix_bit(i, bi).fix_bit(j > i ? j - 1 : j, bj);
    BoolFun ji = f.fix_bit(j, bj).fix_bit(i > j ? i - 1 : i, bi);
    CHECK(ij == ji);
  }
}

TEST_CASE("parity restricts to parity or its negation") {
  for (unsigned n = 1; n <= 5; ++n) {
    BoolFun par = parity_fun(n);
    BoolFun par_down = parity_fun(n - 1);
    BoolFun not_par_down =
        BoolFun::from_predicate(n - 1, [&](std::uint64_t k) { return !par_down.value(k); });
    for (unsigned i = 0; i < n; ++i) {
      CHECK(par.fix_bit(i, false) == par_down);
      CHECK(par.fix_bit(i, true) == not_par_down);
    }
  }
}

TEST_CASE("two-level composition") {
  CHECK(compose_two_level(maj_fun(3), maj_fun(3)) == maj2level_fun());

  pcxtest::Rng rng(8);
  BoolFun inner = pcxtest::random_boolfun(rng, 2);
  BoolFun composed = compose_two_level(dict_fun(2), inner);
  REQUIRE(composed.arity() == 4);
  for (std::uint64_t k = 0; k < 16; ++k)
    CHECK(composed.value(k) == inner.value(k & 3));  // dictated by block 0

  BoolFun outer = pcxtest::random_boolfun(rng, 3);
  BoolFun constant_blocks = compose_two_level(outer, const_fun(1, false));
  CHECK(constant_blocks == const_fun(3, outer.value(0)));
}

TEST_CASE("table strings round-trip and reject junk") {
  BoolFun f = BoolFun::from_table_string("0110");
  CHECK(f == parity_fun(2));
  pcxtest::Rng rng(9);
  for (int it = 0; it < 20; ++it) {
    BoolFun g = pcxtest::random_boolfun(rng, 5);
    CHECK(BoolFun::from_table_string(g.table_string()) == g);
  }
  CHECK_THROWS_AS(BoolFun::from_table_string("011"), std::invalid_argument);
  CHECK_THROWS_AS(BoolFun::from_table_string("01x1"), std::invalid_argument);
}

TEST_CASE("function specs resolve to builders") {
  CHECK(realize(parse_function_spec("maj:3")) == maj_fun(3));
  CHECK(realize(parse_function_spec("const:2,1")) == const_fun(2, true));
  CHECK(realize(parse_function_spec("sim5")) == sim5_fun());
  CHECK(realize(parse_function_spec("maj2level")) == maj2level_fun());
  CHECK(realize(parse_function_spec("compose2:3,3")) == maj2level_fun());
  CHECK(realize(table_spec("0110")) == parity_fun(2));

  CHECK_THROWS_AS(parse_function_spec("maj:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_spec(":3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_spec("maj:3,x"), std::invalid_argument);
  CHECK_THROWS_AS(realize(parse_function_spec("nope")), std::invalid_argument);
  CHECK_THROWS_AS(realize(parse_function_spec("maj")), std::invalid_argument);
  CHECK_THROWS_AS(realize(parse_function_spec("const:2,7")), std::invalid_argument);
}
