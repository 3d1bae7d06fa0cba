#pragma once

#include <pcx/boolfun.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcx {

/// A malformed spec: unknown builtin or wrong parameter count. Callers
/// treat this as a usage problem, unlike domain errors raised by the
/// builders themselves.
struct SpecUsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A command-line function description: a builtin name with integer
/// parameters ("maj:3", "const:2,1", "sim5"), or a raw truth table.
struct FunctionSpec {
  std::string name;              // builtin name, or "table"
  std::vector<unsigned> params;
  std::string table;             // 0/1 string when name == "table"
};

inline FunctionSpec table_spec(std::string bits) { return {"table", {}, std::move(bits)}; }

/// Parses "name" or "name:p1,p2,..." with decimal integer parameters.
inline FunctionSpec parse_function_spec(std::string_view text) {
  auto fail = [&] { throw SpecUsageError("bad function spec: '" + std::string(text) + "'"); };
  FunctionSpec spec;
  std::size_t colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) fail();
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      std::size_t comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      if (item.empty()) fail();
      unsigned v = 0;
      for (char ch : item) {
        if (ch < '0' || ch > '9') fail();
        v = v * 10 + unsigned(ch - '0');
      }
      spec.params.push_back(v);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (spec.params.empty()) fail();
  }
  return spec;
}

struct BuiltinInfo {
  const char* usage;
  const char* blurb;
};

inline const std::vector<std::pair<std::string, BuiltinInfo>>& builtin_catalog() {
  static const std::vector<std::pair<std::string, BuiltinInfo>> catalog = {
      {"const", {"const:n,b", "constant b on n inputs"}},
      {"dict", {"dict:n", "projection onto input 0"}},
      {"and", {"and:n", "n-ary conjunction"}},
      {"or", {"or:n", "n-ary disjunction"}},
      {"parity", {"parity:n", "1 iff an odd number of inputs are 1"}},
      {"same", {"same:n", "1 iff all inputs are equal"}},
      {"maj", {"maj:n", "majority, ties going to 1"}},
      {"sim5", {"sim5", "5-bit example with a two-piece minimum"}},
      {"maj2level", {"maj2level", "maj:3 applied to three maj:3 blocks"}},
      {"compose2", {"compose2:m,k", "maj:m applied to m maj:k blocks"}},
  };
  return catalog;
}

/// Builds the truth table a spec describes.
inline BoolFun realize(const FunctionSpec& spec) {
  auto want = [&](std::size_t n) {
    if (spec.params.size() != n)
      throw SpecUsageError("function '" + spec.name + "' expects " + std::to_string(n) +
                           " parameter(s)");
  };
  if (spec.name == "table") return BoolFun::from_table_string(spec.table);
  if (spec.name == "const") {
    want(2);
    if (spec.params[1] > 1) throw std::invalid_argument("const value must be 0 or 1");
    return const_fun(spec.params[0], spec.params[1] != 0);
  }
  if (spec.name == "dict") {
    want(1);
    return dict_fun(spec.params[0]);
  }
  if (spec.name == "and") {
    want(1);
    return and_fun(spec.params[0]);
  }
  if (spec.name == "or") {
    want(1);
    return or_fun(spec.params[0]);
  }
  if (spec.name == "parity") {
    want(1);
    return parity_fun(spec.params[0]);
  }
  if (spec.name == "same") {
    want(1);
    return same_fun(spec.params[0]);
  }
  if (spec.name == "maj") {
    want(1);
    return maj_fun(spec.params[0]);
  }
  if (spec.name == "sim5") {
    want(0);
    return sim5_fun();
  }
  if (spec.name == "maj2level") {
    want(0);
    return maj2level_fun();
  }
  if (spec.name == "compose2") {
    want(2);
    return compose_two_level(maj_fun(spec.params[0]), maj_fun(spec.params[1]));
  }
  throw SpecUsageError("unknown function '" + spec.name + "'");
}

}  // namespace pcx
