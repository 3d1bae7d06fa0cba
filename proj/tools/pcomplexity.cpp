// Command-line front end: computes level-p-complexity of Boolean
// functions, counts decision trees and subfunctions, compares cost
// polynomials, and exports plot data.

#include <pcx/engine.hpp>
#include <pcx/funcspec.hpp>
#include <pcx/piecewise.hpp>
#include <pcx/serialize.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace pcx;

unsigned max_naive_arity() {
  if (const char* env = std::getenv("PCOMPLEXITY_MAX_NAIVE_ARITY")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("PCOMPLEXITY_MAX_NAIVE_ARITY is not a number");
    }
  }
  return 5;
}

BoolFun resolve_function(const std::string& fn, const std::string& table) {
  if (!table.empty()) {
    if (!fn.empty()) throw CLI::ValidationError("fn", "give either a builtin spec or --table");
    return realize(table_spec(table));
  }
  if (fn.empty()) throw CLI::ValidationError("fn", "missing function (builtin spec or --table)");
  try {
    return realize(parse_function_spec(fn));
  } catch (const SpecUsageError& e) {
    throw CLI::ValidationError("fn", e.what());
  }
}

struct ComplexityOptions {
  std::string fn;
  std::string table;
  std::string mode = "thin-memo";
  std::string width;
  bool json = false;
  bool force = false;
};

void run_complexity(const ComplexityOptions& opt) {
  BoolFun f = resolve_function(opt.fn, opt.table);

  PolySet generated;
  if (opt.mode == "naive") {
    unsigned limit = max_naive_arity();
    if (f.arity() > limit && !opt.force)
      throw std::invalid_argument(
          "naive mode on arity " + std::to_string(f.arity()) + " can blow up combinatorially; " +
          "re-run with --force or set PCOMPLEXITY_MAX_NAIVE_ARITY");
    generated = generate_all(CostAlgebra{}, f);
  } else if (opt.mode == "thin") {
    generated = generate_thinned(f);
  } else {
    generated = generate_thinned_memo(f);
  }
  PPoly front = pareto_front(generated);

  bool want_breakpoints = opt.json || !opt.width.empty();
  std::vector<Breakpoint> bps;
  std::vector<Segment> segments;
  if (want_breakpoints) {
    Rational width = opt.width.empty() ? Rational(1, 1000000) : parse_rational(opt.width);
    if (width <= 0) throw std::invalid_argument("breakpoint width must be positive");
    bps = breakpoints(front, width);
    segments = min_segments(front, bps);
  }

  if (opt.json) {
    std::cout << complexity_report(front, bps, segments).dump() << "\n";
    return;
  }
  for (const Poly& p : front) std::cout << to_string(p) << "\n";
  if (want_breakpoints) {
    std::cout << "breakpoints:\n";
    for (const Breakpoint& b : bps)
      std::cout << "  [" << to_string(b.where.low) << ", " << to_string(b.where.high) << "] "
                << to_string(b.left) << " -> " << to_string(b.right) << "\n";
    std::cout << "segments:\n";
    for (const Segment& s : segments)
      std::cout << "  [" << to_decimal(s.from, 6) << ", " << to_decimal(s.to, 6) << "] "
                << to_string(s.which) << "\n";
  }
}

void run_sample(const std::string& fn, const std::string& table, unsigned points) {
  if (points == 0) throw std::invalid_argument("--points must be at least 1");
  BoolFun f = resolve_function(fn, table);
  PPoly front = level_p_complexity(f);
  std::cout << "p,cost\n";
  for (unsigned k = 0; k <= points; ++k) {
    Rational p(k, points);
    std::cout << to_decimal(p, 6) << "," << to_decimal(eval_min(front, p), 6) << "\n";
  }
}

void run_max(const std::string& poly_text, const std::string& width_text) {
  Poly p = parse_poly(poly_text);
  Rational width = parse_rational(width_text);
  if (width <= 0) throw std::invalid_argument("--width must be positive");
  UnitMax m = max_on_unit(p, width);
  std::cout << "argmax [" << to_string(m.where.low) << ", " << to_string(m.where.high) << "] ~ ["
            << to_decimal(m.where.low, 6) << ", " << to_decimal(m.where.high, 6) << "]\n";
  std::cout << "value  [" << to_string(m.value_low) << ", " << to_string(m.value_high) << "] ~ ["
            << to_decimal(m.value_low, 6) << ", " << to_decimal(m.value_high, 6) << "]\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-p-complexity of Boolean functions"};
  app.require_subcommand(1);

  ComplexityOptions copt;
  auto* complexity = app.add_subcommand("complexity", "Pareto front of minimal cost polynomials");
  complexity->add_option("fn", copt.fn, "builtin function spec (see `list`)");
  complexity->add_option("--table", copt.table, "truth table as a 0/1 string of length 2^n");
  complexity->add_option("--mode", copt.mode, "generation route")
      ->check(CLI::IsMember({"naive", "thin", "thin-memo"}))
      ->default_str("thin-memo");
  complexity->add_flag("--json", copt.json, "emit the JSON report");
  complexity->add_option("--breakpoints", copt.width,
                         "also print the piecewise decomposition, refined to this width");
  complexity->add_flag("--force", copt.force, "allow naive mode above the arity guard");
  complexity->callback([&] { run_complexity(copt); });

  std::string fn, table;
  auto* count_trees = app.add_subcommand("count-trees", "number of valid decision trees");
  count_trees->add_option("fn", fn, "builtin function spec");
  count_trees->add_option("--table", table, "truth table as a 0/1 string");
  count_trees->callback(
      [&] { std::cout << count_decision_trees(resolve_function(fn, table)).str() << "\n"; });

  auto* count_subfns = app.add_subcommand("count-subfns", "number of distinct subfunctions");
  count_subfns->add_option("fn", fn, "builtin function spec");
  count_subfns->add_option("--table", table, "truth table as a 0/1 string");
  count_subfns->callback(
      [&] { std::cout << count_distinct_subfunctions(resolve_function(fn, table)) << "\n"; });

  std::string poly_a, poly_b;
  auto* compare = app.add_subcommand("compare", "order two cost polynomials");
  compare->add_option("polyA", poly_a, "first polynomial, e.g. \"P [0, 1]\"")->required();
  compare->add_option("polyB", poly_b, "second polynomial")->required();
  compare->callback(
      [&] { std::cout << to_string(cmp_poly(parse_poly(poly_a), parse_poly(poly_b))) << "\n"; });

  unsigned points = 100;
  auto* sample = app.add_subcommand("sample", "CSV of the complexity on a grid");
  sample->add_option("fn", fn, "builtin function spec");
  sample->add_option("--table", table, "truth table as a 0/1 string");
  sample->add_option("--points", points, "number of grid steps (N+1 rows)");
  sample->callback([&] { run_sample(fn, table, points); });

  std::string poly_text, width_text = "1/1000000";
  auto* max_cmd = app.add_subcommand("max", "maximum of a polynomial over [0,1]");
  max_cmd->add_option("poly", poly_text, "polynomial, e.g. \"P [4, 4, 6]\"")->required();
  max_cmd->add_option("--width", width_text, "refinement width for the argmax interval");
  max_cmd->callback([&] { run_max(poly_text, width_text); });

  auto* list = app.add_subcommand("list", "available builtin functions");
  list->callback([&] {
    for (const auto& [name, info] : pcx::builtin_catalog())
      std::cout << info.usage << "\t" << info.blurb << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
