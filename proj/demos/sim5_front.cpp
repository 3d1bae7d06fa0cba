// Minimal library walkthrough: compute the level-p-complexity of the
// 5-bit example function, then report where each front member is minimal.

#include <pcx/engine.hpp>
#include <pcx/piecewise.hpp>

#include <iostream>

int main() {
  using namespace pcx;

  BoolFun f = sim5_fun();
  std::cout << "decision trees: " << count_decision_trees(f).str() << "\n";

  PPoly front = level_p_complexity(f);
  std::cout << "front:\n";
  for (const Poly& p : front) std::cout << "  " << p << "\n";

  auto bps = breakpoints(front, Rational(1, 1000000));
  for (const Segment& s : min_segments(front, bps))
    std::cout << "minimal on [" << to_decimal(s.from, 4) << ", " << to_decimal(s.to, 4)
              << "]: " << s.which << "\n";

  std::cout << "cost at 1/2: " << to_string(eval_min(front, Rational(1, 2))) << "\n";
  return 0;
}
