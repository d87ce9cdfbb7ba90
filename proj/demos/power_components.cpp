// Walk the powers of a principal ideal: irredundant components, associated
// primes, and depth, all from the partition generator alone.

#include <iostream>

#include "symshift/decomp.hpp"
#include "symshift/invariants.hpp"

using namespace symshift;

int main() {
  const Partition lam{1, 2, 2, 4, 4};
  const int n = static_cast<int>(lam.size());
  std::cout << "lambda = " << to_string(lam) << "\n\n";

  for (int k = 1; k <= 3; ++k) {
    auto D = principal_decomposition(lam, k);
    verify_power_decomposition(D);
    std::cout << "I^" << k << " = intersect(";
    bool first = true;
    for (const auto& c : D.components)
      if (c.kept) {
        std::cout << (first ? "" : ", ") << "vs(" << n << "," << c.j << "," << c.m << ")";
        first = false;
      }
    std::cout << ")   [oracle-verified]\n";
  }

  auto I = sss_closure(n, {lam});
  auto st = stab_report(I, 4);
  std::cout << "\nastab = " << st.astab << (st.astab_exact ? " (exact)" : "") << ", stable heights {";
  for (size_t i = 0; i < st.stable_heights.size(); ++i) std::cout << (i ? "," : "") << st.stable_heights[i];
  std::cout << "}\n";
  std::cout << "depth R/I^k for k = 1..4:";
  for (int d : st.depth.depths) std::cout << " " << d;
  std::cout << "\n";
  return 0;
}
