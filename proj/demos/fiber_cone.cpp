// Toric data of a principal ideal: exchange quadrics, relation degrees,
// Ehrhart counts of the Newton polytope, and its normalized volume.

#include <iostream>

#include "symshift/toric.hpp"

using namespace symshift;

int main() {
  const Partition lam{0, 1, 2};
  auto I = sss_closure(3, {lam});

  auto Q = exchange_quadrics(I);
  std::cout << "generators: " << Q.gens.size() << "\n";
  for (size_t i = 0; i < Q.gens.size(); ++i) std::cout << "  T" << i + 1 << " = " << to_string(Q.gens[i]) << "\n";
  std::cout << "exchange quadrics:\n";
  for (const auto& q : Q.quadrics)
    std::cout << "  T" << q.lhs[0] + 1 << "*T" << q.lhs[1] + 1 << " - T" << q.rhs[0] + 1 << "*T" << q.rhs[1] + 1
              << "\n";

  auto R = check_quadratic_generation(I, 4);
  std::cout << "toric ideal generated by quadrics up to degree " << R.generated_by_quadrics_up_to << "\n";

  auto E = ehrhart(lam, 5);
  std::cout << "lattice points of k*P:";
  for (auto c : E.counts) std::cout << " " << c;
  std::cout << "\nnormalized volume: " << normalized_volume(lam) << "\n";

  auto F = fiber_type_check(I, 2, 3);
  std::cout << "fiber type certified: " << (F.certified ? "yes" : "no") << " (" << F.relation_count
            << " syzygy relations)\n";
  return 0;
}
