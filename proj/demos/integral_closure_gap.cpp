// A two-generator ideal whose integral closure strictly exceeds it:
// (1,4,7) = ((2,2,8) + (0,6,6)) / 2 lies in the Newton polyhedron but the
// monomial itself is missing from the ideal.

#include <iostream>

#include "symshift/symideal.hpp"

using namespace symshift;

int main() {
  auto I = sss_closure(3, {{2, 2, 8}, {0, 6, 6}});
  auto E = expand(I);
  const Exponent p{1, 4, 7};

  std::cout << "ideal: " << I.lambdas.size() << " partition generators\n";
  std::cout << "x^" << to_string(p) << " in I: " << (contains(I, p) ? "yes" : "no") << "\n";
  std::cout << "x^" << to_string(p) << " in closure(I): " << (integral_closure_contains(E, p) ? "yes" : "no")
            << "\n";

  auto scan = is_integrally_closed_up_to(E, 12);
  std::cout << "integrally closed up to degree 12: " << (scan.closed ? "yes" : "no") << "\n";
  if (!scan.closed) std::cout << "first gap at x^" << to_string(*scan.witness) << "\n";

  auto pw = closure_witness_search(E, p, 6);
  if (pw) std::cout << "certificate: (x^p)^" << *pw << " lies in I^" << *pw << "\n";
  return 0;
}
