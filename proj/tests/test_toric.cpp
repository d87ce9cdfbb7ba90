// Tests for the toric module: permutohedron geometry and Ehrhart counts,
// normalized volumes against descent counts, the minimal monomial
// reduction, exchange quadrics and quadratic generation, the Rees-algebra
// fiber-type certificate, and the toric Hilbert function.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "symshift/invariants.hpp"
#include "symshift/toric.hpp"

using namespace symshift;

namespace {

Partition rand_partition(std::mt19937_64& rng, int n, Int degmax) {
  std::uniform_int_distribution<Int> d(0, degmax);
  Partition p(n);
  for (auto& v : p) v = d(rng);
  std::sort(p.begin(), p.end());
  if (total_of(p) == 0) p[n - 1] = 1;
  return p;
}

}  // namespace

TEST_CASE("permutohedron vertices and membership") {
  auto V = permutohedron_vertices({0, 1, 2});
  CHECK(V.size() == 6);
  CHECK(std::is_sorted(V.begin(), V.end()));
  CHECK(permutohedron_vertices({0, 1, 1}).size() == 3);
  CHECK(permutohedron_vertices({2, 2, 2}) == std::vector<Exponent>{{2, 2, 2}});
  // every vertex lies in the polytope; the barycenter does for (0,1,2)
  for (const auto& v : V) CHECK(permutohedron_contains({0, 1, 2}, v));
  CHECK(permutohedron_contains({0, 1, 2}, {1, 1, 1}));
  CHECK_FALSE(permutohedron_contains({0, 1, 2}, {0, 0, 3}));
  CHECK_FALSE(permutohedron_contains({0, 1, 2}, {1, 1, 2}));  // wrong total
  CHECK_THROWS_AS(permutohedron_contains({0, 1, 2}, {1, 1}), std::invalid_argument);

  // membership agrees with the generator slice of the closure ideal
  std::mt19937_64 rng(701);
  std::uniform_int_distribution<Int> d(0, 4);
  for (int t = 0; t < 150; ++t) {
    Partition lam = rand_partition(rng, 4, 3);
    auto S = sss_closure(4, {lam});
    Exponent p(4);
    for (auto& v : p) v = d(rng);
    const bool box = permutohedron_contains(lam, p);
    const bool ideal = total_of(p) == total_of(lam) && contains(S, part_of(p));
    CHECK(box == ideal);
  }
}

TEST_CASE("Ehrhart polynomial of the full permutohedron") {
  auto E = ehrhart({0, 1, 2}, 5);
  CHECK(E.counts == std::vector<long long>{1, 7, 19, 37, 61, 91});
  CHECK(E.polynomial.coeff(0) == 1);
  CHECK(E.polynomial.coeff(1) == 3);
  CHECK(E.polynomial.coeff(2) == 3);
  CHECK(E.polynomial.degree() == 2);
  CHECK_THROWS_AS(ehrhart({0, 1, 2}, 2), std::invalid_argument);

  CHECK(normalized_volume({0, 1, 2}) == 6);
  CHECK(normalized_volume({2, 2, 2}) == 0);  // a single point
  // hypersimplex volumes are the descent-counting numbers
  CHECK(normalized_volume({0, 0, 1, 1}) == Rat(eulerian_number(3, 1)));
  CHECK(normalized_volume({0, 1, 1}) == Rat(eulerian_number(2, 0)));
  CHECK(normalized_volume({0, 0, 1, 1, 1}) == Rat(eulerian_number(4, 2)));
}

TEST_CASE("descent counting and its budget") {
  CHECK(eulerian_number(3, 1) == 4);
  CHECK(eulerian_number(5, 0) == 1);
  CHECK(eulerian_number(5, 1) == 26);
  CHECK(eulerian_number(5, 2) == 66);
  CHECK(eulerian_number(5, 3) == 26);
  CHECK(eulerian_number(5, 4) == 1);
  CHECK(eulerian_number(0, 0) == 1);
  CHECK(eulerian_number(4, 5) == 0);
  // row sums are factorials
  BigInt row = 0;
  for (int d = 0; d < 6; ++d) row += eulerian_number(6, d);
  CHECK(row == factorial(6));
  CHECK_THROWS_AS(eulerian_number(20, 3), BudgetExceeded);
  CHECK_THROWS_AS(eulerian_number(-1, 0), std::invalid_argument);
}

TEST_CASE("polytope normality and the minimal monomial reduction") {
  verify_polytope_normality({0, 1, 2}, 4);
  verify_polytope_normality({1, 2, 2, 4}, 3);
  auto L = minimal_monomial_reduction({0, 1, 2});
  CHECK(L.gens.size() == 6);
  verify_minimal_monomial_reduction({0, 1, 2});
  verify_minimal_monomial_reduction({0, 2, 3});
  verify_minimal_monomial_reduction({1, 1, 2, 2});
}

TEST_CASE("exchange quadrics of equigenerated ideals") {
  CHECK(exchange_quadrics(sss_closure(2, {{1, 1}})).quadrics.empty());
  CHECK(exchange_quadrics(squarefree_veronese(3, 2)).quadrics.empty());

  auto Q = exchange_quadrics(sss_closure(3, {{0, 1, 2}}));
  CHECK(Q.gens.size() == 7);
  CHECK(Q.quadrics.size() == 9);
  for (const auto& q : Q.quadrics) {
    // each relation lies in the kernel of the monomial map
    CHECK(vec_add(Q.gens[q.lhs[0]], Q.gens[q.lhs[1]]) ==
          vec_add(Q.gens[q.rhs[0]], Q.gens[q.rhs[1]]));
    CHECK(q.lhs < q.rhs);
    CHECK(q.lhs[0] <= q.lhs[1]);
    CHECK(q.rhs[0] <= q.rhs[1]);
  }
  CHECK(std::is_sorted(Q.quadrics.begin(), Q.quadrics.end()));

  auto ex22 = from_partitions(4, {{1, 1, 2, 2}, {0, 2, 2, 2}, {0, 1, 2, 3}});
  auto Q3 = exchange_quadrics(ex22);
  CHECK(Q3.gens.size() == 34);
  CHECK(Q3.quadrics.size() == 597);
  CHECK_THROWS_AS(exchange_quadrics(sss_closure(3, {{0, 1, 2}, {0, 0, 4}})),
                  std::invalid_argument);
}

TEST_CASE("quadratic generation holds for principal closures and fails beyond") {
  auto G = check_quadratic_generation(sss_closure(3, {{0, 1, 2}}), 4);
  CHECK(G.generated_by_quadrics_up_to == 4);
  for (const auto& [k, c] : G.minimal_relation_counts) {
    (void)k;
    CHECK(c == 0);
  }
  CHECK_FALSE(G.truncated);

  // the shifted-but-not-strongly ideal needs cubics: 8 fresh in degree 2
  // (relations beyond the exchange quadrics) and 28 fresh cubics
  auto ex22 = from_partitions(4, {{1, 1, 2, 2}, {0, 2, 2, 2}, {0, 1, 2, 3}});
  auto G2 = check_quadratic_generation(ex22, 3);
  CHECK(G2.generated_by_quadrics_up_to == 1);
  CHECK(G2.minimal_relation_counts.at(2) == 8);
  CHECK(G2.minimal_relation_counts.at(3) == 28);
  CHECK_FALSE(G2.truncated);

  // more principal closures across shapes
  std::mt19937_64 rng(702);
  for (int t = 0; t < 8; ++t) {
    Partition lam = rand_partition(rng, 3, 3);
    auto R = check_quadratic_generation(sss_closure(3, {lam}), 3);
    CHECK(R.generated_by_quadrics_up_to == 3);
  }
  CHECK_THROWS_AS(check_quadratic_generation(sss_closure(3, {{0, 1, 2}}), 1),
                  std::invalid_argument);
}

TEST_CASE("syzygy move sets mirror the descent count") {
  CHECK(syzygy_move_set({0, 1, 1}) == std::vector<int>{0});
  CHECK(syzygy_move_set({1, 1, 0}) == std::vector<int>{});
  CHECK(syzygy_move_set({0, 1, 2}) == std::vector<int>{0, 1});
  CHECK(syzygy_move_set({2, 0, 1, 2}) == std::vector<int>{1, 2});
  std::mt19937_64 rng(703);
  std::uniform_int_distribution<Int> d(0, 4);
  for (int t = 0; t < 80; ++t) {
    Exponent u(4);
    for (auto& v : u) v = d(rng);
    if (*std::max_element(u.begin(), u.end()) == 0) u[0] = 1;
    CHECK(static_cast<int>(syzygy_move_set(u).size()) == cu_size(u));
  }
}

TEST_CASE("fiber-type certificate for strongly shifted ideals") {
  auto F1 = fiber_type_check(squarefree_veronese(3, 2), 2, 2);
  CHECK(F1.relation_count == 2);
  CHECK(F1.cells.size() == 4);
  CHECK(F1.certified);
  for (const auto& c : F1.cells) CHECK(c.connected);

  auto F2 = fiber_type_check(sss_closure(3, {{0, 1, 2}}), 2, 3);
  CHECK(F2.relation_count == 9);
  CHECK(F2.certified);
  REQUIRE(F2.cells.size() == 6);
  std::map<std::pair<int, int>, long long> fibers;
  for (const auto& c : F2.cells) fibers[{c.d, c.k}] = c.fibers;
  CHECK(fibers.at({1, 1}) == 12);
  CHECK(fibers.at({1, 2}) == 27);
  CHECK(fibers.at({1, 3}) == 48);
  CHECK(fibers.at({2, 1}) == 18);
  CHECK(fibers.at({2, 2}) == 36);
  CHECK(fibers.at({2, 3}) == 60);

  // rejected inputs: not equigenerated, not strongly shifted
  CHECK_THROWS_AS(fiber_type_check(from_partitions(3, {{1, 1, 1}, {0, 2, 2}}), 1, 1),
                  std::invalid_argument);
  auto ex22 = from_partitions(4, {{1, 1, 2, 2}, {0, 2, 2, 2}, {0, 1, 2, 3}});
  CHECK_THROWS_AS(fiber_type_check(ex22, 1, 1), std::invalid_argument);
}

TEST_CASE("toric Hilbert function counts distinct fiber images") {
  auto I = sss_closure(3, {{0, 1, 2}});
  CHECK(fiber_hilbert(I, 0) == 1);
  // principal case carries a built-in lattice-point cross-check
  CHECK(fiber_hilbert(I, 1) == 7);
  CHECK(fiber_hilbert(I, 2) == 19);
  CHECK(fiber_hilbert(I, 3) == 37);
  CHECK(fiber_hilbert(squarefree_veronese(3, 2), 1) == 3);
  CHECK(fiber_hilbert(squarefree_veronese(3, 2), 2) == 6);
  CHECK(fiber_hilbert(squarefree_veronese(3, 2), 3) == 10);
  auto ex22 = from_partitions(4, {{1, 1, 2, 2}, {0, 2, 2, 2}, {0, 1, 2, 3}});
  CHECK(fiber_hilbert(ex22, 2) == 201);
  CHECK_THROWS_AS(fiber_hilbert(ex22, 5), BudgetExceeded);
  CHECK_THROWS_AS(fiber_hilbert(I, -1), std::invalid_argument);
}
