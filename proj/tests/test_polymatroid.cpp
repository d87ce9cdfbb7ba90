// Tests for the polymatroid module: the exchange property and its
// violation certificates, the equivalence with single-partition closures,
// strong exchange shapes, the transversal classification, and the
// factorization into squarefree Veronese ideals.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "symshift/oracle.hpp"
#include "symshift/polymatroid.hpp"

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

// Product of all height-c variable primes, raised to the e-th power.
MonomialIdeal prime_product_power(int n, int c, Int e) {
  MonomialIdeal out = expand(unit_symideal(n));
  std::vector<int> idx(c);
  std::vector<std::vector<int>> subs;
  auto rec = [&](auto&& self, int start, int k) -> void {
    if (k == c) {
      subs.push_back(idx);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[k] = i;
      self(self, i + 1, k + 1);
    }
  };
  rec(rec, 0, 0);
  for (Int t = 0; t < e; ++t)
    for (const auto& S : subs) {
      std::vector<Exponent> pg;
      for (int i : S) {
        Exponent g(n, 0);
        g[i] = 1;
        pg.push_back(g);
      }
      out = product(out, MonomialIdeal{n, minimalize(std::move(pg))});
    }
  return out;
}

}  // namespace

TEST_CASE("exchange property and its violation certificate") {
  // the three-generator shifted ideal fails exchange with a frozen witness
  auto I = from_partitions(4, {{1, 1, 2, 2}, {0, 2, 2, 2}, {0, 1, 2, 3}});
  auto R = is_polymatroidal(I);
  CHECK_FALSE(R.polymatroidal);
  REQUIRE(R.violation.has_value());
  CHECK(R.violation->u == Exponent{0, 1, 2, 3});
  CHECK(R.violation->v == Exponent{2, 0, 1, 3});
  CHECK(R.violation->i == 3);
  // the certificate is genuine: no exchange index works for (u, v, i)
  {
    auto E = expand(I);
    const Exponent &u = R.violation->u, &v = R.violation->v;
    const int i = R.violation->i - 1;
    CHECK(u[i] > v[i]);
    for (int j = 0; j < 4; ++j) {
      if (u[j] >= v[j]) continue;
      Exponent w = u;
      --w[i];
      ++w[j];
      CHECK_FALSE(std::binary_search(E.gens.begin(), E.gens.end(), w));
    }
  }

  // single-partition closures pass, including the symmetric variant
  for (Partition lam : {Partition{1, 2, 2, 4}, Partition{0, 1, 2}, Partition{2, 2}}) {
    auto P = sss_closure(static_cast<int>(lam.size()), {lam});
    auto RP = is_polymatroidal(P);
    CHECK(RP.polymatroidal);
    CHECK_FALSE(RP.violation.has_value());
  }

  CHECK_THROWS_AS(is_polymatroidal(zero_symideal(3)), std::invalid_argument);
  CHECK_THROWS_AS(is_polymatroidal(unit_symideal(3)), std::invalid_argument);
  CHECK_THROWS_AS(is_polymatroidal(sss_closure(3, {{0, 1, 2}, {0, 0, 4}})),
                  std::invalid_argument);
}

TEST_CASE("exchange holds exactly for single-partition closures") {
  std::mt19937_64 rng(601);
  int positive = 0, negative = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + int(rng() % 2);
    Partition lam = rand_partition(rng, n, 4);
    SymmetricIdeal I;
    switch (t % 3) {
      case 0: I = sss_closure(n, {lam}); break;
      case 1: I = from_partitions(n, {lam}); break;  // bare orbit
      default: {
        Partition mu = rand_partition(rng, n, 4);
        // keep the ideal equigenerated so the exchange test applies
        if (total_of(mu) != total_of(lam)) mu = lam;
        I = sss_closure(n, {lam, mu});
        break;
      }
    }
    if (I.is_zero() || I.is_unit() || !is_equigenerated(I)) continue;
    auto R = verify_exchange_equivalence(I);  // throws on any mismatch
    (R.polymatroidal ? positive : negative)++;
    CHECK(R.polymatroidal == R.principal);
  }
  CHECK(positive > 0);
  CHECK(negative > 0);
}

TEST_CASE("strong exchange shapes match the exhaustive check") {
  auto S1 = strong_exchange({0, 0, 1, 1});
  CHECK(S1.shape == "two-values");
  CHECK(S1.holds);
  auto S2 = strong_exchange({1, 3, 4, 5});
  CHECK(S2.shape == "none");
  CHECK_FALSE(S2.holds);
  auto S3 = strong_exchange({1, 2, 3, 3});
  CHECK(S3.shape == "middle-step");
  CHECK(S3.holds);
  auto S4 = strong_exchange({2, 2, 2});
  CHECK(S4.shape == "constant");
  CHECK(S4.holds);
  // a middle run longer than one part breaks the pattern
  CHECK(strong_exchange_shape({1, 2, 2, 3, 3}) == "none");
  CHECK(strong_exchange_shape({0, 1, 1, 2}) == "none");

  // the internal consistency check runs over random shapes
  std::mt19937_64 rng(602);
  for (int t = 0; t < 30; ++t) {
    Partition lam = rand_partition(rng, 3 + int(rng() % 2), 4);
    auto R = strong_exchange(lam);
    CHECK(R.holds == (R.shape != "none"));
  }
  CHECK_THROWS_AS(strong_exchange_shape({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("transversal classification solves the binomial system") {
  auto T = transversal_classify({1, 3, 6});
  CHECK(T.transversal);
  CHECK(T.a == std::vector<Int>{1, 2, 1});
  CHECK(T.factors == std::vector<std::pair<int, Int>>{{1, 1}, {2, 2}, {3, 1}});
  CHECK_FALSE(T.lattice_path);

  auto T2 = transversal_classify({0, 2, 3});
  CHECK_FALSE(T2.transversal);
  CHECK(T2.a == std::vector<Int>{0, 2, -1});
  CHECK(T2.factors.empty());

  auto TC = transversal_classify({2, 2, 2});
  CHECK(TC.transversal);
  CHECK(TC.factors == std::vector<std::pair<int, Int>>{{1, 2}});
  CHECK(TC.lattice_path);

  auto TM = transversal_classify({0, 0, 5});
  CHECK(TM.transversal);
  CHECK(TM.factors == std::vector<std::pair<int, Int>>{{3, 5}});
  CHECK(TM.lattice_path);

  // the factors really multiply out to the ideal
  for (Partition lam : {Partition{1, 3, 6}, Partition{2, 2, 2}, Partition{0, 0, 5},
                        Partition{0, 1, 3}}) {
    const int n = static_cast<int>(lam.size());
    auto R = transversal_classify(lam);
    REQUIRE(R.transversal);
    MonomialIdeal prod = expand(unit_symideal(n));
    for (const auto& [c, e] : R.factors) prod = product(prod, prime_product_power(n, c, e));
    CHECK(prod == expand(sss_closure(n, {lam})));
  }
  CHECK_THROWS_AS(transversal_classify({0, 0}), std::invalid_argument);
}

TEST_CASE("factorization into squarefree Veronese ideals") {
  CHECK(veronese_factorization({1, 2, 2, 4}) ==
        std::vector<std::pair<int, Int>>{{1, 1}, {2, 1}, {4, 2}});
  CHECK(veronese_factorization({2, 2, 2}) == std::vector<std::pair<int, Int>>{{1, 2}});
  CHECK(veronese_factorization({0, 0, 3}) == std::vector<std::pair<int, Int>>{{3, 3}});

  // expand(Sss(lam)) equals the product of the squarefree factors
  std::mt19937_64 rng(603);
  std::vector<Partition> cases{{1, 2, 2, 4}, {0, 1, 3, 3}, {2, 2, 2}, {0, 0, 2}};
  for (int t = 0; t < 10; ++t) cases.push_back(rand_partition(rng, 3 + int(rng() % 2), 4));
  for (const auto& lam : cases) {
    const int n = static_cast<int>(lam.size());
    MonomialIdeal prod = expand(unit_symideal(n));
    for (const auto& [i, e] : veronese_factorization(lam))
      for (Int t = 0; t < e; ++t) prod = product(prod, expand(squarefree_veronese(n, i)));
    CHECK(prod == expand(sss_closure(n, {lam})));
  }
  CHECK_THROWS_AS(veronese_factorization({0, 0, 0}), std::invalid_argument);
}
