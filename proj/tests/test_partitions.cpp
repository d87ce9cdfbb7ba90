#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "symshift/partition.hpp"

using namespace symshift;

namespace {
Partition rand_partition(std::mt19937_64& rng, int n, Int vmax) {
  std::uniform_int_distribution<Int> d(0, vmax);
  Partition p(n);
  for (auto& v : p) v = d(rng);
  std::sort(p.begin(), p.end());
  return p;
}
}  // namespace

TEST_CASE("prefix and suffix sums") {
  Partition lam{1, 2, 2, 4, 4};
  CHECK(prefix_sums(lam) == std::vector<Int>{1, 3, 5, 9, 13});
  CHECK(suffix_sums(lam) == std::vector<Int>{13, 12, 10, 8, 4});
  CHECK(total_of(lam) == 13);
  CHECK(min_index(lam) == 1);
  CHECK(med(lam) == 3);
  CHECK_FALSE(is_constant(lam));
  CHECK(is_constant(Partition{3, 3, 3}));
  CHECK(min_index(Partition{0, 0, 2}) == 3);
}

TEST_CASE("partition validation names the first bad index") {
  CHECK_FALSE(partition_violation({0, 1, 1, 5}));
  auto bad = partition_violation({0, 2, 1, 5});
  REQUIRE(bad);
  CHECK(*bad == 2);
  CHECK_THROWS_AS(require_partition({1, 0}, "x"), std::invalid_argument);
}

TEST_CASE("part_of sorts an exponent into a partition") {
  CHECK(part_of({3, 0, 2, 0}) == Partition{0, 0, 2, 3});
  CHECK(part_of({}) == Partition{});
}

TEST_CASE("dominance order matches the hat-vector test") {
  // equal-total pairs, frozen: (1,1,2) < (0,1,3) < (0,0,4)
  CHECK(dominance_leq({1, 1, 2}, {0, 1, 3}));
  CHECK(dominance_leq({0, 1, 3}, {0, 0, 4}));
  CHECK_FALSE(dominance_leq({0, 0, 4}, {0, 1, 3}));
  // incomparable pair of total 6 in 4 parts
  CHECK_FALSE(dominance_leq({0, 0, 3, 3}, {0, 1, 1, 4}));
  CHECK_FALSE(dominance_leq({0, 1, 1, 4}, {0, 0, 3, 3}));
  // comparable despite interleaved parts
  CHECK(dominance_leq({0, 2, 2, 2}, {0, 1, 1, 4}));

  std::mt19937_64 rng(101);
  for (int t = 0; t < 300; ++t) {
    auto a = rand_partition(rng, 5, 4), b = rand_partition(rng, 5, 4);
    auto ha = hat(a), hb = hat(b);
    bool cw = true;
    for (size_t i = 0; i < ha.size(); ++i) cw &= ha[i] <= hb[i];
    CHECK(dominance_leq(a, b) == cw);
  }
}

TEST_CASE("hat round-trips and exposes concavity") {
  std::mt19937_64 rng(102);
  for (int t = 0; t < 200; ++t) {
    auto a = rand_partition(rng, 6, 5);
    auto h = hat(a);
    CHECK(from_hat(h) == a);
    for (size_t i = 1; i + 1 < h.size(); ++i) CHECK(2 * h[i] >= h[i - 1] + h[i + 1]);
  }
  CHECK_THROWS_AS(from_hat({1, 3, 4}), std::invalid_argument);  // convex jump: parts 1,2,1 not sorted
}

TEST_CASE("meet and join are the dominance lattice operations") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 120; ++t) {
    const int n = 4;
    auto a = rand_partition(rng, n, 3);
    // force equal totals by reusing the multiset of a in a dominated partner
    auto below = enumerate_dominated(a);
    if (below.empty()) continue;
    std::uniform_int_distribution<size_t> pick(0, below.size() - 1);
    auto b = below[pick(rng)];
    auto c = below[pick(rng)];

    auto m = meet(b, c);
    CHECK(dominance_leq(m, b));
    CHECK(dominance_leq(m, c));
    auto j = join(b, c);
    CHECK(dominance_leq(b, j));
    CHECK(dominance_leq(c, j));
    for (const auto& x : below) {
      if (dominance_leq(x, b) && dominance_leq(x, c)) CHECK(dominance_leq(x, m));
      if (dominance_leq(b, x) && dominance_leq(c, x)) CHECK(dominance_leq(j, x));
    }
  }
}

TEST_CASE("transpose is a dominance anti-automorphism") {
  CHECK(transpose({1, 2, 2}) == Partition{2, 3});
  CHECK(transpose({0, 0, 3}) == Partition{1, 1, 1});
  std::mt19937_64 rng(104);
  for (int t = 0; t < 200; ++t) {
    auto a = rand_partition(rng, 5, 4);
    if (total_of(a) == 0) continue;
    auto ta = transpose(a);
    CHECK(is_nondecreasing(ta));
    CHECK(total_of(ta) == total_of(a));
    CHECK(detail::pad_front(transpose(ta), a.size()) == a);
  }
  for (int t = 0; t < 100; ++t) {
    auto a = rand_partition(rng, 4, 3);
    auto below = enumerate_dominated(a);
    for (const auto& mu : below) {
      if (total_of(mu) == 0) continue;
      auto tl = transpose(a), tm = transpose(mu);
      size_t len = std::max(tl.size(), tm.size());
      CHECK(dominance_leq(detail::pad_front(tl, len), detail::pad_front(tm, len)));
    }
  }
}

TEST_CASE("prefix_max_combine coincides with meet on equal totals") {
  std::mt19937_64 rng(105);
  for (int t = 0; t < 150; ++t) {
    auto a = rand_partition(rng, 5, 4);
    auto below = enumerate_dominated(a);
    if (below.empty()) continue;
    std::uniform_int_distribution<size_t> pick(0, below.size() - 1);
    auto b = below[pick(rng)], c = below[pick(rng)];
    CHECK(prefix_max_combine(b, c) == meet(b, c));
  }
  // unequal totals: least partition whose prefix profile dominates both
  CHECK(prefix_max_combine({0, 1, 2}, {1, 1, 1}) == Partition{1, 1, 1});
}

TEST_CASE("enumerate_dominated is exactly the dominance down-set") {
  Partition lam{0, 1, 2, 3};
  auto got = enumerate_dominated(lam);
  // brute force over all partitions of 6 into <= 4 parts
  std::vector<Partition> expect;
  for (Int a = 0; a <= 6; ++a)
    for (Int b = a; b <= 6; ++b)
      for (Int c = b; c <= 6; ++c)
        for (Int d = c; d <= 6; ++d)
          if (a + b + c + d == 6 && dominance_leq({a, b, c, d}, lam)) expect.push_back({a, b, c, d});
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
  CHECK(got.size() == 4);

  CHECK_THROWS_AS(enumerate_dominated({0, 0, 0, 5, 5, 5, 6, 7, 8, 9}, 3), BudgetExceeded);
}

TEST_CASE("orbit enumerates distinct permutations and matches the count") {
  std::mt19937_64 rng(106);
  for (int t = 0; t < 60; ++t) {
    auto a = rand_partition(rng, 5, 2);
    auto orb = orbit(a);
    CHECK(BigInt(orb.size()) == orbit_size(a));
    CHECK(std::is_sorted(orb.begin(), orb.end()));
    CHECK(std::adjacent_find(orb.begin(), orb.end()) == orb.end());
    for (const auto& e : orb) CHECK(part_of(e) == a);
  }
  CHECK(orbit_size(Exponent{0, 1, 2}) == 6);
  CHECK(orbit_size(Exponent{1, 1, 1}) == 1);
  CHECK(orbit_size(Exponent{0, 0, 1, 1}) == 6);
}

TEST_CASE("difference operators") {
  CHECK(delta({1, 3, 5, 9, 13}) == std::vector<Int>{2, 2, 4, 4});
  CHECK(delta_power({1, 3, 5, 9, 13}, 2) == std::vector<Int>{0, 2, 0});
  CHECK_THROWS_AS(delta_power({1, 2}, 2), std::invalid_argument);
}
