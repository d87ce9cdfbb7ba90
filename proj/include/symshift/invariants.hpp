#pragma once

// Homological and asymptotic invariants of symmetric shifted ideals:
// graded Betti numbers via the per-generator descent count, projective
// dimension and depth, the linear relation graph and analytic spread
// (computed by three independent routes that must agree), depths of
// powers with their monotonicity and slope bounds enforced, stability of
// associated primes of powers, and the power-colon persistence test.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "decomp.hpp"

namespace symshift {

// ---------------------------------------------------------------------
// Betti numbers.
//
// For a generator exponent u of a symmetric shifted ideal, with largest
// entry M and last position carrying M, the descent count is
//   #{ positions with u_j <= M-2 }  +  #{ positions with u_j = M-1 to the
//                                         left of the last M }.
// Summing binomial(descent count, i) over the expanded minimal generators
// gives the i-th Betti number of the ideal, with all shifts linear in the
// generator degree.  On a sorted generator the descent count equals the
// number of parts below the maximum, which is how the projective
// dimension is read off the partition list directly.
// ---------------------------------------------------------------------

inline int cu_size(const Exponent& u) {
  if (u.empty()) throw std::invalid_argument("cu_size: empty exponent");
  const Int M = *std::max_element(u.begin(), u.end());
  if (M <= 0) throw std::invalid_argument("cu_size: expected a nonzero generator");
  size_t last = 0;
  for (size_t j = 0; j < u.size(); ++j)
    if (u[j] == M) last = j;
  int c = 0;
  for (size_t j = 0; j < u.size(); ++j) {
    if (u[j] < M - 1) ++c;
    else if (u[j] == M - 1 && j < last) ++c;
  }
  return c;
}

struct BettiTable {
  int n = 0;
  std::map<std::pair<int, Int>, BigInt> graded;  // (i, shift) -> beta_{i,shift} of the ideal
  std::vector<BigInt> totals;                    // totals[i] = beta_i of the ideal
  int pd_ideal = 0;                              // largest i with beta_i != 0

  BigInt total(int i) const {
    return (i >= 0 && i < static_cast<int>(totals.size())) ? totals[i] : BigInt(0);
  }
};

inline int proj_dim_quotient(const SymmetricIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("proj_dim_quotient: ideal must be nonzero and proper");
  if (!is_shifted(I)) throw std::invalid_argument("proj_dim_quotient: ideal is not shifted");
  int m = 0;
  for (const auto& lam : I.lambdas) m = std::max(m, med(lam));
  return m + 1;
}

inline int depth_quotient(const SymmetricIdeal& I) { return I.n - proj_dim_quotient(I); }

inline BettiTable betti(const SymmetricIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("betti: ideal must be nonzero and proper");
  if (!is_shifted(I)) throw std::invalid_argument("betti: ideal is not shifted");
  BettiTable T;
  T.n = I.n;
  int maxcu = 0;
  for (const auto& u : expand(I).gens) {
    const int c = cu_size(u);
    maxcu = std::max(maxcu, c);
    const Int d = total_of(u);
    for (int i = 0; i <= c; ++i) {
      const BigInt b = binomial(c, i);
      T.graded[{i, d + i}] += b;
      if (static_cast<int>(T.totals.size()) <= i) T.totals.resize(i + 1);
      T.totals[i] += b;
    }
  }
  T.pd_ideal = maxcu;
  // The descent count maxes out on sorted generators, so the table must
  // reproduce the projective dimension read from the partition list.
  if (maxcu + 1 != proj_dim_quotient(I))
    throw VerificationFailure("betti: descent counts disagree with the partition route");
  return T;
}

// Alternating sum 1 - sum_j beta_{0,j} t^j + sum_j beta_{1,j} t^j - ...;
// equals the numerator of the Hilbert series of the quotient over
// (1-t)^n.
inline Poly numerator_from_betti(const BettiTable& T) {
  Poly K = Poly::constant(1);
  for (const auto& [key, b] : T.graded) {
    const auto& [i, j] = key;
    Poly term = Poly::monomial(b, static_cast<int>(j));
    K = (i % 2 == 0) ? K - term : K + term;
  }
  return K;
}

// ---------------------------------------------------------------------
// Linear relation graph: {i,j} is an edge when two minimal generators
// u, v satisfy x_i u = x_j v.  Vertices are the endpoints of edges.
// ---------------------------------------------------------------------

struct RelationGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, i < j
  std::vector<int> vertices;               // 1-based, sorted
  int r = 0;                               // number of vertices
  int s = 0;                               // number of connected components
};

inline RelationGraph relation_graph(const SymmetricIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("relation_graph: ideal must be nonzero and proper");
  if (!is_equigenerated(I)) throw std::invalid_argument("relation_graph: ideal is not equigenerated");
  const auto E = expand(I);
  std::set<Exponent> gens(E.gens.begin(), E.gens.end());
  RelationGraph G;
  G.n = I.n;
  std::set<std::pair<int, int>> es;
  // v = u + e_i - e_j ranges over both orientations as u ranges over gens.
  for (const auto& u : gens)
    for (int i = 0; i < I.n; ++i)
      for (int j = i + 1; j < I.n; ++j) {
        if (u[j] == 0 || es.count({i + 1, j + 1})) continue;
        Exponent w = u;
        ++w[i];
        --w[j];
        if (gens.count(w)) es.insert({i + 1, j + 1});
      }
  G.edges.assign(es.begin(), es.end());
  std::set<int> vs;
  for (auto [i, j] : G.edges) {
    vs.insert(i);
    vs.insert(j);
  }
  G.vertices.assign(vs.begin(), vs.end());
  G.r = static_cast<int>(G.vertices.size());
  // Count components among the non-isolated vertices.
  std::map<int, int> parent;
  for (int v : G.vertices) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [i, j] : G.edges) parent[find(i)] = find(j);
  std::set<int> roots;
  for (int v : G.vertices) roots.insert(find(v));
  G.s = static_cast<int>(roots.size());
  return G;
}

// ---------------------------------------------------------------------
// Analytic spread, computed by independent routes that must agree:
//  - closed form: 1 for the orbit of a constant partition, n otherwise;
//  - rank of the exponent matrix of the expanded generators over Q;
//  - r - s + 1 from the relation graph (valid for shifted ideals, whose
//    resolutions are linear).
// ---------------------------------------------------------------------

struct SpreadReport {
  int value = 0;
  int rank = 0;
  std::optional<int> graph_value;  // set when the ideal is shifted
  int r = 0,  s = 0;
};

namespace detail {

inline int q_rank(const std::vector<Exponent>& rows, int n) {
  std::vector<std::vector<Rat>> M;
  M.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Rat> row(n);
    for (int i = 0; i < n; ++i) row[i] = Rat(r[i]);
    M.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(M.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(M.size()); ++i)
      if (M[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    for (int i = rank + 1; i < static_cast<int>(M.size()); ++i) {
      if (M[i][col] == 0) continue;
      const Rat f = M[i][col] / M[rank][col];
      for (int j = col; j < n; ++j) M[i][j] -= f * M[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline SpreadReport analytic_spread(const SymmetricIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("analytic_spread: ideal must be nonzero and proper");
  if (!is_equigenerated(I)) throw std::invalid_argument("analytic_spread: ideal is not equigenerated");
  SpreadReport R;
  const bool constant = I.lambdas.size() == 1 && is_constant(I.lambdas[0]);
  R.value = constant ? 1 : I.n;
  R.rank = detail::q_rank(expand(I).gens, I.n);
  if (R.rank != R.value)
    throw VerificationFailure("analytic_spread: matrix rank disagrees with closed form");
  if (is_shifted(I)) {
    auto G = relation_graph(I);
    R.r = G.r;
    R.s = G.s;
    R.graph_value = G.r - G.s + 1;
    if (*R.graph_value != R.value)
      throw VerificationFailure("analytic_spread: relation graph disagrees with closed form");
  }
  return R;
}

// ---------------------------------------------------------------------
// Depths of powers.  For an equigenerated shifted ideal the depth of
// R/I^k never increases with k; for a constant generator it is n-1
// forever, and otherwise it is at most n-k-1 until it reaches 0 at the
// latest at k = n-1.  All three facts are enforced on the computed
// values.  Each power must itself be shifted for its depth to be read
// off its partition list; powers of strongly shifted ideals always are.
// ---------------------------------------------------------------------

struct DepthPowers {
  std::vector<int> depths;  // depths[k-1] = depth of R/I^k
  int dstab_observed = 1;   // first k with depths[k-1] = depths.back()
  bool dstab_exact = false; // the observed value is provably the true one
};

inline DepthPowers depth_powers(const SymmetricIdeal& I, int kmax) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("depth_powers: ideal must be nonzero and proper");
  if (!is_equigenerated(I)) throw std::invalid_argument("depth_powers: ideal is not equigenerated");
  if (!is_shifted(I)) throw std::invalid_argument("depth_powers: ideal is not shifted");
  if (kmax < 1) throw std::invalid_argument("depth_powers: need kmax >= 1");
  const bool constant = I.lambdas.size() == 1 && is_constant(I.lambdas[0]);

  DepthPowers D;
  SymmetricIdeal P = I;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) P = multiply(P, I);
    if (!is_shifted(P))
      throw std::invalid_argument("depth_powers: a power left the shifted class");
    const int d = depth_quotient(P);
    if (!D.depths.empty() && d > D.depths.back())
      throw VerificationFailure("depth_powers: depth increased along powers");
    if (constant && d != I.n - 1)
      throw VerificationFailure("depth_powers: constant generator must have depth n-1");
    if (!constant) {
      if (k <= I.n - 1 && d > I.n - k - 1)
        throw VerificationFailure("depth_powers: slope bound violated");
      if (k >= I.n - 1 && d != 0)
        throw VerificationFailure("depth_powers: depth must vanish from k = n-1 on");
    }
    D.depths.push_back(d);
  }
  D.dstab_observed = kmax;
  while (D.dstab_observed > 1 && D.depths[D.dstab_observed - 2] == D.depths.back())
    --D.dstab_observed;
  // Depth is monotone and its limit is n-1 in the constant case and 0
  // otherwise, so hitting the limit inside the window is conclusive.
  D.dstab_exact = constant || D.depths.back() == 0;
  return D;
}

// ---------------------------------------------------------------------
// Associated primes of powers.  By symmetry a prime is determined by its
// support size, so each power is summarized by its sorted height list.
// For the orbit closure of a single partition the per-power heights come
// from the exact component classification; otherwise they are read off
// the expanded ideal.  The stabilization index is certified exactly in
// the single-generator case.
// ---------------------------------------------------------------------

struct StabReport {
  std::vector<std::vector<int>> heights;  // heights[k-1] for I^k, k = 1..kmax
  std::vector<int> stable_heights;        // certified limit (single-generator case)
  int astab = 0;                          // certified, or smallest stable k in window
  bool astab_exact = false;
  int astab_bound = 0;  // certified upper bound (single-generator case)
  DepthPowers depth;
};

inline std::vector<int> ass_heights_of_power(const SymmetricIdeal& I, int k) {
  if (is_principal_borel(I))
    return principal_decomposition(borel_generators(I)[0], k).kept_heights();
  std::set<int> hs;
  for (const auto& P : associated_primes(expand(power(I, k))))
    hs.insert(static_cast<int>(P.size()));
  return {hs.begin(), hs.end()};
}

inline StabReport stab_report(const SymmetricIdeal& I, int kmax) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("stab_report: ideal must be nonzero and proper");
  if (!is_strongly_shifted(I)) throw std::invalid_argument("stab_report: ideal is not strongly shifted");
  if (!is_equigenerated(I)) throw std::invalid_argument("stab_report: ideal is not equigenerated");
  if (kmax < 1) throw std::invalid_argument("stab_report: need kmax >= 1");

  StabReport R;
  for (int k = 1; k <= kmax; ++k) R.heights.push_back(ass_heights_of_power(I, k));

  if (is_principal_borel(I)) {
    const Partition lam = borel_generators(I)[0];
    const auto S = stable_ass(lam);
    R.stable_heights = S.heights;
    R.astab_bound = S.astab_bound;
    int k = 1;
    while (ass_heights_of_power(I, k) != S.heights) {
      ++k;
      if (k > S.astab_bound)
        throw VerificationFailure("stab_report: heights did not stabilize within the certified bound");
    }
    R.astab = k;
    R.astab_exact = true;
  } else {
    int k = kmax;
    while (k > 1 && R.heights[k - 2] == R.heights.back()) --k;
    R.astab = k;
    R.astab_exact = false;
  }

  R.depth = depth_powers(I, kmax);
  return R;
}

// ---------------------------------------------------------------------
// Power-colon persistence: whether I^{k+1} : I = I^k, checked on the
// expanded ideals.  The colon always contains the power, so a failure is
// certified by a generator of the colon outside the power.
// ---------------------------------------------------------------------

struct ColonStep {
  int k = 1;
  bool equal = false;
  std::optional<Exponent> witness;  // in (I^{k+1} : I) but not in I^k
};

inline std::vector<ColonStep> power_colon_steps(const SymmetricIdeal& I, int kmax) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("power_colon_steps: ideal must be nonzero and proper");
  if (kmax < 1) throw std::invalid_argument("power_colon_steps: need kmax >= 1");
  const MonomialIdeal E = expand(I);
  std::vector<ColonStep> out;
  MonomialIdeal Pk = E;
  for (int k = 1; k <= kmax; ++k) {
    const MonomialIdeal Pk1 = product(Pk, E);
    const MonomialIdeal C = colon_ideal(Pk1, E);
    ColonStep step{k, true, std::nullopt};
    for (const auto& g : C.gens)
      if (!contains(Pk, g)) {
        step.equal = false;
        step.witness = g;
        break;
      }
    if (step.equal && !contains(C, Pk))
      throw VerificationFailure("power_colon_steps: colon lost the power");
    out.push_back(std::move(step));
    Pk = Pk1;
  }
  return out;
}

}  // namespace symshift
