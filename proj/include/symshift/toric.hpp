#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "symshift/invariants.hpp"

namespace symshift {

// ---- permutohedron geometry ----

// Vertex set of the permutohedron P(lam): every distinct rearrangement of the
// coordinates of lam, sorted.  Starting next_permutation from the ascending
// arrangement emits each distinct rearrangement exactly once.
inline std::vector<Exponent> permutohedron_vertices(const Partition& lam) {
  require_partition(lam, "permutohedron_vertices argument");
  if (lam.empty()) throw std::invalid_argument("permutohedron_vertices: empty partition");
  Exponent v = lam;
  std::vector<Exponent> out;
  long long budget = config().enumeration_budget;
  do {
    if (--budget < 0) throw BudgetExceeded("permutohedron_vertices: orbit exceeds the enumeration budget");
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Membership test for P(lam): the coordinate sums must agree and, for each j,
// the j largest coordinates of p may not exceed the j largest parts of lam.
inline bool permutohedron_contains(const Partition& lam, const Exponent& p) {
  require_partition(lam, "permutohedron_contains argument");
  if (p.size() != lam.size()) throw std::invalid_argument("permutohedron_contains: length mismatch");
  if (total_of(p) != total_of(lam)) return false;
  Exponent q = p;
  std::sort(q.begin(), q.end());
  const std::vector<Int> sp = suffix_sums(q), sl = suffix_sums(lam);
  for (size_t j = 0; j < lam.size(); ++j)
    if (sp[j] > sl[j]) return false;
  return true;
}

// Integer points of the dilation k*P(lam).  These are exactly the exponent
// vectors of the minimal generators of the closure ideal of k*lam: that ideal
// is generated in the single degree k*|lam|, where membership is the same
// prefix-sum dominance that cuts out the dilated polytope.
inline std::vector<Exponent> lattice_points(const Partition& lam, int k) {
  require_partition(lam, "lattice_points argument");
  if (k < 0) throw std::invalid_argument("lattice_points: negative dilation");
  Partition klam(lam.size());
  for (size_t i = 0; i < lam.size(); ++i) klam[i] = Int(k) * lam[i];
  return expand(sss_closure(static_cast<int>(lam.size()), {klam})).gens;
}

struct EhrhartReport {
  int n = 0;
  PolyQ polynomial;               // exact interpolant in the dilation factor
  std::vector<long long> counts;  // counts[k] = lattice points of k*P(lam), k = 0..kmax
};

// Exact Ehrhart polynomial of P(lam): the point counts at k = 0..n-1 pin the
// unique polynomial of degree <= n-1, and every further count up to kmax must
// match it.  A mismatch is surfaced, never accepted.
inline EhrhartReport ehrhart(const Partition& lam, int kmax) {
  require_partition(lam, "ehrhart argument");
  const int n = static_cast<int>(lam.size());
  if (n == 0) throw std::invalid_argument("ehrhart: empty partition");
  if (kmax < n) throw std::invalid_argument("ehrhart: kmax must be at least n to validate the interpolation");
  EhrhartReport R;
  R.n = n;
  for (int k = 0; k <= kmax; ++k)
    R.counts.push_back(static_cast<long long>(lattice_points(lam, k).size()));
  std::vector<Rat> xs, ys;
  for (int k = 0; k < n; ++k) {
    xs.emplace_back(k);
    ys.emplace_back(R.counts[static_cast<size_t>(k)]);
  }
  R.polynomial = interpolate(xs, ys);
  for (int k = n; k <= kmax; ++k)
    if (R.polynomial.eval(Rat(k)) != Rat(R.counts[static_cast<size_t>(k)]))
      throw VerificationFailure("ehrhart: interpolant disagrees with the lattice-point count at k=" +
                                std::to_string(k));
  return R;
}

// Leading Ehrhart coefficient times (n-1)!: the normalized volume of P(lam)
// inside the sum hyperplane.  Zero whenever the polytope is lower-dimensional
// (e.g. a constant partition, whose polytope is a single point).
inline Rat normalized_volume(const Partition& lam) {
  const int n = static_cast<int>(lam.size());
  const EhrhartReport R = ehrhart(lam, n);
  return R.polynomial.coeff(n - 1) * Rat(factorial(n - 1));
}

// Count permutations of {1..m} with exactly d descents, by direct enumeration.
// Serves as the independent route for hypersimplex volumes.
inline BigInt eulerian_number(int m, int d) {
  if (m < 0 || d < 0) throw std::invalid_argument("eulerian_number: negative argument");
  if (m == 0) return d == 0 ? BigInt(1) : BigInt(0);
  if (factorial(m) > BigInt(config().enumeration_budget))
    throw BudgetExceeded("eulerian_number: m! exceeds the enumeration budget");
  std::vector<int> perm(static_cast<size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  BigInt count = 0;
  do {
    int desc = 0;
    for (size_t i = 0; i + 1 < perm.size(); ++i)
      if (perm[i] > perm[i + 1]) ++desc;
    if (desc == d) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Integer decomposition property of P(lam) up to dilation kmax: every lattice
// point of k*P must split as a point of P plus a point of (k-1)*P.  Failure
// would contradict the normality of the ideal whose Newton polytope this is,
// so it is raised as a verification error.
inline void verify_polytope_normality(const Partition& lam, int kmax) {
  require_partition(lam, "verify_polytope_normality argument");
  std::vector<Exponent> unit = lattice_points(lam, 1);
  std::vector<Exponent> prev = lattice_points(lam, 0);
  for (int k = 1; k <= kmax; ++k) {
    std::set<Exponent> lower(prev.begin(), prev.end());
    std::vector<Exponent> cur = lattice_points(lam, k);
    for (const Exponent& p : cur) {
      bool split = false;
      for (const Exponent& q : unit) {
        Exponent r(p.size());
        bool ok = true;
        for (size_t i = 0; i < p.size(); ++i) {
          r[i] = p[i] - q[i];
          if (r[i] < 0) { ok = false; break; }
        }
        if (ok && lower.count(r)) { split = true; break; }
      }
      if (!split)
        throw VerificationFailure("verify_polytope_normality: a point of " + std::to_string(k) +
                                  "*P does not decompose through P");
    }
    prev = std::move(cur);
  }
}

// ---- minimal monomial reduction ----

// The orbit ideal L(lam), generated by all rearrangements of x^lam: the unique
// minimal monomial reduction of the closure ideal of lam.
inline MonomialIdeal minimal_monomial_reduction(const Partition& lam) {
  require_partition(lam, "minimal_monomial_reduction argument");
  if (lam.empty()) throw std::invalid_argument("minimal_monomial_reduction: empty partition");
  return expand(from_partitions(static_cast<int>(lam.size()), {lam}));
}

// Reduction hook: in the generating degree |lam|, the integral closure of the
// orbit ideal must consist exactly of the generators of the closure ideal of
// lam.  Checked by exhaustive scan of the degree-|lam| exponents.
inline void verify_minimal_monomial_reduction(const Partition& lam) {
  const MonomialIdeal L = minimal_monomial_reduction(lam);
  const MonomialIdeal S = expand(sss_closure(static_cast<int>(lam.size()), {lam}));
  const std::set<Exponent> closure_target(S.gens.begin(), S.gens.end());
  const Int d = total_of(lam);
  if (binomial(d + static_cast<Int>(lam.size()) - 1, static_cast<Int>(lam.size()) - 1) >
      BigInt(config().enumeration_budget))
    throw BudgetExceeded("verify_minimal_monomial_reduction: degree slice exceeds the enumeration budget");
  for_each_exponent(L.n, d, [&](const Exponent& e) {
    const bool in_closure = integral_closure_contains(L, e);
    const bool expected = closure_target.count(e) != 0;
    if (in_closure != expected)
      throw VerificationFailure("verify_minimal_monomial_reduction: closure of the orbit ideal deviates at " +
                                to_string(e));
  });
}

// ---- toric relations of an equigenerated ideal ----

// A quadratic binomial relation T_r T_s = T_t T_w between generator indices,
// stored with each side sorted and the smaller side first.
struct ExchangeQuadric {
  std::array<int, 2> lhs{};
  std::array<int, 2> rhs{};
  friend bool operator<(const ExchangeQuadric& a, const ExchangeQuadric& b) {
    return std::tie(a.lhs, a.rhs) < std::tie(b.lhs, b.rhs);
  }
  friend bool operator==(const ExchangeQuadric& a, const ExchangeQuadric& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct QuadricSet {
  int n = 0;
  std::vector<Exponent> gens;  // T_i maps to gens[i]
  std::vector<ExchangeQuadric> quadrics;
};

// Scan all generator pairs (r,s) and all index pairs i,j with deg_i(r) >
// deg_i(s) and deg_j(r) < deg_j(s); whenever both exchanged monomials
// r*x_j/x_i and s*x_i/x_j are again generators, emit the quadric.  Every
// emitted relation is checked to lie in the kernel of the monomial map.
inline QuadricSet exchange_quadrics(const SymmetricIdeal& I) {
  if (!is_equigenerated(I)) throw std::invalid_argument("exchange_quadrics: ideal is not equigenerated");
  QuadricSet Q;
  Q.n = I.n;
  Q.gens = expand(I).gens;
  std::map<Exponent, int> index;
  for (size_t i = 0; i < Q.gens.size(); ++i) index[Q.gens[i]] = static_cast<int>(i);
  std::set<ExchangeQuadric> seen;
  const int s = static_cast<int>(Q.gens.size());
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      if (r == c) continue;
      const Exponent &gr = Q.gens[static_cast<size_t>(r)], &gc = Q.gens[static_cast<size_t>(c)];
      for (int i = 0; i < I.n; ++i) {
        if (gr[static_cast<size_t>(i)] <= gc[static_cast<size_t>(i)]) continue;
        for (int j = 0; j < I.n; ++j) {
          if (gr[static_cast<size_t>(j)] >= gc[static_cast<size_t>(j)]) continue;
          Exponent t = gr, w = gc;
          --t[static_cast<size_t>(i)];
          ++t[static_cast<size_t>(j)];
          ++w[static_cast<size_t>(i)];
          --w[static_cast<size_t>(j)];
          const auto ti = index.find(t), wi = index.find(w);
          if (ti == index.end() || wi == index.end()) continue;
          if (vec_add(gr, gc) != vec_add(t, w))
            throw VerificationFailure("exchange_quadrics: emitted relation is not in the kernel");
          ExchangeQuadric q;
          q.lhs = {std::min(r, c), std::max(r, c)};
          q.rhs = {std::min(ti->second, wi->second), std::max(ti->second, wi->second)};
          if (q.lhs == q.rhs) continue;
          if (q.rhs < q.lhs) std::swap(q.lhs, q.rhs);
          seen.insert(q);
        }
      }
    }
  }
  Q.quadrics.assign(seen.begin(), seen.end());
  return Q;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t m) : parent(m) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// All nondecreasing index tuples of length k over {0..s-1}, in lexicographic
// order.  The caller checks the count against the fiber budget beforehand.
inline std::vector<std::vector<int>> index_multisets(int s, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(k), 0);
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (s == 0) return out;
  for (;;) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<size_t>(pos)] == s - 1) --pos;
    if (pos < 0) break;
    const int v = cur[static_cast<size_t>(pos)] + 1;
    for (int q = pos; q < k; ++q) cur[static_cast<size_t>(q)] = v;
  }
  return out;
}

inline Exponent multiset_image(const std::vector<Exponent>& gens, const std::vector<int>& M, int n) {
  Exponent img(static_cast<size_t>(n), 0);
  for (int g : M) img = vec_add(img, gens[static_cast<size_t>(g)]);
  return img;
}

}  // namespace detail

struct QuadraticGenerationReport {
  int n = 0;
  int kmax = 0;
  int generated_by_quadrics_up_to = 1;  // largest degree with no relations beyond the quadrics
  std::map<int, long long> minimal_relation_counts;
  bool truncated = false;  // fiber budget stopped the scan before kmax
  int truncated_at = 0;    // first unchecked degree when truncated
};

// Degree-by-degree certificate that the exchange quadrics generate the toric
// ideal of G(I).  Degree-k monomials in the T's are grouped by image; at k=2
// the quadrics themselves are the moves, and in higher degrees two monomials
// are connected whenever they share a T-variable, because their complementary
// parts then lie in a common lower-degree fiber whose relations were already
// counted and certified.  The number of new minimal relations in degree k is
// the sum over fibers of (connected components - 1).
inline QuadraticGenerationReport check_quadratic_generation(const SymmetricIdeal& I, int kmax) {
  if (kmax < 2) throw std::invalid_argument("check_quadratic_generation: kmax must be at least 2");
  const QuadricSet Q = exchange_quadrics(I);
  QuadraticGenerationReport R;
  R.n = I.n;
  R.kmax = kmax;
  const int s = static_cast<int>(Q.gens.size());
  std::map<std::array<int, 2>, std::vector<std::array<int, 2>>> qadj;
  for (const ExchangeQuadric& q : Q.quadrics) {
    qadj[q.lhs].push_back(q.rhs);
    qadj[q.rhs].push_back(q.lhs);
  }
  for (int k = 2; k <= kmax; ++k) {
    if (binomial(s + k - 1, k) > BigInt(config().fiber_budget)) {
      R.truncated = true;
      R.truncated_at = k;
      break;
    }
    const std::vector<std::vector<int>> monos = detail::index_multisets(s, k);
    std::map<Exponent, std::vector<int>> fibers;
    for (size_t m = 0; m < monos.size(); ++m)
      fibers[detail::multiset_image(Q.gens, monos[m], I.n)].push_back(static_cast<int>(m));
    long long fresh = 0;
    for (const auto& [img, members] : fibers) {
      if (members.size() < 2) continue;
      detail::UnionFind uf(members.size());
      std::map<std::vector<int>, int> local;
      for (size_t a = 0; a < members.size(); ++a) local[monos[static_cast<size_t>(members[a])]] = static_cast<int>(a);
      if (k == 2) {
        for (size_t a = 0; a < members.size(); ++a) {
          const std::vector<int>& M = monos[static_cast<size_t>(members[a])];
          const auto it = qadj.find({M[0], M[1]});
          if (it == qadj.end()) continue;
          for (const std::array<int, 2>& other : it->second) {
            const auto lo = local.find({other[0], other[1]});
            if (lo != local.end()) uf.unite(static_cast<int>(a), lo->second);
          }
        }
      } else {
        std::map<int, int> first_with;  // generator index -> first member containing it
        for (size_t a = 0; a < members.size(); ++a) {
          const std::vector<int>& M = monos[static_cast<size_t>(members[a])];
          for (size_t p = 0; p < M.size(); ++p) {
            if (p > 0 && M[p] == M[p - 1]) continue;
            const auto [it, inserted] = first_with.emplace(M[p], static_cast<int>(a));
            if (!inserted) uf.unite(static_cast<int>(a), it->second);
          }
        }
      }
      std::set<int> roots;
      for (size_t a = 0; a < members.size(); ++a) roots.insert(uf.find(static_cast<int>(a)));
      fresh += static_cast<long long>(roots.size()) - 1;
    }
    R.minimal_relation_counts[k] = fresh;
  }
  for (int k = 2; k <= kmax; ++k) {
    const auto it = R.minimal_relation_counts.find(k);
    if (it == R.minimal_relation_counts.end() || it->second != 0) break;
    R.generated_by_quadrics_up_to = k;
  }
  if (is_principal_borel(I)) {
    for (const auto& [k, cnt] : R.minimal_relation_counts)
      if (cnt != 0)
        throw VerificationFailure("check_quadratic_generation: a principal ideal needed a relation of degree " +
                                  std::to_string(k) + " beyond its exchange quadrics");
  }
  return R;
}

// Indices eligible for the syzygy moves of a generator u: every variable whose
// exponent sits strictly below max-1, and the max-1 entries left of the last
// maximal entry.  Mirrors the counting function used for Betti numbers.
inline std::vector<int> syzygy_move_set(const Exponent& u) {
  const Int M = *std::max_element(u.begin(), u.end());
  size_t last = 0;
  for (size_t j = 0; j < u.size(); ++j)
    if (u[j] == M) last = j;
  std::vector<int> out;
  for (size_t j = 0; j < u.size(); ++j) {
    if (u[j] < M - 1) out.push_back(static_cast<int>(j));
    else if (u[j] == M - 1 && j < last) out.push_back(static_cast<int>(j));
  }
  if (static_cast<int>(out.size()) != cu_size(u))
    throw VerificationFailure("syzygy_move_set: eligible-index set disagrees with its counting function");
  return out;
}

struct ReesCell {
  int d = 0;
  int k = 0;
  long long fibers = 0;
  bool connected = true;
};

struct FiberTypeReport {
  int n = 0;
  int dmax = 0;
  int kmax = 0;
  long long relation_count = 0;  // emitted x_i T_u = x_m T_v relations
  std::vector<ReesCell> cells;
  bool certified = false;  // every bidegree in the window checked and connected
  bool truncated = false;
  int truncated_d = 0;
  int truncated_k = 0;
};

// Certificate that the defining relations of the Rees algebra live in the
// pure-T part plus the bidegree-(1,1) syzygy relations x_i T_u = x_m T_v
// (m the last variable carrying the maximal exponent of u, i a syzygy move,
// v the exchanged generator).  For each bidegree (d,k) in the window the
// monomials x^a * (T-multiset) are grouped by their image; members with equal
// x-part are identified (any pure-T relation may connect them) and the syzygy
// relations provide the remaining moves.  A disconnected fiber would exhibit a
// relation outside the certified bidegrees, which the theory excludes for this
// input class, so it is raised as a verification error.
inline FiberTypeReport fiber_type_check(const SymmetricIdeal& I, int dmax, int kmax) {
  if (dmax < 1 || kmax < 1) throw std::invalid_argument("fiber_type_check: window must be at least (1,1)");
  if (!is_equigenerated(I)) throw std::invalid_argument("fiber_type_check: ideal is not equigenerated");
  if (!is_strongly_shifted(I)) throw std::invalid_argument("fiber_type_check: ideal is not strongly shifted");
  const MonomialIdeal E = expand(I);
  if (E.is_zero() || E.is_unit()) throw std::invalid_argument("fiber_type_check: ideal must be nonzero and proper");
  FiberTypeReport R;
  R.n = I.n;
  R.dmax = dmax;
  R.kmax = kmax;
  const std::vector<Exponent>& gens = E.gens;
  const int s = static_cast<int>(gens.size());
  std::map<Exponent, int> index;
  for (int i = 0; i < s; ++i) index[gens[static_cast<size_t>(i)]] = i;

  struct SyzygyRel {
    int var_in = 0;   // multiply by this variable...
    int u = 0;        // ...on this generator
    int var_out = 0;  // equals this variable...
    int v = 0;        // ...times this generator
  };
  std::vector<SyzygyRel> rels;
  for (int u = 0; u < s; ++u) {
    const Exponent& gu = gens[static_cast<size_t>(u)];
    const Int M = *std::max_element(gu.begin(), gu.end());
    size_t last = 0;
    for (size_t j = 0; j < gu.size(); ++j)
      if (gu[j] == M) last = j;
    for (int i : syzygy_move_set(gu)) {
      Exponent v = gu;
      ++v[static_cast<size_t>(i)];
      --v[last];
      const auto it = index.find(v);
      if (it == index.end())
        throw VerificationFailure("fiber_type_check: a syzygy move left the generator set at " + to_string(gu));
      rels.push_back({i, u, static_cast<int>(last), it->second});
    }
  }
  R.relation_count = static_cast<long long>(rels.size());

  for (int d = 1; d <= dmax; ++d) {
    for (int k = 1; k <= kmax; ++k) {
      const BigInt cells = binomial(I.n + d - 1, d) * binomial(s + k - 1, k);
      if (cells > BigInt(config().fiber_budget)) {
        R.truncated = true;
        R.truncated_d = d;
        R.truncated_k = k;
        R.certified = false;
        return R;
      }
      std::vector<Exponent> xparts;
      for_each_exponent(I.n, d, [&](const Exponent& a) { xparts.push_back(a); });
      const std::vector<std::vector<int>> monos = detail::index_multisets(s, k);
      struct Member {
        int xp;
        int mono;
      };
      std::map<Exponent, std::vector<Member>> fibers;
      std::vector<Exponent> images(monos.size());
      for (size_t m = 0; m < monos.size(); ++m) images[m] = detail::multiset_image(gens, monos[m], I.n);
      for (size_t a = 0; a < xparts.size(); ++a)
        for (size_t m = 0; m < monos.size(); ++m)
          fibers[vec_add(xparts[a], images[m])].push_back({static_cast<int>(a), static_cast<int>(m)});
      std::map<Exponent, int> xindex;
      for (size_t a = 0; a < xparts.size(); ++a) xindex[xparts[a]] = static_cast<int>(a);
      std::map<std::vector<int>, int> mindex;
      for (size_t m = 0; m < monos.size(); ++m) mindex[monos[m]] = static_cast<int>(m);
      ReesCell cell;
      cell.d = d;
      cell.k = k;
      cell.fibers = static_cast<long long>(fibers.size());
      for (const auto& [img, members] : fibers) {
        if (members.size() < 2) continue;
        detail::UnionFind uf(members.size());
        std::map<std::pair<int, int>, int> local;
        for (size_t a = 0; a < members.size(); ++a) local[{members[a].xp, members[a].mono}] = static_cast<int>(a);
        // pure-T moves: members sharing the x-part are a single class
        std::map<int, int> first_with_x;
        for (size_t a = 0; a < members.size(); ++a) {
          const auto [it, inserted] = first_with_x.emplace(members[a].xp, static_cast<int>(a));
          if (!inserted) uf.unite(static_cast<int>(a), it->second);
        }
        // syzygy moves: swap one T-factor and one x-variable
        for (size_t a = 0; a < members.size(); ++a) {
          const Exponent& xa = xparts[static_cast<size_t>(members[a].xp)];
          const std::vector<int>& M = monos[static_cast<size_t>(members[a].mono)];
          for (const SyzygyRel& rel : rels) {
            if (xa[static_cast<size_t>(rel.var_in)] < 1) continue;
            if (!std::binary_search(M.begin(), M.end(), rel.u)) continue;
            Exponent xb = xa;
            --xb[static_cast<size_t>(rel.var_in)];
            ++xb[static_cast<size_t>(rel.var_out)];
            std::vector<int> N = M;
            N.erase(std::find(N.begin(), N.end(), rel.u));
            N.insert(std::upper_bound(N.begin(), N.end(), rel.v), rel.v);
            const auto xi = xindex.find(xb);
            const auto mi = mindex.find(N);
            if (xi == xindex.end() || mi == mindex.end()) continue;
            const auto lo = local.find({xi->second, mi->second});
            if (lo != local.end()) uf.unite(static_cast<int>(a), lo->second);
          }
        }
        std::set<int> roots;
        for (size_t a = 0; a < members.size(); ++a) roots.insert(uf.find(static_cast<int>(a)));
        if (roots.size() > 1) {
          cell.connected = false;
          throw VerificationFailure("fiber_type_check: bidegree (" + std::to_string(d) + "," +
                                    std::to_string(k) + ") has a disconnected fiber");
        }
      }
      R.cells.push_back(cell);
    }
  }
  R.certified = !R.truncated;
  return R;
}

// Hilbert function of the toric ring of G(I) at degree k: the number of
// distinct images of degree-k monomials in the T's.  For a principal ideal
// this must agree with the lattice-point count of the dilated polytope.
inline long long fiber_hilbert(const SymmetricIdeal& I, int k) {
  if (k < 0) throw std::invalid_argument("fiber_hilbert: negative degree");
  if (!is_equigenerated(I)) throw std::invalid_argument("fiber_hilbert: ideal is not equigenerated");
  if (k == 0) return 1;
  const MonomialIdeal E = expand(I);
  const int s = static_cast<int>(E.gens.size());
  if (binomial(s + k - 1, k) > BigInt(config().fiber_budget))
    throw BudgetExceeded("fiber_hilbert: degree-" + std::to_string(k) + " monomials exceed the fiber budget");
  std::set<Exponent> images;
  for (const std::vector<int>& M : detail::index_multisets(s, k))
    images.insert(detail::multiset_image(E.gens, M, I.n));
  const long long count = static_cast<long long>(images.size());
  if (is_principal_borel(I)) {
    const Partition lam = borel_generators(I)[0];
    if (count != static_cast<long long>(lattice_points(lam, k).size()))
      throw VerificationFailure("fiber_hilbert: fiber count disagrees with the dilated lattice-point count");
  }
  return count;
}

}  // namespace symshift
