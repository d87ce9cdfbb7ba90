#pragma once

// Primary/symbolic decomposition machinery for symmetric strongly shifted
// ideals.  A power of a principal ideal decomposes as an intersection of
// symbolic powers of squarefree Veronese ideals; this header computes that
// decomposition, classifies which components are irredundant (with
// explicit monomial witnesses in the hard cases), derives the stable set
// of associated primes, and answers symbolic-vs-ordinary power containment
// questions exactly.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "symideal.hpp"

namespace symshift {

// ---------------------------------------------------------------------
// Symbolic powers of squarefree Veronese ideals.
//
// vs(n, j, m) is the symmetric ideal of all monomials in n variables
// whose j smallest exponents sum to at least m.  Equivalently it is the
// intersection of P^m over all height-j variable primes P.  For m <= 0
// it is the unit ideal.
// ---------------------------------------------------------------------

struct VeroneseSymbolic {
  int n = 0;
  int j = 0;
  Int m = 0;
};

inline void require_vs(const VeroneseSymbolic& V) {
  if (V.n < 1 || V.j < 1 || V.j > V.n)
    throw std::invalid_argument("veronese symbolic: need 1 <= j <= n");
}

inline bool vs_contains(const VeroneseSymbolic& V, const Exponent& e) {
  require_vs(V);
  if (static_cast<int>(e.size()) != V.n)
    throw std::invalid_argument("vs_contains: wrong ambient size");
  if (V.m <= 0) return true;
  return prefix_sums(part_of(e))[V.j - 1] >= V.m;
}

// Minimal generators: partitions whose first j parts sum to exactly m and
// whose remaining parts all equal the j-th part.  Distinct such partitions
// are automatically incomparable (equal prefix sums force equality), so no
// divisibility filtering is needed.
inline std::vector<Partition> vs_generators(const VeroneseSymbolic& V) {
  require_vs(V);
  if (V.m <= 0) return {Partition(V.n, 0)};
  std::vector<Partition> out;
  Partition head(V.j);
  // Enumerate nondecreasing heads of length j with the prescribed total.
  auto rec = [&](auto&& self, int pos, Int last, Int rem) -> void {
    if (pos == V.j - 1) {
      if (rem < last) return;
      head[pos] = rem;
      Partition mu(head);
      mu.resize(V.n, head[V.j - 1]);
      out.push_back(std::move(mu));
      if (out.size() > static_cast<size_t>(config().enumeration_budget))
        throw BudgetExceeded("vs_generators: generator count over budget");
      return;
    }
    const Int slots = V.j - pos;
    for (Int v = last; v * slots <= rem; ++v) {
      head[pos] = v;
      self(self, pos + 1, v, rem - v);
    }
  };
  rec(rec, 0, 0, V.m);
  std::sort(out.begin(), out.end());
  return out;
}

inline SymmetricIdeal vs_ideal(const VeroneseSymbolic& V) {
  return from_partitions(V.n, vs_generators(V));
}

inline SymmetricIdeal vs_ideal(int n, int j, Int m) { return vs_ideal(VeroneseSymbolic{n, j, m}); }

// ---------------------------------------------------------------------
// Decomposition of a power of a principal ideal.
//
// For I generated by the orbit of a single partition lam with prefix sums
// a_j, the k-th power is the intersection of vs(n, j, k*a_j) over all j.
// Each component is classified as kept or dropped.  Rule tags:
//   "unit"             dropped, the component is the unit ideal
//   "least-support"    kept, the component on the minimal-prime height
//   "ascent"           kept, lam strictly increases entering position j
//   "large-k"          kept, k exceeds j(j-1)
//   "remainder"        kept, division criterion on k*a_{j-1} fires
//   "witness"          kept, explicit separating monomial found by search
//   "constant-prefix"  dropped, lam is constant up to position j
//   "containment"      dropped, search proved no separating monomial
// Witnesses (for "ascent", "witness") are partitions lying in every other
// component but not in component j.
// ---------------------------------------------------------------------

struct Component {
  int j = 0;
  Int m = 0;  // exponent of the symbolic Veronese component
  bool kept = false;
  std::string rule;
  std::optional<Partition> witness;
};

struct PrincipalDecomposition {
  int n = 0;
  Partition lambda;
  int k = 1;
  std::vector<Component> components;

  std::vector<int> kept_heights() const {
    std::vector<int> hs;
    for (const auto& c : components)
      if (c.kept) hs.push_back(c.j);
    return hs;
  }
};

namespace detail {

// Search for a partition mu with prefix_l(mu) >= need[l] for l < j and
// prefix_j(mu) <= cap.  Constraints above position j are always satisfiable
// by growing the tail, so only the first j positions are explored.  States
// are (value at current position, running sum) with parent links for
// witness reconstruction.
inline std::optional<Partition> separating_head(const std::vector<Int>& need, int j, Int cap,
                                                Int budget) {
  if (cap < 0) return std::nullopt;
  struct Key {
    Int last, sum;
    bool operator<(const Key& o) const { return std::tie(last, sum) < std::tie(o.last, o.sum); }
  };
  std::vector<std::map<Key, Key>> layers(j + 1);  // state -> parent state
  layers[0][Key{0, 0}] = Key{-1, -1};
  Int states = 1;
  for (int pos = 0; pos < j; ++pos) {
    for (const auto& [st, parent] : layers[pos]) {
      (void)parent;
      for (Int v = st.last;; ++v) {
        const Int sum = st.sum + v;
        // Positions after this one each carry at least v.
        if (sum + Int(j - pos - 1) * v > cap) break;
        // The lower bound applies strictly before the escaping position.
        if (pos < j - 1 && sum < need[pos]) continue;
        if (layers[pos + 1].emplace(Key{v, sum}, st).second && ++states > budget)
          throw BudgetExceeded("separating_head: state count over budget");
      }
    }
    if (layers[pos + 1].empty()) return std::nullopt;
  }
  Key cur = layers[j].begin()->first;
  Partition head(j);
  for (int pos = j; pos-- > 0;) {
    head[pos] = cur.last;
    cur = layers[pos + 1].at(cur);
  }
  return head;
}

// Extend a separating head to a full partition lying in every component
// above position j: greedily take the smallest value meeting each later
// prefix constraint.
inline Partition extend_head(Partition head, int n, const std::vector<Int>& need) {
  Int sum = total_of(head);
  Int last = head.empty() ? 0 : head.back();
  for (int l = static_cast<int>(head.size()); l < n; ++l) {
    Int v = std::max(last, need[l] - sum);
    head.push_back(v);
    sum += v;
    last = v;
  }
  return head;
}

}  // namespace detail

inline PrincipalDecomposition principal_decomposition(const Partition& lam, int k) {
  require_partition(lam, "principal_decomposition");
  const int n = static_cast<int>(lam.size());
  if (n == 0 || k < 1) throw std::invalid_argument("principal_decomposition: need n >= 1, k >= 1");
  if (total_of(lam) == 0) throw std::invalid_argument("principal_decomposition: unit ideal");
  const int jp = min_index(lam);
  const auto a = prefix_sums(lam);
  std::vector<Int> need(n);
  for (int l = 0; l < n; ++l) need[l] = Int(k) * a[l];

  PrincipalDecomposition D{n, lam, k, {}};
  for (int j = 1; j <= n; ++j) {
    Component c;
    c.j = j;
    c.m = need[j - 1];
    if (j < jp) {
      c.kept = false;
      c.rule = "unit";
    } else if (j == jp) {
      c.kept = true;
      c.rule = "least-support";
    } else if (lam[j - 2] < lam[j - 1]) {
      c.kept = true;
      c.rule = "ascent";
      // Separating monomial: follow k*lam up to position j-1, repeat that
      // value at position j (undershooting the ascent), then recover.
      Partition head(j);
      for (int i = 0; i + 1 < j; ++i) head[i] = Int(k) * lam[i];
      head[j - 1] = Int(k) * lam[j - 2];
      c.witness = detail::extend_head(std::move(head), n, need);
    } else if (lam[j - 1] == lam[0]) {
      c.kept = false;
      c.rule = "constant-prefix";
    } else {
      // lam[0] < lam[j-1] = lam[j-2]: division criterion, then exact search.
      const Int q = need[j - 2] / (j - 1), r = need[j - 2] % (j - 1);
      if (Int(k) > Int(j) * (j - 1)) {
        c.kept = true;
        c.rule = "large-k";
      } else if (Int(k) * lam[j - 1] > q + j - r) {
        c.kept = true;
        c.rule = "remainder";
      } else {
        auto head = detail::separating_head(need, j, c.m - 1, config().enumeration_budget);
        if (head) {
          c.kept = true;
          c.rule = "witness";
          c.witness = detail::extend_head(std::move(*head), n, need);
        } else {
          c.kept = false;
          c.rule = "containment";
        }
      }
    }
    D.components.push_back(std::move(c));
  }
  return D;
}

// Exact irredundancy of a single component, decided purely by search; used
// to cross-check the rule-based classification.
inline bool component_irredundant_exact(const Partition& lam, int k, int j) {
  require_partition(lam, "component_irredundant_exact");
  const int n = static_cast<int>(lam.size());
  if (j < 1 || j > n) throw std::invalid_argument("component_irredundant_exact: j out of range");
  const auto a = prefix_sums(lam);
  std::vector<Int> need(n);
  for (int l = 0; l < n; ++l) need[l] = Int(k) * a[l];
  return detail::separating_head(need, j, need[j - 1] - 1, config().enumeration_budget).has_value();
}

// Verify the decomposition both ways: the ideal generated by k*lam equals
// the intersection of the kept components, and every witness separates.
inline void verify_power_decomposition(const PrincipalDecomposition& D) {
  SymmetricIdeal X = unit_symideal(D.n);
  for (const auto& c : D.components) {
    if (!c.kept) continue;
    X = intersect(X, vs_ideal(D.n, c.j, c.m));
  }
  Partition klam(D.n);
  for (int i = 0; i < D.n; ++i) klam[i] = Int(D.k) * D.lambda[i];
  if (!(X == sss_closure(D.n, {klam})))
    throw VerificationFailure("verify_power_decomposition: intersection mismatch");
  for (const auto& c : D.components) {
    if (!c.witness) continue;
    const Exponent& w = *c.witness;
    if (vs_contains(VeroneseSymbolic{D.n, c.j, c.m}, w))
      throw VerificationFailure("verify_power_decomposition: witness not separating");
    for (const auto& o : D.components)
      if (o.kept && o.j != c.j && !vs_contains(VeroneseSymbolic{D.n, o.j, o.m}, w))
        throw VerificationFailure("verify_power_decomposition: witness misses a kept component");
  }
}

// ---------------------------------------------------------------------
// Stable associated primes of a principal ideal.
//
// heights lists the support sizes of the primes associated to all large
// powers.  When the generator is constant, or repeats no part other than
// its smallest one, every power has the same associated primes and equals
// its symbolic power; this is reported via certified_one.  Otherwise s is
// the last position where a part above the minimum repeats, and the index
// from which the associated primes stabilize is at most
// min(n-1, s(s-1)+1).
// ---------------------------------------------------------------------

struct StableAss {
  std::vector<int> heights;
  int astab_bound = 1;
  bool certified_one = false;  // astab = dstab = 1, powers equal symbolic powers
  int s = 0;                   // 0 when certified_one
};

inline StableAss stable_ass(const Partition& lam) {
  require_partition(lam, "stable_ass");
  const int n = static_cast<int>(lam.size());
  if (n == 0 || total_of(lam) == 0) throw std::invalid_argument("stable_ass: unit ideal");
  const int jp = min_index(lam);

  StableAss S;
  if (jp > 1) {
    for (int j = jp; j <= n; ++j) S.heights.push_back(j);
  } else {
    S.heights.push_back(1);
    for (int j = 2; j <= n; ++j)
      if (lam[j - 1] != lam[0]) S.heights.push_back(j);
  }

  int s = 0;
  for (int j = 2; j <= n; ++j)
    if (lam[0] < lam[j - 2] && lam[j - 2] == lam[j - 1]) s = j;
  if (s == 0) {
    S.certified_one = true;
    S.astab_bound = 1;
  } else {
    S.s = s;
    S.astab_bound = static_cast<int>(std::min<Int>(n - 1, Int(s) * (s - 1) + 1));
  }
  return S;
}

// ---------------------------------------------------------------------
// Containment of symbolic powers in ordinary powers.
//
// For a principal ideal with generator lam of total degree d and least
// support height c, the m-th symbolic power over the minimal primes is
// vs(n, c, lam_c * m).  It is contained in the k-th ordinary power
// whenever lam_c * m >= d * k; the exact test checks every generator of
// the symbolic power for membership.  The sufficient criterion must never
// outrun the exact one.
// ---------------------------------------------------------------------

struct ContainmentReport {
  int n = 0;
  Int m = 0;
  int k = 1;
  bool sufficient = false;  // lam_c * m >= d * k
  bool contained = false;   // exact
};

inline ContainmentReport symbolic_in_power(const Partition& lam, Int m, int k) {
  require_partition(lam, "symbolic_in_power");
  const int n = static_cast<int>(lam.size());
  if (n == 0 || total_of(lam) == 0) throw std::invalid_argument("symbolic_in_power: unit ideal");
  if (m < 1 || k < 1) throw std::invalid_argument("symbolic_in_power: need m, k >= 1");
  const int c = min_index(lam);
  const Int d = total_of(lam);

  ContainmentReport R{n, m, k, false, false};
  R.sufficient = lam[c - 1] * m >= d * k;

  Partition klam(n);
  for (int i = 0; i < n; ++i) klam[i] = Int(k) * lam[i];
  R.contained = true;
  for (const auto& mu : vs_generators(VeroneseSymbolic{n, c, lam[c - 1] * m}))
    if (!principal_membership(klam, mu)) {
      R.contained = false;
      break;
    }
  if (R.sufficient && !R.contained)
    throw VerificationFailure("symbolic_in_power: sufficient criterion outran the exact test");
  return R;
}

// ---------------------------------------------------------------------
// Adic closedness.
//
// A symmetric ideal I embeds into the intersection, over the heights j of
// its associated primes, of vs(n, j, v_j) where v_j is the least j-smallest
// prefix sum over the generators of I (the order of vanishing along a
// height-j prime).  The report states whether that intersection collapses
// back to I.
// ---------------------------------------------------------------------

struct AdicReport {
  bool closed = false;
  std::vector<std::pair<int, Int>> factors;  // (height, order of vanishing)
  SymmetricIdeal intersection;
};

inline AdicReport adically_closed(const SymmetricIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("adically_closed: ideal must be nonzero and proper");
  std::vector<int> heights;
  for (const auto& P : associated_primes(expand(I)))
    heights.push_back(static_cast<int>(P.size()));
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());

  AdicReport R;
  R.intersection = unit_symideal(I.n);
  for (int j : heights) {
    Int v = std::numeric_limits<Int>::max();
    for (const auto& lam : I.lambdas) v = std::min(v, prefix_sums(lam)[j - 1]);
    R.factors.emplace_back(j, v);
    R.intersection = intersect(R.intersection, vs_ideal(I.n, j, v));
  }
  R.closed = (R.intersection == I);
  return R;
}

}  // namespace symshift
