#pragma once

// Compressed representation of S_n-fixed monomial ideals: the ideal generated
// by the orbits of x^lambda over a minimal set of partitions (Lambda).
// Membership, Borel-move closures, Borel generators, arithmetic with fast
// paths for strongly shifted operands, and bridges to the expanded oracle.

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "symshift/config.hpp"
#include "symshift/oracle.hpp"
#include "symshift/partition.hpp"

namespace symshift {

struct SymmetricIdeal {
  int n = 0;
  std::vector<Partition> lambdas;  // minimal under componentwise order, lex-sorted; empty = zero

  mutable std::optional<bool> shifted_cache = std::nullopt;
  mutable std::optional<bool> strongly_cache = std::nullopt;

  bool is_zero() const { return lambdas.empty(); }
  bool is_unit() const { return lambdas.size() == 1 && total_of(lambdas[0]) == 0; }
  bool operator==(const SymmetricIdeal& o) const { return n == o.n && lambdas == o.lambdas; }
  bool operator!=(const SymmetricIdeal& o) const { return !(*this == o); }
};

inline SymmetricIdeal zero_symideal(int n) { return SymmetricIdeal{n, {}}; }
inline SymmetricIdeal unit_symideal(int n) { return SymmetricIdeal{n, {Partition(n, 0)}}; }

inline SymmetricIdeal from_partitions(int n, std::vector<Partition> ps) {
  for (const auto& p : ps) {
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("from_partitions: wrong ambient size");
    require_partition(p, "from_partitions");
  }
  // componentwise order on sorted vectors is exactly orbit-level divisibility
  return SymmetricIdeal{n, minimalize(std::move(ps))};
}

inline bool contains(const SymmetricIdeal& I, const Exponent& e) {
  if (static_cast<int>(e.size()) != I.n) throw std::invalid_argument("contains: wrong exponent length");
  const Partition p = part_of(e);
  for (const auto& lam : I.lambdas)
    if (cw_leq(lam, p)) return true;
  return false;
}

inline bool contains(const SymmetricIdeal& I, const SymmetricIdeal& J) {  // J subseteq I
  if (I.n != J.n) throw std::invalid_argument("contains: ambient mismatch");
  for (const auto& mu : J.lambdas)
    if (!contains(I, mu)) return false;
  return true;
}

// x^e in Sss({lam}): prefix sums of part(e) weakly above those of lam.
inline bool principal_membership(const Partition& lam, const Exponent& e) {
  if (lam.size() != e.size()) throw std::invalid_argument("principal_membership: length mismatch");
  const auto pp = prefix_sums(part_of(e)), pl = prefix_sums(lam);
  for (size_t j = 0; j < pl.size(); ++j)
    if (pp[j] < pl[j]) return false;
  return true;
}

// ---- shiftedness ----

struct BorelViolation {
  Partition lambda;  // generator whose move escapes the ideal
  int i, j;          // 1-based positions, lambda_i < lambda_j; j = n for plain shifted
  Partition moved;   // part(lambda + e_i - e_j)
};

namespace detail {
inline Partition borel_move(const Partition& lam, int i, int j) {  // 0-based
  Exponent m = lam;
  ++m[i];
  --m[j];
  return part_of(m);
}
}  // namespace detail

inline std::optional<BorelViolation> shifted_violation(const SymmetricIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("shifted_violation: zero ideal");
  const int n = I.n;
  for (const auto& lam : I.lambdas)
    for (int i = 0; i + 1 < n; ++i) {
      if (lam[i] >= lam[n - 1]) continue;
      Partition moved = detail::borel_move(lam, i, n - 1);
      if (!contains(I, moved)) return BorelViolation{lam, i + 1, n, moved};
    }
  return std::nullopt;
}

inline std::optional<BorelViolation> strongly_shifted_violation(const SymmetricIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("strongly_shifted_violation: zero ideal");
  const int n = I.n;
  for (const auto& lam : I.lambdas)
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        if (lam[i] >= lam[j]) continue;
        Partition moved = detail::borel_move(lam, i, j);
        if (!contains(I, moved)) return BorelViolation{lam, i + 1, j + 1, moved};
      }
  return std::nullopt;
}

inline bool is_shifted(const SymmetricIdeal& I) {
  if (!I.shifted_cache) I.shifted_cache = !shifted_violation(I).has_value();
  return *I.shifted_cache;
}

inline bool is_strongly_shifted(const SymmetricIdeal& I) {
  if (!I.strongly_cache) I.strongly_cache = !strongly_shifted_violation(I).has_value();
  return *I.strongly_cache;
}

inline bool is_equigenerated(const SymmetricIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("is_equigenerated: zero ideal");
  const Int d = total_of(I.lambdas[0]);
  for (const auto& lam : I.lambdas)
    if (total_of(lam) != d) return false;
  return true;
}

// ---- closures ----

// Smallest strongly shifted symmetric ideal containing the orbits of B:
// its generating partitions are the componentwise-minimal elements of all
// partitions dominated by some member of B (same degree).
inline SymmetricIdeal sss_closure(int n, const std::vector<Partition>& B) {
  if (B.empty()) throw std::invalid_argument("sss_closure: empty generator set");
  std::vector<Partition> all;
  for (const auto& lam : B) {
    if (static_cast<int>(lam.size()) != n) throw std::invalid_argument("sss_closure: wrong ambient size");
    require_partition(lam, "sss_closure");
    auto dom = enumerate_dominated(lam);
    all.insert(all.end(), dom.begin(), dom.end());
  }
  return SymmetricIdeal{n, minimalize(std::move(all))};
}

// Smallest shifted symmetric ideal containing the orbits of B: fixed point of
// the single-move closure (trade one unit from the largest part to a smaller
// one), checking generators only.
inline SymmetricIdeal ss_closure(int n, const std::vector<Partition>& B) {
  if (B.empty()) throw std::invalid_argument("ss_closure: empty generator set");
  for (const auto& lam : B) {
    if (static_cast<int>(lam.size()) != n) throw std::invalid_argument("ss_closure: wrong ambient size");
    require_partition(lam, "ss_closure");
  }
  std::vector<Partition> gens = minimalize(B);
  size_t produced = 0;
  while (true) {
    std::vector<Partition> next = gens;
    for (const auto& lam : gens)
      for (int i = 0; i + 1 < n; ++i)
        if (lam[i] < lam[n - 1]) next.push_back(detail::borel_move(lam, i, n - 1));
    produced += next.size();
    if (produced > static_cast<size_t>(config().enumeration_budget))
      throw BudgetExceeded("ss_closure: generated set exceeds enumeration budget");
    next = minimalize(std::move(next));
    if (next == gens) return SymmetricIdeal{n, std::move(gens)};
    gens = std::move(next);
  }
}

inline SymmetricIdeal sss_closure_by_moves(int n, const std::vector<Partition>& B) {
  // Reference fixed point over all Borel moves; cross-checks the
  // dominance-enumeration route in tests.
  if (B.empty()) throw std::invalid_argument("sss_closure_by_moves: empty generator set");
  std::vector<Partition> gens = minimalize(B);
  size_t produced = 0;
  while (true) {
    std::vector<Partition> next = gens;
    for (const auto& lam : gens)
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
          if (lam[i] < lam[j]) next.push_back(detail::borel_move(lam, i, j));
    produced += next.size();
    if (produced > static_cast<size_t>(config().enumeration_budget))
      throw BudgetExceeded("sss_closure_by_moves: generated set exceeds enumeration budget");
    next = minimalize(std::move(next));
    if (next == gens) return SymmetricIdeal{n, std::move(gens)};
    gens = std::move(next);
  }
}

// ---- Borel generators ----

// Dominance-maximal generators within each degree class.
inline std::vector<Partition> borel_generators(const SymmetricIdeal& I) {
  if (!is_strongly_shifted(I)) throw std::invalid_argument("borel_generators: ideal is not strongly shifted");
  std::vector<Partition> out;
  for (const auto& lam : I.lambdas) {
    bool maximal = true;
    for (const auto& mu : I.lambdas) {
      if (mu == lam || total_of(mu) != total_of(lam)) continue;
      if (dominance_leq(lam, mu)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(lam);
  }
  return out;
}

inline bool is_principal_borel(const SymmetricIdeal& I) {
  return !I.is_zero() && is_strongly_shifted(I) && borel_generators(I).size() == 1;
}

// ---- arithmetic ----

inline SymmetricIdeal add(const SymmetricIdeal& I, const SymmetricIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("add: ambient mismatch");
  auto ps = I.lambdas;
  ps.insert(ps.end(), J.lambdas.begin(), J.lambdas.end());
  return SymmetricIdeal{I.n, minimalize(std::move(ps))};
}

namespace detail {
inline void check_sn_cap(int n, const char* op) {
  if (n > config().sn_cap) throw BudgetExceeded(std::string(op) + ": permutation enumeration beyond cap");
}
}  // namespace detail

inline SymmetricIdeal intersect(const SymmetricIdeal& I, const SymmetricIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("intersect: ambient mismatch");
  if (I.is_zero() || J.is_zero()) return zero_symideal(I.n);
  if (is_strongly_shifted(I) && is_strongly_shifted(J)) {
    // combine Borel generators pairwise; the combined prefix profile is the
    // least partition lying in both principal pieces, in any degrees
    std::vector<Partition> combos;
    for (const auto& a : borel_generators(I))
      for (const auto& b : borel_generators(J)) combos.push_back(prefix_max_combine(a, b));
    return sss_closure(I.n, combos);
  }
  detail::check_sn_cap(I.n, "intersect");
  std::vector<Partition> out;
  for (const auto& lam : I.lambdas)
    for (const auto& sig : orbit(lam))
      for (const auto& mu : J.lambdas) out.push_back(part_of(vec_max(sig, mu)));
  return SymmetricIdeal{I.n, minimalize(std::move(out))};
}

inline SymmetricIdeal multiply(const SymmetricIdeal& I, const SymmetricIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("multiply: ambient mismatch");
  if (I.is_zero() || J.is_zero()) return zero_symideal(I.n);
  if (is_strongly_shifted(I) && is_strongly_shifted(J)) {
    std::vector<Partition> sums;
    for (const auto& a : borel_generators(I))
      for (const auto& b : borel_generators(J)) sums.push_back(vec_add(a, b));
    return sss_closure(I.n, sums);
  }
  detail::check_sn_cap(I.n, "multiply");
  std::vector<Partition> out;
  for (const auto& lam : I.lambdas)
    for (const auto& sig : orbit(lam))
      for (const auto& mu : J.lambdas) out.push_back(part_of(vec_add(sig, mu)));
  return SymmetricIdeal{I.n, minimalize(std::move(out))};
}

inline SymmetricIdeal power(const SymmetricIdeal& I, int k) {
  if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
  if (I.is_zero() || I.is_unit()) return I;
  if (is_principal_borel(I)) {
    Partition klam = borel_generators(I)[0];
    for (auto& v : klam) v *= k;
    return sss_closure(I.n, {klam});
  }
  SymmetricIdeal r = I;
  for (int i = 1; i < k; ++i) r = multiply(r, I);
  return r;
}

// ---- saturation, radical, height ----

// Squarefree symmetric ideal of height c: generated by the orbit of the
// squarefree monomial in the last n-c+1 variables.
inline SymmetricIdeal squarefree_veronese(int n, int c) {
  if (c < 1 || c > n) throw std::invalid_argument("squarefree_veronese: height out of range");
  Partition lam(n, 1);
  for (int i = 0; i < c - 1; ++i) lam[i] = 0;
  return SymmetricIdeal{n, {std::move(lam)}};
}

// I : I_{n,c}^infty for strongly shifted I: keep the first c-1 parts of each
// generator and level the rest down to the (c-1)-st part.
inline SymmetricIdeal saturate_veronese(const SymmetricIdeal& I, int c) {
  if (c < 1 || c > I.n) throw std::invalid_argument("saturate_veronese: c out of range");
  if (I.is_zero()) return I;
  if (!is_strongly_shifted(I))
    throw std::invalid_argument("saturate_veronese: ideal is not strongly shifted; use the expanded saturation");
  if (c == 1) return unit_symideal(I.n);
  std::vector<Partition> out;
  for (const auto& lam : I.lambdas) {
    Partition mu(lam.begin(), lam.begin() + (c - 1));
    mu.resize(I.n, lam[c - 2]);
    out.push_back(std::move(mu));
  }
  return SymmetricIdeal{I.n, minimalize(std::move(out))};
}

inline int height(const SymmetricIdeal& I) {
  if (I.is_zero() || I.is_unit()) throw std::invalid_argument("height: ideal must be nonzero and proper");
  int h = 0;
  for (const auto& lam : I.lambdas) h = std::max(h, min_index(lam));
  return h;
}

inline SymmetricIdeal radical(const SymmetricIdeal& I) {
  if (I.is_unit()) return I;
  return squarefree_veronese(I.n, height(I));
}

// ---- bridges to the expanded representation ----

inline MonomialIdeal expand(const SymmetricIdeal& I) {
  detail::check_sn_cap(I.n, "expand");
  std::vector<Exponent> gens;
  for (const auto& lam : I.lambdas) {
    auto orb = orbit(lam);
    gens.insert(gens.end(), orb.begin(), orb.end());
  }
  return make_ideal(I.n, std::move(gens));
}

inline SymmetricIdeal compress_symmetric(const MonomialIdeal& M) {
  if (!is_symmetric(M)) throw std::invalid_argument("compress_symmetric: ideal is not symmetric");
  std::vector<Partition> ps;
  for (const auto& g : M.gens)  // each orbit of minimal generators has one sorted member
    if (is_nondecreasing(g)) ps.push_back(g);
  return SymmetricIdeal{M.n, minimalize(std::move(ps))};
}

// Partitions lying in a strongly stable ideal J form the symmetric ideal
// generated by the running maxima of J's generators: the running max of g is
// the least partition componentwise above g.
inline SymmetricIdeal symmetrize(const MonomialIdeal& J) {
  if (!is_strongly_stable(J)) throw std::invalid_argument("symmetrize: ideal is not strongly stable");
  if (J.is_zero()) return zero_symideal(J.n);
  std::vector<Partition> ps;
  for (const auto& g : J.gens) {
    Partition run = g;
    for (size_t i = 1; i < run.size(); ++i) run[i] = std::max(run[i], run[i - 1]);
    ps.push_back(std::move(run));
  }
  return SymmetricIdeal{J.n, minimalize(std::move(ps))};
}

// Smallest strongly stable ideal whose symmetrization recovers I.
inline MonomialIdeal smallest_sstable(const SymmetricIdeal& I) {
  if (!is_strongly_shifted(I)) throw std::invalid_argument("smallest_sstable: ideal is not strongly shifted");
  std::vector<Exponent> b;
  for (const auto& lam : borel_generators(I)) b.push_back(lam);
  return borel_closure(I.n, b);
}

}  // namespace symshift
