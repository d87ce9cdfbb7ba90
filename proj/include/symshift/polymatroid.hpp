#pragma once

// Exchange-property analysis for equigenerated symmetric monomial ideals:
// the polymatroidal exchange test, its equivalence with being the orbit
// closure of a single partition, the strong exchange property and its
// three-shape classification, the transversal (prime-power product)
// criterion via iterated differences, and the factorization of a
// single-partition closure into powers of squarefree Veronese ideals.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symideal.hpp"

namespace symshift {

// ---------------------------------------------------------------------
// Polymatroidal exchange.  For generators u, v and every i with
// u_i > v_i there must be a j with u_j < v_j and u - e_i + e_j again a
// generator.  For such ideals the j can moreover always be chosen so
// that v - e_j + e_i is a generator too (symmetric exchange); this is
// re-verified rather than assumed.
// ---------------------------------------------------------------------

struct ExchangeViolation {
  Exponent u, v;
  int i = 0;  // 1-based index with u_i > v_i admitting no exchange
};

struct ExchangeReport {
  bool polymatroidal = false;
  std::optional<ExchangeViolation> violation;  // lexicographically least
};

inline ExchangeReport is_polymatroidal(const SymmetricIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("is_polymatroidal: ideal must be nonzero and proper");
  if (!is_equigenerated(I))
    throw std::invalid_argument("is_polymatroidal: ideal is not equigenerated");
  const auto E = expand(I);
  std::vector<Exponent> gens = E.gens;  // lex-sorted
  std::set<Exponent> in(gens.begin(), gens.end());
  bool symmetric_everywhere = true;
  for (const auto& u : gens)
    for (const auto& v : gens) {
      if (u == v) continue;
      for (int i = 0; i < I.n; ++i) {
        if (u[i] <= v[i]) continue;
        bool plain = false, symmetric = false;
        for (int j = 0; j < I.n && !symmetric; ++j) {
          if (u[j] >= v[j]) continue;
          Exponent w = u;
          --w[i];
          ++w[j];
          if (!in.count(w)) continue;
          plain = true;
          Exponent z = v;
          ++z[i];
          --z[j];
          if (in.count(z)) symmetric = true;
        }
        if (!plain) return {false, ExchangeViolation{u, v, i + 1}};
        if (!symmetric) symmetric_everywhere = false;
      }
    }
  // Once the exchange property holds throughout, the exchange index can
  // always be chosen to work in both directions; a counterexample here
  // would be a genuine inconsistency.
  if (!symmetric_everywhere)
    throw VerificationFailure("is_polymatroidal: exchange holds but never symmetrically");
  return {true, std::nullopt};
}

// The exchange property singles out exactly the orbit closures of one
// partition among symmetric ideals; both sides are computed and must
// agree.
struct ExchangeEquivalence {
  bool polymatroidal = false;
  bool principal = false;
};

inline ExchangeEquivalence verify_exchange_equivalence(const SymmetricIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("verify_exchange_equivalence: ideal must be nonzero and proper");
  ExchangeEquivalence R;
  R.polymatroidal = is_equigenerated(I) && is_polymatroidal(I).polymatroidal;
  R.principal = is_principal_borel(I);
  if (R.polymatroidal != R.principal)
    throw VerificationFailure("verify_exchange_equivalence: exchange test and principality disagree");
  return R;
}

// ---------------------------------------------------------------------
// Strong exchange: every pair i, j with u_i > v_i, u_j < v_j admits the
// move.  Among single-partition closures this holds exactly for the
// shapes
//   "constant"      (a,...,a) with a > 0,
//   "two-values"    (a^s, b^{n-s}) with a < b, s > 0,
//   "middle-step"   (a^s, b, c^{n-s-1}) with a < b < c, s > 0;
// the syntactic classification and the exhaustive check must agree.
// ---------------------------------------------------------------------

inline std::string strong_exchange_shape(const Partition& lam) {
  require_partition(lam, "strong_exchange_shape");
  const int n = static_cast<int>(lam.size());
  if (n == 0 || total_of(lam) == 0) throw std::invalid_argument("strong_exchange_shape: unit ideal");
  std::vector<std::pair<Int, int>> runs;  // (value, multiplicity)
  for (Int v : lam) {
    if (!runs.empty() && runs.back().first == v) ++runs.back().second;
    else runs.push_back({v, 1});
  }
  if (runs.size() == 1) return "constant";
  if (runs.size() == 2) return "two-values";
  if (runs.size() == 3 && runs[1].second == 1) return "middle-step";
  return "none";
}

inline bool has_strong_exchange_bruteforce(const SymmetricIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("has_strong_exchange_bruteforce: ideal must be nonzero and proper");
  if (!is_equigenerated(I))
    throw std::invalid_argument("has_strong_exchange_bruteforce: ideal is not equigenerated");
  const auto E = expand(I);
  std::set<Exponent> in(E.gens.begin(), E.gens.end());
  for (const auto& u : E.gens)
    for (const auto& v : E.gens) {
      if (u == v) continue;
      for (int i = 0; i < I.n; ++i) {
        if (u[i] <= v[i]) continue;
        for (int j = 0; j < I.n; ++j) {
          if (u[j] >= v[j]) continue;
          Exponent w = u;
          --w[i];
          ++w[j];
          if (!in.count(w)) return false;
        }
      }
    }
  return true;
}

struct StrongExchangeReport {
  std::string shape;  // "constant" / "two-values" / "middle-step" / "none"
  bool holds = false;
};

inline StrongExchangeReport strong_exchange(const Partition& lam) {
  StrongExchangeReport R;
  R.shape = strong_exchange_shape(lam);
  const int n = static_cast<int>(lam.size());
  R.holds = has_strong_exchange_bruteforce(sss_closure(n, {lam}));
  if (R.holds != (R.shape != "none"))
    throw VerificationFailure("strong_exchange: shape classification disagrees with exhaustive check");
  return R;
}

// ---------------------------------------------------------------------
// Transversal criterion.  The closure of a single partition is a product
// of powers of monomial primes exactly when the system
//   lam_i = sum_j binomial(i-1, j-1) a_j
// has a nonnegative solution; the solution is a_j = first entry of the
// (j-1)-st iterated difference of lam.  When it exists, the ideal is
//   prod over subset sizes c of ( prod_{|S|=c} (x_S) )^{a_c}.
// Symmetric lattice-path shapes are exactly the constant partitions and
// the pure top-entry ones (powers of the maximal ideal).
// ---------------------------------------------------------------------

struct TransversalReport {
  bool transversal = false;
  std::vector<Int> a;                          // a[c-1] = exponent on subset size c
  std::vector<std::pair<int, Int>> factors;    // (subset size, positive exponent)
  bool lattice_path = false;
};

inline TransversalReport transversal_classify(const Partition& lam) {
  require_partition(lam, "transversal_classify");
  const int n = static_cast<int>(lam.size());
  if (n == 0 || total_of(lam) == 0) throw std::invalid_argument("transversal_classify: unit ideal");

  TransversalReport R;
  std::vector<Int> d(lam.begin(), lam.end());
  for (int c = 1; c <= n; ++c) {
    R.a.push_back(d[0]);
    if (c < n) d = delta(d);
  }
  R.transversal = std::all_of(R.a.begin(), R.a.end(), [](Int v) { return v >= 0; });

  // Independent check through the binomial system.
  for (int i = 1; i <= n; ++i) {
    BigInt s = 0;
    for (int j = 1; j <= i; ++j) s += binomial(i - 1, j - 1) * BigInt(R.a[j - 1]);
    if (s != BigInt(lam[i - 1]))
      throw VerificationFailure("transversal_classify: difference solution fails the binomial system");
  }

  if (R.transversal)
    for (int c = 1; c <= n; ++c)
      if (R.a[c - 1] > 0) R.factors.push_back({c, R.a[c - 1]});

  R.lattice_path = is_constant(lam) || (n >= 2 && prefix_sums(lam)[n - 2] == 0);
  return R;
}

// ---------------------------------------------------------------------
// Factorization into squarefree Veronese ideals: the closure of lam is
// the product over i of the ideal of squarefree monomials in n variables
// of degree n-i+1, raised to lam_i - lam_{i-1}.
// ---------------------------------------------------------------------

inline std::vector<std::pair<int, Int>> veronese_factorization(const Partition& lam) {
  require_partition(lam, "veronese_factorization");
  const int n = static_cast<int>(lam.size());
  if (n == 0 || total_of(lam) == 0) throw std::invalid_argument("veronese_factorization: unit ideal");
  std::vector<std::pair<int, Int>> out;
  Int prev = 0;
  for (int i = 1; i <= n; ++i) {
    if (lam[i - 1] > prev) out.push_back({i, lam[i - 1] - prev});
    prev = lam[i - 1];
  }
  return out;
}

}  // namespace symshift
