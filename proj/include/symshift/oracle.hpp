#pragma once

// Brute-force monomial-ideal algebra over expanded generator lists.  This is
// the reference implementation the compressed routines are tested against;
// everything here favors obviousness over speed and works at desk scale.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "symshift/config.hpp"
#include "symshift/lp.hpp"
#include "symshift/numeric.hpp"
#include "symshift/partition.hpp"

namespace symshift {

// Divisibility-minimal subset, sorted by (degree, lex).
inline std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
    Int da = total_of(a), db = total_of(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> kept;
  for (const auto& g : gens) {
    bool divisible = false;
    for (const auto& k : kept)
      if (cw_leq(k, g)) {
        divisible = true;
        break;
      }
    if (!divisible) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

struct MonomialIdeal {
  int n = 0;
  std::vector<Exponent> gens;  // minimal generators, lex-sorted; empty = zero ideal

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && total_of(gens[0]) == 0; }
  bool operator==(const MonomialIdeal& o) const { return n == o.n && gens == o.gens; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
};

inline MonomialIdeal make_ideal(int n, std::vector<Exponent> gens) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("make_ideal: wrong exponent length");
    for (Int v : g)
      if (v < 0) throw std::invalid_argument("make_ideal: negative exponent");
  }
  return MonomialIdeal{n, minimalize(std::move(gens))};
}

inline MonomialIdeal zero_ideal(int n) { return MonomialIdeal{n, {}}; }
inline MonomialIdeal unit_ideal(int n) { return MonomialIdeal{n, {Exponent(n, 0)}}; }

inline bool contains(const MonomialIdeal& I, const Exponent& e) {
  if (static_cast<int>(e.size()) != I.n) throw std::invalid_argument("contains: wrong exponent length");
  for (const auto& g : I.gens)
    if (cw_leq(g, e)) return true;
  return false;
}

inline bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {  // J subseteq I
  if (I.n != J.n) throw std::invalid_argument("contains: ambient mismatch");
  for (const auto& g : J.gens)
    if (!contains(I, g)) return false;
  return true;
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("sum: ambient mismatch");
  auto g = I.gens;
  g.insert(g.end(), J.gens.begin(), J.gens.end());
  return MonomialIdeal{I.n, minimalize(std::move(g))};
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("intersect: ambient mismatch");
  if (I.is_zero() || J.is_zero()) return zero_ideal(I.n);
  std::vector<Exponent> out;
  out.reserve(I.gens.size() * J.gens.size());
  for (const auto& a : I.gens)
    for (const auto& b : J.gens) out.push_back(vec_max(a, b));
  return MonomialIdeal{I.n, minimalize(std::move(out))};
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("product: ambient mismatch");
  if (I.is_zero() || J.is_zero()) return zero_ideal(I.n);
  std::vector<Exponent> out;
  out.reserve(I.gens.size() * J.gens.size());
  for (const auto& a : I.gens)
    for (const auto& b : J.gens) out.push_back(vec_add(a, b));
  return MonomialIdeal{I.n, minimalize(std::move(out))};
}

inline MonomialIdeal power(const MonomialIdeal& I, int k) {
  if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
  MonomialIdeal r = I;
  for (int i = 1; i < k; ++i) r = product(r, I);
  return r;
}

inline MonomialIdeal colon_mono(const MonomialIdeal& I, const Exponent& m) {
  if (static_cast<int>(m.size()) != I.n) throw std::invalid_argument("colon_mono: wrong exponent length");
  std::vector<Exponent> out;
  out.reserve(I.gens.size());
  for (const auto& g : I.gens) {
    Exponent q(g.size());
    for (size_t i = 0; i < g.size(); ++i) q[i] = std::max<Int>(g[i] - m[i], 0);
    out.push_back(std::move(q));
  }
  return MonomialIdeal{I.n, minimalize(std::move(out))};
}

inline MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n != J.n) throw std::invalid_argument("colon_ideal: ambient mismatch");
  if (J.is_zero()) return unit_ideal(I.n);  // (I : 0) = R
  bool first = true;
  MonomialIdeal acc;
  for (const auto& m : J.gens) {
    MonomialIdeal c = colon_mono(I, m);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

inline MonomialIdeal saturation(const MonomialIdeal& I, const MonomialIdeal& J) {
  MonomialIdeal cur = I;
  while (true) {
    MonomialIdeal next = colon_ideal(cur, J);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

inline MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Exponent> out;
  out.reserve(I.gens.size());
  for (const auto& g : I.gens) {
    Exponent s(g.size());
    for (size_t i = 0; i < g.size(); ++i) s[i] = g[i] > 0 ? 1 : 0;
    out.push_back(std::move(s));
  }
  return MonomialIdeal{I.n, minimalize(std::move(out))};
}

inline bool is_symmetric(const MonomialIdeal& I) {
  std::set<Exponent> gset(I.gens.begin(), I.gens.end());
  for (const auto& g : I.gens)
    for (const auto& p : orbit(g))
      if (!gset.count(p)) return false;
  return true;
}

// Strongly stable: closed under trades that move one unit of exponent from a
// variable to any earlier variable.  Checking generators suffices.
inline bool is_strongly_stable(const MonomialIdeal& I) {
  for (const auto& g : I.gens)
    for (int j = 0; j < I.n; ++j) {
      if (g[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        Exponent h = g;
        --h[j];
        ++h[i];
        if (!contains(I, h)) return false;
      }
    }
  return true;
}

// Smallest strongly stable ideal containing the given monomials: BFS over
// single-unit trades toward earlier variables, then minimalize.
inline MonomialIdeal borel_closure(int n, const std::vector<Exponent>& mons) {
  std::set<Exponent> seen(mons.begin(), mons.end());
  std::vector<Exponent> queue(mons.begin(), mons.end());
  while (!queue.empty()) {
    Exponent g = queue.back();
    queue.pop_back();
    for (int j = 0; j < n; ++j) {
      if (g[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        Exponent h = g;
        --h[j];
        ++h[i];
        if (seen.insert(h).second) queue.push_back(h);
      }
    }
  }
  return make_ideal(n, std::vector<Exponent>(seen.begin(), seen.end()));
}

// ---- irreducible decomposition / associated primes ----

// Components are exponent vectors c: the ideal (x_i^{c_i} : c_i > 0).
inline std::vector<Exponent> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("irreducible_decomposition: zero ideal");
  if (I.is_unit()) return {};
  std::set<Exponent> comps;
  std::vector<std::vector<Exponent>> work{I.gens};
  while (!work.empty()) {
    std::vector<Exponent> gens = std::move(work.back());
    work.pop_back();
    gens = minimalize(std::move(gens));
    // find a generator with at least two variables in support
    int split = -1;
    for (size_t k = 0; k < gens.size(); ++k) {
      int supp = 0;
      for (Int v : gens[k])
        if (v > 0) ++supp;
      if (supp >= 2) {
        split = static_cast<int>(k);
        break;
      }
    }
    if (split < 0) {  // all pure powers: an irreducible component
      Exponent c(I.n, 0);
      for (const auto& g : gens)
        for (size_t i = 0; i < g.size(); ++i)
          if (g[i] > 0) c[i] = g[i];
      comps.insert(std::move(c));
      continue;
    }
    const Exponent g = gens[static_cast<size_t>(split)];
    gens.erase(gens.begin() + split);
    int first = -1;
    for (size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0) {
        first = static_cast<int>(i);
        break;
      }
    Exponent pure(I.n, 0), rest = g;
    pure[first] = g[first];
    rest[first] = 0;
    auto left = gens, right = gens;
    left.push_back(std::move(pure));
    right.push_back(std::move(rest));
    work.push_back(std::move(left));
    work.push_back(std::move(right));
  }

  // Irredundancy: drop C whose "corner" (largest monomial outside C) fails to
  // lie in all other components; process drops one at a time.
  std::vector<Exponent> cs(comps.begin(), comps.end());
  Int big = 1;
  for (const auto& c : cs)
    for (Int v : c) big = std::max(big, v + 1);
  auto member = [&](const Exponent& m, const Exponent& c) {
    for (size_t i = 0; i < m.size(); ++i)
      if (c[i] > 0 && m[i] >= c[i]) return true;
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < cs.size(); ++i) {
      Exponent corner(I.n, big);
      for (int k = 0; k < I.n; ++k)
        if (cs[i][k] > 0) corner[k] = cs[i][k] - 1;
      bool witness = true;  // corner in every other component?
      for (size_t j = 0; j < cs.size() && witness; ++j)
        if (j != i && !member(corner, cs[j])) witness = false;
      if (witness) continue;  // corner certifies this component as irredundant
      cs.erase(cs.begin() + static_cast<long>(i));
      changed = true;
      break;
    }
  }
  std::sort(cs.begin(), cs.end());
  return cs;
}

using Prime = std::vector<int>;  // sorted 0-based variable indices

inline std::vector<Prime> associated_primes(const MonomialIdeal& I) {
  std::set<Prime> ps;
  for (const auto& c : irreducible_decomposition(I)) {
    Prime p;
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] > 0) p.push_back(static_cast<int>(i));
    ps.insert(std::move(p));
  }
  return {ps.begin(), ps.end()};
}

inline std::vector<Prime> minimal_primes(const MonomialIdeal& I) {
  auto ass = associated_primes(I);
  std::vector<Prime> out;
  for (const auto& p : ass) {
    bool minimal = true;
    for (const auto& q : ass) {
      if (q == p) continue;
      if (std::includes(p.begin(), p.end(), q.begin(), q.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

inline int height(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) throw std::invalid_argument("height: ideal must be nonzero and proper");
  size_t h = static_cast<size_t>(I.n) + 1;
  for (const auto& p : minimal_primes(I)) h = std::min(h, p.size());
  return static_cast<int>(h);
}

// ---- Hilbert series numerator ----

// K(t) with HS(R/I) = K(t)/(1-t)^n, via the colon recursion
//   K(J + (u)) = K(J) - t^{deg u} K(J : u),
// with support-component splitting and memoization.
inline Poly hilbert_numerator(const MonomialIdeal& I) {
  static std::map<std::vector<Exponent>, Poly> memo;  // gens are canonical (minimal+sorted)

  std::function<Poly(const std::vector<Exponent>&)> go = [&](const std::vector<Exponent>& gens) -> Poly {
    if (gens.empty()) return Poly::constant(1);
    if (gens.size() == 1 && total_of(gens[0]) == 0) return Poly();
    auto it = memo.find(gens);
    if (it != memo.end()) return it->second;

    Poly result;
    // split into support-connected components: K is multiplicative across them
    const size_t m = gens.size();
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (size_t i = 0; i < m; ++i) {
      if (comp[i] >= 0) continue;
      comp[i] = ncomp;
      std::vector<size_t> stack{i};
      while (!stack.empty()) {
        size_t a = stack.back();
        stack.pop_back();
        for (size_t b = 0; b < m; ++b) {
          if (comp[b] >= 0) continue;
          bool meets = false;
          for (size_t v = 0; v < gens[a].size() && !meets; ++v)
            if (gens[a][v] > 0 && gens[b][v] > 0) meets = true;
          if (meets) {
            comp[b] = ncomp;
            stack.push_back(b);
          }
        }
      }
      ++ncomp;
    }
    if (ncomp > 1) {
      result = Poly::constant(1);
      for (int c = 0; c < ncomp; ++c) {
        std::vector<Exponent> sub;
        for (size_t i = 0; i < m; ++i)
          if (comp[i] == c) sub.push_back(gens[i]);
        result = result * go(minimalize(std::move(sub)));
      }
    } else if (m == 1) {
      result = Poly::constant(1) - Poly::monomial(1, static_cast<int>(total_of(gens[0])));
    } else {
      // peel the last generator u: K(J + (u)) = K(J) - t^{|u|} K(J : u)
      std::vector<Exponent> rest(gens.begin(), gens.end() - 1);
      const Exponent& u = gens.back();
      std::vector<Exponent> colon;
      colon.reserve(rest.size());
      for (const auto& g : rest) {
        Exponent q(g.size());
        for (size_t i = 0; i < g.size(); ++i) q[i] = std::max<Int>(g[i] - u[i], 0);
        colon.push_back(std::move(q));
      }
      result = go(minimalize(std::move(rest))) -
               go(minimalize(std::move(colon))).shifted(static_cast<int>(total_of(u)));
    }
    memo.emplace(gens, result);
    return result;
  };
  return go(I.gens);
}

// ---- symbolic powers ----

enum class SymbolicMode { Min, Ass };

// I^(m) as the intersection over the selected prime set of I^m R_P cap R;
// for monomial ideals the localization is the saturation by the product of
// the variables outside P.  Exact (no stable-set horizon needed).
inline MonomialIdeal symbolic_power(const MonomialIdeal& I, int m, SymbolicMode mode) {
  if (m < 1) throw std::invalid_argument("symbolic_power: exponent must be >= 1");
  const auto primes = mode == SymbolicMode::Min ? minimal_primes(I) : associated_primes(I);
  const MonomialIdeal Im = power(I, m);
  bool first = true;
  MonomialIdeal acc;
  for (const auto& p : primes) {
    Exponent outside(I.n, 0);
    std::vector<bool> in(I.n, false);
    for (int v : p) in[v] = true;
    for (int v = 0; v < I.n; ++v)
      if (!in[v]) outside[v] = 1;
    MonomialIdeal part = total_of(outside) == 0
                             ? Im
                             : saturation(Im, MonomialIdeal{I.n, {outside}});
    acc = first ? part : intersect(acc, part);
    first = false;
  }
  if (first) throw std::logic_error("symbolic_power: empty prime set");
  return acc;
}

// The saturation form: I^m : J^infty with J the intersection of the primes in
// Ass*(I) \ keep-set, Ass*(I) approximated by the union of Ass(I^k) up to the
// given horizon.  Reported alongside the horizon so callers can flag it.
struct SymbolicViaStableSet {
  MonomialIdeal ideal;
  int assstar_horizon;
  bool saturated_anything;
};

inline SymbolicViaStableSet symbolic_power_stable_form(const MonomialIdeal& I, int m, SymbolicMode mode,
                                                       int horizon) {
  if (horizon < 1) throw std::invalid_argument("symbolic_power_stable_form: horizon must be >= 1");
  std::set<Prime> star;
  for (int k = 1; k <= horizon; ++k) {
    auto a = associated_primes(power(I, k));
    star.insert(a.begin(), a.end());
  }
  std::set<Prime> keep;
  if (mode == SymbolicMode::Min) {
    auto mp = minimal_primes(I);
    keep.insert(mp.begin(), mp.end());
  } else {
    // down-closure of Ass(I): primes contained in some associated prime
    auto ass = associated_primes(I);
    for (const auto& p : star)
      for (const auto& a : ass)
        if (std::includes(a.begin(), a.end(), p.begin(), p.end())) {
          keep.insert(p);
          break;
        }
  }
  MonomialIdeal Im = power(I, m);
  bool first = true;
  MonomialIdeal J;
  for (const auto& p : star) {
    if (keep.count(p)) continue;
    std::vector<Exponent> vars;
    for (int v : p) {
      Exponent e(I.n, 0);
      e[v] = 1;
      vars.push_back(std::move(e));
    }
    MonomialIdeal P{I.n, minimalize(std::move(vars))};
    J = first ? P : intersect(J, P);
    first = false;
  }
  if (first) return {Im, horizon, false};
  return {saturation(Im, J), horizon, true};
}

// ---- integral closure ----

// x^e lies in the integral closure iff e is in the Newton polyhedron
// conv(gens) + R^n_{>=0}: solved as exact LP feasibility of
//   w >= 0, sum w = 1, sum_g w_g g <= e.
inline bool integral_closure_contains(const MonomialIdeal& I, const Exponent& e) {
  if (static_cast<int>(e.size()) != I.n) throw std::invalid_argument("integral_closure_contains: length");
  if (I.is_zero()) return false;
  if (contains(I, e)) return true;  // cheap positive path
  const int g = static_cast<int>(I.gens.size());
  if (I.n + g > config().lp_cap) throw std::invalid_argument("integral_closure_contains: LP size beyond cap");
  LpFeasibility lp(g);
  for (int coord = 0; coord < I.n; ++coord) {
    std::vector<Rat> row(g);
    for (int j = 0; j < g; ++j) row[j] = I.gens[j][coord];
    lp.add_le(std::move(row), Rat(e[coord]));
  }
  lp.add_eq(std::vector<Rat>(g, Rat(1)), Rat(1));
  return lp.feasible();
}

// Definition-level cross-check: smallest s <= s_max with x^{s e} in I^s,
// found by multiplicity search over generators with componentwise pruning.
inline std::optional<int> closure_witness_search(const MonomialIdeal& I, const Exponent& e, int s_max) {
  if (I.is_zero()) return std::nullopt;
  for (int s = 1; s <= s_max; ++s) {
    Exponent budget(e.size());
    for (size_t i = 0; i < e.size(); ++i) budget[i] = e[i] * s;
    // choose s generators with repetition, componentwise sum <= budget
    std::function<bool(size_t, int, Exponent&)> pick = [&](size_t gi, int left, Exponent& room) -> bool {
      if (left == 0) return true;
      if (gi >= I.gens.size()) return false;
      Int room_total = total_of(room);
      Int min_deg = total_of(I.gens[gi]);
      for (size_t k = gi + 1; k < I.gens.size(); ++k) min_deg = std::min(min_deg, total_of(I.gens[k]));
      if (room_total < static_cast<Int>(left) * min_deg) return false;
      int cap = left;
      for (size_t i = 0; i < room.size(); ++i)
        if (I.gens[gi][i] > 0) cap = std::min<int>(cap, static_cast<int>(room[i] / I.gens[gi][i]));
      for (int take = cap; take >= 0; --take) {
        for (size_t i = 0; i < room.size(); ++i) room[i] -= take * I.gens[gi][i];
        if (pick(gi + 1, left - take, room)) {
          for (size_t i = 0; i < room.size(); ++i) room[i] += take * I.gens[gi][i];
          return true;
        }
        for (size_t i = 0; i < room.size(); ++i) room[i] += take * I.gens[gi][i];
      }
      return false;
    };
    Exponent room = budget;
    if (pick(0, s, room)) return s;
  }
  return std::nullopt;
}

inline void for_each_exponent(int n, Int degree, const std::function<void(const Exponent&)>& fn) {
  Exponent e(n, 0);
  std::function<void(int, Int)> rec = [&](int pos, Int rem) {
    if (pos == n - 1) {
      e[pos] = rem;
      fn(e);
      return;
    }
    for (Int v = 0; v <= rem; ++v) {
      e[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  if (n == 0) return;
  rec(0, degree);
}

struct ClosureScan {
  bool closed;
  std::optional<Exponent> witness;  // in the closure but not in I
};

inline ClosureScan is_integrally_closed_up_to(const MonomialIdeal& I, Int dmax) {
  for (Int d = 0; d <= dmax; ++d) {
    std::optional<Exponent> bad;
    for_each_exponent(I.n, d, [&](const Exponent& e) {
      if (bad) return;
      if (!contains(I, e) && integral_closure_contains(I, e)) bad = e;
    });
    if (bad) return {false, bad};
  }
  return {true, std::nullopt};
}

}  // namespace symshift
