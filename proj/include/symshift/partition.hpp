#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "symshift/config.hpp"
#include "symshift/numeric.hpp"

namespace symshift {

using Exponent = std::vector<Int>;   // arbitrary exponent vector, length n
using Partition = std::vector<Int>;  // nondecreasing: 0 <= p[0] <= ... <= p[n-1]

inline Int total_of(const Exponent& a) { return std::accumulate(a.begin(), a.end(), Int(0)); }

inline bool is_nondecreasing(const Exponent& a) {
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i - 1] > a[i]) return false;
  return true;
}

// First index (0-based) violating 0 <= a[0] <= a[1] <= ..., or nullopt.
inline std::optional<size_t> partition_violation(const Exponent& a) {
  if (!a.empty() && a[0] < 0) return size_t{0};
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i - 1] > a[i]) return i;
  return std::nullopt;
}

inline void require_partition(const Exponent& a, const std::string& label) {
  if (auto i = partition_violation(a)) {
    std::ostringstream os;
    os << label << " is not a partition: entry at index " << *i;
    if (*i == 0)
      os << " is negative (" << a[0] << ")";
    else
      os << " (" << a[*i] << ") is smaller than entry at index " << *i - 1 << " (" << a[*i - 1] << ")";
    throw std::invalid_argument(os.str());
  }
}

inline Partition part_of(const Exponent& e) {
  for (Int v : e)
    if (v < 0) throw std::invalid_argument("part_of: negative exponent");
  Partition p = e;
  std::sort(p.begin(), p.end());
  return p;
}

inline bool cw_leq(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cw_leq: length mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent vec_max(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_max: length mismatch");
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exponent vec_add(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Sigma_k(a) = a_k + ... + a_n (1-based k); returned as s[k-1].
inline std::vector<Int> suffix_sums(const Exponent& a) {
  std::vector<Int> s(a.size());
  Int acc = 0;
  for (size_t i = a.size(); i-- > 0;) {
    acc += a[i];
    s[i] = acc;
  }
  return s;
}

// p[j] = a_1 + ... + a_{j+1}.
inline std::vector<Int> prefix_sums(const Exponent& a) {
  std::vector<Int> p(a.size());
  Int acc = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    acc += a[i];
    p[i] = acc;
  }
  return p;
}

// Dominance order: mu <=_dom lam iff every suffix sum of mu is bounded by the
// corresponding suffix sum of lam.  Within a fixed degree this is the usual
// dominance (and equals Borel-move reachability); the raw comparison is also
// meaningful across degrees and is what the hat-vector lattice uses.
inline bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size()) throw std::invalid_argument("dominance_leq: length mismatch");
  Int smu = 0, slam = 0;
  for (size_t i = mu.size(); i-- > 0;) {
    smu += mu[i];
    slam += lam[i];
    if (smu > slam) return false;
  }
  return true;
}

// hat(lam)[k-1] = sum of the k largest parts.  Nondecreasing and concave;
// dominance is the componentwise order on hat vectors.
inline std::vector<Int> hat(const Partition& lam) {
  std::vector<Int> h(lam.size());
  Int acc = 0;
  for (size_t k = 0; k < lam.size(); ++k) {
    acc += lam[lam.size() - 1 - k];
    h[k] = acc;
  }
  return h;
}

inline Partition from_hat(const std::vector<Int>& h) {
  const size_t n = h.size();
  Partition p(n);
  for (size_t k = 0; k < n; ++k) {
    Int part = h[k] - (k ? h[k - 1] : 0);
    p[n - 1 - k] = part;
  }
  if (partition_violation(p)) throw std::invalid_argument("from_hat: input is not concave nondecreasing");
  return p;
}

// Greatest lower bound under dominance: componentwise min of hat vectors
// (min of concave sequences stays concave, so the pullback is a partition).
inline Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("meet: length mismatch");
  std::vector<Int> ha = hat(a), hb = hat(b), m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::min(ha[i], hb[i]);
  return from_hat(m);
}

// Conjugate partition: transpose(lam)[i-1] = #{ j : lam_j >= lam_max - i + 1 }
// for i = 1..lam_max.  Empty for the zero partition.
inline Partition transpose(const Partition& lam) {
  require_partition(lam, "transpose argument");
  if (lam.empty() || lam.back() == 0) return {};
  const Int top = lam.back();
  Partition t(static_cast<size_t>(top));
  for (Int i = 1; i <= top; ++i) {
    Int threshold = top - i + 1;
    Int count = 0;
    for (Int v : lam)
      if (v >= threshold) ++count;
    t[static_cast<size_t>(i - 1)] = count;
  }
  return t;
}

namespace detail {
inline Partition pad_front(const Partition& p, size_t len) {
  if (p.size() >= len) return p;
  Partition q(len - p.size(), 0);
  q.insert(q.end(), p.begin(), p.end());
  return q;
}
}  // namespace detail

// Least upper bound under dominance (for equal degrees): join = (a^T meet b^T)^T,
// transposes zero-padded to a common length.  Result re-embedded in length n.
inline Partition join(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("join: length mismatch");
  const size_t n = a.size();
  Partition ta = transpose(a), tb = transpose(b);
  const size_t len = std::max(ta.size(), tb.size());
  if (len == 0) return Partition(n, 0);
  ta = detail::pad_front(ta, len);
  tb = detail::pad_front(tb, len);
  Partition back = transpose(meet(ta, tb));
  if (back.size() > n) throw std::invalid_argument("join: result does not fit in n parts");
  return detail::pad_front(back, n);
}

// Completion of the componentwise max of prefix-sum vectors.  This is the
// pairwise combiner for intersecting principal pieces: membership in a
// principal piece is a prefix-sum domination test, so intersecting two of
// them ANDs the tests.  Coincides with meet when |a| == |b|.
inline Partition prefix_max_combine(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("prefix_max_combine: length mismatch");
  std::vector<Int> pa = prefix_sums(a), pb = prefix_sums(b);
  Partition r(a.size());
  Int prev = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    Int cur = std::max(pa[i], pb[i]);
    r[i] = cur - prev;
    prev = cur;
  }
  if (partition_violation(r)) throw std::invalid_argument("prefix_max_combine: max lost convexity");
  return r;
}

// Forward difference operator; length drops by one.
inline std::vector<Int> delta(const std::vector<Int>& a) {
  if (a.empty()) throw std::invalid_argument("delta: empty input");
  std::vector<Int> d(a.size() - 1);
  for (size_t i = 0; i + 1 < a.size(); ++i) d[i] = a[i + 1] - a[i];
  return d;
}

inline std::vector<Int> delta_power(std::vector<Int> a, int i) {
  if (i < 0 || static_cast<size_t>(i) >= a.size())
    throw std::invalid_argument("delta_power: order out of range");
  for (int k = 0; k < i; ++k) a = delta(a);
  return a;
}

// 1-based index of the first positive part ("min" of the partition = height
// contribution).  Requires a nonzero partition.
inline int min_index(const Partition& lam) {
  for (size_t i = 0; i < lam.size(); ++i)
    if (lam[i] > 0) return static_cast<int>(i) + 1;
  throw std::invalid_argument("min_index: zero partition");
}

// med(lam) = #{ i : lam_i < lam_n }.
inline int med(const Partition& lam) {
  if (lam.empty()) throw std::invalid_argument("med: empty partition");
  int c = 0;
  for (Int v : lam)
    if (v < lam.back()) ++c;
  return c;
}

inline bool is_constant(const Partition& lam) {
  return std::all_of(lam.begin(), lam.end(), [&](Int v) { return v == lam.front(); });
}

struct PartitionStats {
  Int degree;
  int min_index;  // 0 when the partition is zero
  int med;
  bool constant;
};

inline PartitionStats stats(const Partition& lam) {
  require_partition(lam, "stats argument");
  PartitionStats s;
  s.degree = total_of(lam);
  s.min_index = (s.degree == 0) ? 0 : min_index(lam);
  s.med = med(lam);
  s.constant = is_constant(lam);
  return s;
}

// All partitions mu in P_n with |mu| = |lam| and mu dominated by lam,
// enumerated largest-part-first with suffix-sum pruning.  Throws
// BudgetExceeded past `budget` emissions (default from config()).
inline std::vector<Partition> enumerate_dominated(const Partition& lam, long long budget = -1) {
  require_partition(lam, "enumerate_dominated argument");
  if (budget < 0) budget = config().enumeration_budget;
  const size_t n = lam.size();
  const Int deg = total_of(lam);
  const std::vector<Int> slam = suffix_sums(lam);
  std::vector<Partition> out;
  Partition cur(n);
  long long emitted = 0;

  // place parts at positions n-1 down to 0; cap = part just placed above
  auto rec = [&](auto&& self, size_t pos, Int placed, Int cap) -> void {
    const Int rem = deg - placed;
    if (pos == 0) {
      if (rem <= cap) {  // Sigma_1(mu) == deg == Sigma_1(lam) holds automatically
        cur[0] = rem;
        if (++emitted > budget) throw BudgetExceeded("enumerate_dominated: budget exceeded");
        out.push_back(cur);
      }
      return;
    }
    // mu_{pos+1..n} already placed; choose cur[pos] = v
    const Int smax = slam[pos] - placed;                     // suffix constraint at this position
    Int lo = (rem + static_cast<Int>(pos)) / (static_cast<Int>(pos) + 1);  // ceil(rem/(pos+1)): parts below are <= v
    Int hi = std::min<Int>(cap, std::min<Int>(smax, rem));
    for (Int v = hi; v >= lo; --v) {
      cur[pos] = v;
      self(self, pos - 1, placed + v, v);
    }
  };
  if (n == 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  rec(rec, n - 1, 0, std::numeric_limits<Int>::max());
  std::sort(out.begin(), out.end());
  return out;
}

// Distinct permutations of e, in lexicographic order.
inline std::vector<Exponent> orbit(const Exponent& e) {
  Exponent v = e;
  std::sort(v.begin(), v.end());
  std::vector<Exponent> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline BigInt orbit_size(const Exponent& e) {
  Exponent v = e;
  std::sort(v.begin(), v.end());
  BigInt r = factorial(static_cast<int>(v.size()));
  size_t i = 0;
  while (i < v.size()) {
    size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    r /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

inline std::string to_string(const Exponent& e) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) os << ",";
    os << e[i];
  }
  os << ")";
  return os.str();
}

}  // namespace symshift
