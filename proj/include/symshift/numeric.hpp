#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symshift {

using Int = long long;  // exponents and partition parts; derived quantities use BigInt
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

// Dense univariate polynomial with BigInt coefficients, coeffs[i] = [t^i].
struct Poly {
  std::vector<BigInt> coeffs;

  Poly() = default;
  explicit Poly(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }
  static Poly constant(BigInt c) { return Poly(std::vector<BigInt>{std::move(c)}); }
  static Poly monomial(BigInt c, int d) {
    std::vector<BigInt> v(d + 1);
    v[d] = std::move(c);
    return Poly(std::move(v));
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return coeffs.empty() ? -1 : static_cast<int>(coeffs.size()) - 1; }
  BigInt coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[i] : BigInt(0);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigInt> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
      for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return Poly(std::move(c));
  }
  bool operator==(const Poly& o) const { return coeffs == o.coeffs; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // multiply by t^d
  Poly shifted(int d) const {
    if (is_zero()) return Poly();
    std::vector<BigInt> c(coeffs.size() + d);
    for (size_t i = 0; i < coeffs.size(); ++i) c[i + d] = coeffs[i];
    return Poly(std::move(c));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i) {
      if (coeffs[i] == 0) continue;
      BigInt c = coeffs[i];
      if (first) {
        if (c < 0) os << "-", c = -c;
      } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      if (i == 0 || c != 1) os << c.str();
      if (i > 0) {
        os << "t";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }
};

// Polynomial with rational coefficients (Ehrhart interpolation).
struct PolyQ {
  std::vector<Rat> coeffs;

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  int degree() const { return coeffs.empty() ? -1 : static_cast<int>(coeffs.size()) - 1; }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[i] : Rat(0);
  }
  Rat eval(const Rat& x) const {
    Rat v = 0;
    for (int i = degree(); i >= 0; --i) v = v * x + coeffs[i];
    return v;
  }
};

// Exact Lagrange interpolation through (xs[i], ys[i]); xs must be distinct.
inline PolyQ interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const size_t m = xs.size();
  std::vector<Rat> acc(m, 0);  // running sum of basis polynomials, dense
  for (size_t i = 0; i < m; ++i) {
    // numerator polynomial prod_{j != i} (t - xs[j]) built incrementally
    std::vector<Rat> num{1};
    Rat denom = 1;
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      denom *= xs[i] - xs[j];
      std::vector<Rat> next(num.size() + 1, 0);
      for (size_t d = 0; d < num.size(); ++d) {
        next[d + 1] += num[d];
        next[d] -= num[d] * xs[j];
      }
      num = std::move(next);
    }
    if (denom == 0) throw std::invalid_argument("interpolate: duplicate nodes");
    const Rat scale = ys[i] / denom;
    for (size_t d = 0; d < num.size(); ++d) acc[d] += num[d] * scale;
  }
  PolyQ p;
  p.coeffs = std::move(acc);
  p.trim();
  return p;
}

}  // namespace symshift
