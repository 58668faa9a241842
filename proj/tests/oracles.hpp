// Independent reference computations used to derive and freeze expected
// values. None of these call into the library's algorithms.
#pragma once

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

/// Determinant by cofactor expansion along the first row.
inline Q det(const std::vector<std::vector<Q>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Q total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Q>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Q> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Q sub = det(minor);
    total += (c % 2 ? -1 : 1) * m[0][c] * sub;
  }
  return total;
}

/// Sylvester resultant; coefficients high to low.
inline Q sylvester_resultant(const std::vector<Q>& f, const std::vector<Q>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, s = m + n;
  std::vector<std::vector<Q>> mat(s, std::vector<Q>(s, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) mat[i][i + j] = f[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) mat[n + i][i + j] = g[j];
  return det(mat);
}

inline Z binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// N_d = sum N_a N_b [a^2 b^2 C(3d-4, 3a-2) - a^3 b C(3d-4, 3a-1)].
inline std::vector<Z> kontsevich_binomial(long max_d) {
  std::vector<Z> n(static_cast<std::size_t>(max_d) + 1, 0);
  n[1] = 1;
  for (long d = 2; d <= max_d; ++d) {
    Z s = 0;
    for (long a = 1; a < d; ++a) {
      const long b = d - a;
      s += n[static_cast<std::size_t>(a)] * n[static_cast<std::size_t>(b)] *
           (Z(a * a * b * b) * binom(3 * d - 4, 3 * a - 2) - Z(a * a * a * b) * binom(3 * d - 4, 3 * a - 1));
    }
    n[static_cast<std::size_t>(d)] = s;
  }
  return n;
}

/// Smallest k1 with some (n1, m1) such that (n/3k, m/3k) = (n1/3k1, m1/3k1)
/// modulo 1, by exhaustive search.
inline long brute_force_level(long n, long m, long k) {
  for (long k1 = 1; k1 <= k; ++k1)
    for (long n1 = 0; n1 < 3 * k1; ++n1) {
      if ((n * k1 - n1 * k) % (3 * k * k1) != 0) continue;
      for (long m1 = 0; m1 < 3 * k1; ++m1)
        if ((m * k1 - m1 * k) % (3 * k * k1) == 0) return k1;
    }
  return -1;
}

/// Number of (n, m) in [0, 3k)^2 with gcd(n, m, k) = 1.
inline long gcd_count(long k) {
  long c = 0;
  for (long n = 0; n < 3 * k; ++n)
    for (long m = 0; m < 3 * k; ++m) c += std::gcd(std::gcd(n, m), k) == 1;
  return c;
}

/// Group law on the long Weierstrass curve
/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, origin at infinity.
struct LongCurve {
  Q a1, a2, a3, a4, a6;
};
struct LongPoint {
  bool inf = true;
  Q x, y;
};

inline LongPoint long_add(const LongCurve& e, const LongPoint& p, const LongPoint& q) {
  if (p.inf) return q;
  if (q.inf) return p;
  Q lambda, nu;
  if (p.x == q.x) {
    const Q ny = -q.y - e.a1 * q.x - e.a3;  // y of -q
    if (p.y == ny) return {};
    lambda = (3 * p.x * p.x + 2 * e.a2 * p.x + e.a4 - e.a1 * p.y) / (2 * p.y + e.a1 * p.x + e.a3);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  nu = p.y - lambda * p.x;
  const Q x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  const Q y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return {false, x3, y3};
}

inline int long_order(const LongCurve& e, const LongPoint& p, int bound) {
  LongPoint acc = p;
  for (int n = 1; n <= bound; ++n) {
    if (acc.inf) return n;
    acc = long_add(e, acc, p);
  }
  return -1;
}

/// Dense ternary form as a map from exponents to coefficients, evaluated
/// directly.
using Terms = std::map<std::vector<int>, Q>;

inline Q eval(const Terms& f, const Q& x, const Q& y, const Q& z) {
  Q acc = 0;
  for (const auto& [e, c] : f) {
    Q t = c;
    for (int i = 0; i < e[0]; ++i) t *= x;
    for (int i = 0; i < e[1]; ++i) t *= y;
    for (int i = 0; i < e[2]; ++i) t *= z;
    acc += t;
  }
  return acc;
}

/// Second partial derivative by central differences; exact for
/// polynomials of degree <= 3.
inline Q second_partial(const Terms& f, std::vector<Q> p, int i, int j) {
  auto at = [&](const std::vector<Q>& q) { return eval(f, q[0], q[1], q[2]); };
  const Q h = 1;
  if (i == j) {
    std::vector<Q> a = p, b = p;
    a[static_cast<std::size_t>(i)] += h;
    b[static_cast<std::size_t>(i)] -= h;
    return (at(a) - 2 * at(p) + at(b)) / (h * h);
  }
  std::vector<Q> pp = p, pm = p, mp = p, mm = p;
  pp[static_cast<std::size_t>(i)] += h, pp[static_cast<std::size_t>(j)] += h;
  pm[static_cast<std::size_t>(i)] += h, pm[static_cast<std::size_t>(j)] -= h;
  mp[static_cast<std::size_t>(i)] -= h, mp[static_cast<std::size_t>(j)] += h;
  mm[static_cast<std::size_t>(i)] -= h, mm[static_cast<std::size_t>(j)] -= h;
  return (at(pp) - at(pm) - at(mp) + at(mm)) / (4 * h * h);
}

}  // namespace oracle
