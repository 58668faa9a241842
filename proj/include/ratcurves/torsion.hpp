// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "ratcurves/error.hpp"

namespace ratcurves {

/// Contact-point class at level k: offset + (n / 3k) l1 + (m / 3k) l2 in the
/// period lattice of the cubic. The common offset is never represented.
struct TorsionClass {
  long n = 0, m = 0, k = 1;

  TorsionClass() = default;
  TorsionClass(long n_, long m_, long k_) : n(n_), m(m_), k(k_) {
    require(k >= 1, ErrorKind::Domain, "level must be positive");
    require(n >= 0 && n < 3 * k && m >= 0 && m < 3 * k, ErrorKind::Domain, "class coordinates must lie in [0, 3k)");
  }
  friend bool operator==(const TorsionClass&, const TorsionClass&) = default;
};

inline long contact_count(long k) {
  require(k >= 1, ErrorKind::Domain, "level must be positive");
  return 9 * k * k;
}

/// True iff the class is also a class at level k1, i.e. (n/3k, m/3k) lies in
/// the (1/3k1)-lattice.
inline bool holds_at_level(const TorsionClass& c, long k1) {
  require(k1 >= 1, ErrorKind::Domain, "level must be positive");
  return (c.n * k1) % c.k == 0 && (c.m * k1) % c.k == 0;
}

inline long minimal_level(const TorsionClass& c) { return c.k / std::gcd(std::gcd(c.n, c.m), c.k); }

inline int mobius(long n) {
  require(n >= 1, ErrorKind::Domain, "mobius of a non-positive integer");
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

inline long primitive_contact_count(long k) {
  require(k >= 1, ErrorKind::Domain, "level must be positive");
  long total = 0;
  for (long d = 1; d <= k; ++d)
    if (k % d == 0) total += mobius(d) * 9 * (k / d) * (k / d);
  return total;
}

inline constexpr long kMaxEnumerationLevel = 1000;

inline std::vector<std::pair<TorsionClass, long>> enumerate_contact_classes(long k) {
  require(k >= 1, ErrorKind::Domain, "level must be positive");
  require(k <= kMaxEnumerationLevel, ErrorKind::Guard, "enumeration level above 1000");
  std::vector<std::pair<TorsionClass, long>> out;
  out.reserve(static_cast<std::size_t>(9 * k * k));
  for (long n = 0; n < 3 * k; ++n)
    for (long m = 0; m < 3 * k; ++m) {
      TorsionClass c(n, m, k);
      out.emplace_back(c, minimal_level(c));
    }
  return out;
}

/// Number of classes per minimal level, without materializing the list.
inline std::map<long, long> level_histogram(long k) {
  require(k >= 1, ErrorKind::Domain, "level must be positive");
  require(k <= kMaxEnumerationLevel, ErrorKind::Guard, "enumeration level above 1000");
  std::map<long, long> hist;
  for (long n = 0; n < 3 * k; ++n)
    for (long m = 0; m < 3 * k; ++m) ++hist[minimal_level(TorsionClass(n, m, k))];
  return hist;
}

/// Level of a point of exact order n in the group with a flex as origin.
inline long level_of_point_order(long order) {
  require(order >= 1, ErrorKind::Domain, "order must be positive");
  return order / std::gcd(order, 3L);
}

}  // namespace ratcurves
