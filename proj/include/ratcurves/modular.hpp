// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ratcurves/elimination.hpp"
#include "ratcurves/form.hpp"
#include "ratcurves/univariate.hpp"

namespace ratcurves {

namespace modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // low to high, trimmed

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline u64 inv(u64 a, u64 p) {
  u64 r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline Poly mod(Poly a, const Poly& b, u64 p) {
  const u64 li = inv(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 q = a.back() * li % p;
    const std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = (a[s + i] + (p - q) * b[i]) % p;
    trim(a);
  }
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly powmod(Poly base, u64 e, const Poly& m, u64 p) {
  Poly r{1};
  base = mod(base, m, p);
  while (e) {
    if (e & 1) r = mod(mul(r, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

inline Poly sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly exact_div(Poly a, const Poly& b, u64 p) {
  const u64 li = inv(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const u64 c = a.back() * li % p;
    const std::size_t s = a.size() - b.size();
    q[s] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = (a[s + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  trim(q);
  return q;
}

/// Reduction of a rational polynomial; empty when a denominator vanishes
/// mod p or the degree drops.
inline std::optional<Poly> reduce(const UPoly& f, u64 p) {
  Poly out;
  const mpz_class pz(static_cast<unsigned long>(p));
  for (const auto& c : f.coeffs()) {
    mpz_class den = c.get_den() % pz;
    if (den == 0) return std::nullopt;
    mpz_class num = c.get_num() % pz;
    if (num < 0) num += pz;
    out.push_back(num.get_ui() * inv(den.get_ui(), p) % p);
  }
  if (out.empty() || out.back() == 0) return std::nullopt;
  return out;
}

/// Degrees of the irreducible factors of a squarefree polynomial over F_p
/// (distinct-degree factorization); empty when f is not squarefree mod p.
inline std::optional<std::vector<int>> factor_degrees(const Poly& f, u64 p) {
  Poly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * (i % p) % p);
  trim(df);
  if (df.empty() || gcd(f, df, p).size() != 1) return std::nullopt;
  std::vector<int> degs;
  Poly rest = f;
  Poly h{0, 1};
  const Poly x{0, 1};
  for (int i = 1; static_cast<int>(rest.size()) - 1 >= 2 * i; ++i) {
    h = powmod(h, p, rest, p);
    Poly g = gcd(rest, sub(h, x, p), p);
    const int gd = static_cast<int>(g.size()) - 1;
    for (int k = 0; k < gd / i; ++k) degs.push_back(i);
    if (gd > 0) {
      rest = exact_div(rest, g, p);
      h = mod(h, rest, p);
    }
  }
  if (rest.size() > 1) degs.push_back(static_cast<int>(rest.size()) - 1);
  return degs;
}

}  // namespace modp

/// Certificate of irreducibility over Q: in a frame where f is monic in X1,
/// every factorization f = g h forces deg g into the subset sums of the
/// factor degrees of each specialization f(a, X1, 1) mod p. An empty
/// intersection of proper subset sums proves irreducibility. Returns false
/// when no certificate was found, which includes every reducible input.
inline bool certify_irreducible(const HomogeneousForm& f) {
  require(!f.is_zero(), ErrorKind::Domain, "zero form");
  const int d = f.degree();
  if (d <= 1) return d == 1;
  HomogeneousForm g;
  for (unsigned attempt = 0;; ++attempt) {
    g = f.substitute(generic_frame(attempt));
    if (g.coeff({0, d, 0}) != 0) break;
  }
  std::set<int> candidates;
  for (int s = 1; s < d; ++s) candidates.insert(s);
  static constexpr modp::u64 primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197};
  for (int a = 1; a <= 12 && !candidates.empty(); ++a) {
    const UPoly slice = restrict_to_projection_line(g, Rational(a), 1);
    for (const auto p : primes) {
      auto red = modp::reduce(slice, p);
      if (!red) continue;
      auto degs = modp::factor_degrees(*red, p);
      if (!degs) continue;
      std::set<int> sums{0};
      for (int e : *degs) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + e);
        sums = std::move(next);
      }
      for (auto it = candidates.begin(); it != candidates.end();)
        it = sums.count(*it) ? std::next(it) : candidates.erase(it);
      if (candidates.empty()) break;
    }
  }
  return candidates.empty();
}

}  // namespace ratcurves
