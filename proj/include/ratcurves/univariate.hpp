// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratcurves/error.hpp"
#include "ratcurves/rational.hpp"

namespace ratcurves {

/// Dense univariate polynomial over Q. coeffs()[i] multiplies x^i and the
/// leading stored coefficient is nonzero (the zero polynomial stores nothing).
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<Rational> low_to_high) : c_(low_to_high) { trim(); }
  explicit UPoly(std::vector<Rational> low_to_high) : c_(std::move(low_to_high)) { trim(); }

  static UPoly constant(const Rational& a) { return UPoly(std::vector<Rational>{a}); }
  static UPoly x() { return UPoly{0, 1}; }
  static UPoly monomial(const Rational& a, int exponent) {
    std::vector<Rational> c(static_cast<std::size_t>(exponent) + 1);
    c.back() = a;
    return UPoly(std::move(c));
  }
  /// Product of (x - r) over the given roots.
  static UPoly from_roots(std::span<const Rational> roots) {
    UPoly p = constant(1);
    for (const auto& r : roots) p = p * UPoly{-r, 1};
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Rational(0);
  }
  Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return {};
    const Rational inv = 1 / lc();
    return *this * inv;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const UPoly& a, const Rational& s) {
    if (s == 0) return {};
    UPoly r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend UPoly operator*(const Rational& s, const UPoly& a) { return a * s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const char* var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      if (!out.empty()) out += a < 0 ? " - " : " + ";
      else if (a < 0) out += "-";
      const Rational mag = abs(a);
      if (mag != 1 || i == 0) out += mag.get_str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  require(!b.is_zero(), ErrorKind::Domain, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv = 1 / b.lc();
  const auto& bc = b.coeffs();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Rational t = r[static_cast<std::size_t>(i + b.degree())] * inv;
    q[static_cast<std::size_t>(i)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r[static_cast<std::size_t>(i + j)] -= t * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(b.degree()));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

inline UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
inline UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Sylvester resultant via the Euclidean remainder sequence over Q.
inline Rational resultant(const UPoly& f, const UPoly& g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::UndefinedResultant, "resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return 0;
  Rational scale(1);
  UPoly a = f, b = g;
  for (;;) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return scale * pow(b.lc(), static_cast<unsigned long>(m));
    if (m == 0) return scale * pow(a.lc(), static_cast<unsigned long>(n));
    UPoly r = a % b;
    if (r.is_zero()) return 0;
    const int p = r.degree();
    if ((m * n) % 2 == 1) scale = -scale;
    scale *= pow(b.lc(), static_cast<unsigned long>(m - p));
    a = std::move(b);
    b = std::move(r);
  }
}

/// Resultant where g is regarded as having formal degree n >= deg g; f must
/// carry its true degree. Equals lc(f)^(n - deg g) * res(f, g).
inline Rational resultant_formal(const UPoly& f, const UPoly& g, int n) {
  if (g.is_zero()) return 0;
  return pow(f.lc(), static_cast<unsigned long>(n - g.degree())) * resultant(f, g);
}

inline Rational discriminant(const UPoly& f) {
  const int d = f.degree();
  require(d >= 1, ErrorKind::Degree, "discriminant needs a non-constant polynomial");
  Rational r = resultant(f, f.derivative()) / f.lc();
  if ((d * (d - 1) / 2) % 2 == 1) r = -r;
  return r;
}

inline UPoly squarefree_part(const UPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "squarefree part of the zero polynomial");
  if (f.degree() == 0) return UPoly::constant(1);
  return (f / gcd(f, f.derivative())).monic();
}

/// Number of distinct complex roots.
inline int distinct_root_count(const UPoly& f) { return squarefree_part(f).degree(); }

struct SquarefreeFactor {
  UPoly factor;  // monic, squarefree, non-constant
  int multiplicity;
};

/// Yun's algorithm: f = lc * prod factor_i^i.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const UPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  const UPoly fp = f.derivative();
  const UPoly a0 = gcd(f, fp);
  UPoly b = f / a0;
  UPoly c = fp / a0;
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.push_back({a.monic(), i});
  }
  return out;
}

namespace detail {

// Integer-coefficient primitive multiple of p (positive leading coefficient).
inline std::vector<Integer> primitive_integer_coeffs(const UPoly& p) {
  Integer den = 1;
  for (const auto& a : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Integer> z;
  z.reserve(p.coeffs().size());
  Integer g = 0;
  for (const auto& a : p.coeffs()) {
    Integer v = a.get_num() * (den / a.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (g != 0)
    for (auto& v : z) v /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& v : z) v = -v;
  return z;
}

inline std::uint64_t eval_mod(const std::vector<std::uint64_t>& c, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % p;
  return acc;
}

inline bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Integer eval_integer(const std::vector<Integer>& z, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (std::size_t i = z.size(); i-- > 0;) {
    acc = acc * x + z[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

/// a/b with |a| <= n, 0 < b <= d and a = b r mod m, when one exists.
inline std::optional<Rational> reconstruct(const Integer& r, const Integer& m, const Integer& n, const Integer& d) {
  Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > n) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > d) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

}  // namespace detail

/// Rational roots of f, ascending, each with its multiplicity. A root a/b of
/// the primitive squarefree part has a | c0 and b | lead, so every one is
/// the Hensel lift of a simple root modulo a prime not dividing lead,
/// recovered by rational reconstruction once the modulus exceeds
/// 2 |c0 lead|.
inline std::vector<std::pair<Rational, int>> rational_roots(const UPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  if (f.degree() <= 0) return out;
  auto z = detail::primitive_integer_coeffs(squarefree_part(f));
  std::vector<Rational> candidates;
  if (z.front() == 0) {
    candidates.emplace_back(0);
    z.erase(z.begin());
  }
  if (z.size() >= 2) {
    const Integer lead = abs(z.back()), c0 = abs(z.front());
    std::vector<Integer> dz;
    for (std::size_t i = 1; i < z.size(); ++i) dz.push_back(z[i] * static_cast<unsigned long>(i));
    const Integer bound = 2 * c0 * lead;
    for (std::uint64_t p = 1009;; p += 2) {
      if (!detail::is_small_prime(p) || mpz_divisible_ui_p(lead.get_mpz_t(), p)) continue;
      std::vector<std::uint64_t> zp, dzp;
      for (const auto& c : z) zp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
      for (const auto& c : dz) dzp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
      std::vector<std::uint64_t> roots;
      bool simple = true;
      for (std::uint64_t x = 0; x < p && simple; ++x)
        if (detail::eval_mod(zp, x, p) == 0) {
          roots.push_back(x);
          simple = detail::eval_mod(dzp, x, p) != 0;
        }
      if (!simple) continue;
      for (const std::uint64_t r0 : roots) {
        Integer r = r0, m = p;
        while (m <= bound) {
          const Integer m2 = m * m;
          Integer inv;
          const Integer dv = detail::eval_integer(dz, r, m2);
          mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t());
          r = r - detail::eval_integer(z, r, m2) * inv;
          mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m2.get_mpz_t());
          m = m2;
        }
        const auto cand = detail::reconstruct(r, m, c0, lead);
        if (!cand) continue;
        Rational v = 0;
        for (std::size_t i = z.size(); i-- > 0;) v = v * *cand + z[i];
        if (v == 0) candidates.push_back(*cand);
      }
      break;
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& r : candidates) {
    int mult = 0;
    UPoly q = f;
    const UPoly lin{-r, 1};
    for (;;) {
      auto [quo, rem] = divmod(q, lin);
      if (!rem.is_zero()) break;
      ++mult;
      q = std::move(quo);
    }
    out.emplace_back(r, mult);
  }
  return out;
}

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
inline UPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  require(xs.size() == ys.size() && !xs.empty(), ErrorKind::Domain, "interpolation needs matching nonempty samples");
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  UPoly result = UPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) result = result * UPoly{-xs[i], 1} + UPoly::constant(dd[i]);
  return result;
}

/// A binary form of declared degree n stored dehomogenized as p(t) = F(t, 1);
/// the root at infinity (1:0) has multiplicity n - deg p.
struct BinaryForm {
  UPoly affine;
  int degree = 0;

  bool is_zero() const { return affine.is_zero(); }
  int multiplicity_at_infinity() const { return is_zero() ? degree : degree - affine.degree(); }
  int distinct_root_count() const {
    return ratcurves::distinct_root_count(affine) + (multiplicity_at_infinity() > 0 ? 1 : 0);
  }
};

}  // namespace ratcurves
