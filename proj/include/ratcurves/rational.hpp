// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "ratcurves/error.hpp"

namespace ratcurves {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a", "a/b" into a canonical rational. Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    fail(ErrorKind::MalformedInput, "not a rational literal: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer a(n, 10), b(std::string(den), 10);
  if (b == 0) fail(ErrorKind::MalformedInput, "zero denominator in '" + std::string(text) + "'");
  Rational r(a, b);
  r.canonicalize();
  return r;
}

/// "num/den" in lowest terms; integers keep the "/1" so the format is uniform.
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_decimal_string(const Integer& z) { return z.get_str(); }

inline Rational pow(const Rational& base, unsigned long exponent) {
  Rational result(1);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace ratcurves
