// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ratcurves/error.hpp"
#include "ratcurves/rational.hpp"

namespace ratcurves {

inline Integer factorial(long n) {
  require(n >= 0, ErrorKind::Domain, "factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace detail {

/// Half the recursion sum for N_k given N_1..N_{k-1} (known[i] = N_{i+1}).
inline Integer kontsevich_step(long k, const std::vector<Integer>& known) {
  if (k == 1) return 1;
  const Integer top = factorial(3 * k - 4);
  Rational sum(0);
  for (long k1 = 1; k1 < k; ++k1) {
    const long k2 = k - k1;
    const long p = k1 * k2;
    const Integer weight = Integer(p) * Integer(3 * k * p - 2 * k * k + 6 * p);
    Rational term(weight * top * known[static_cast<std::size_t>(k1 - 1)] * known[static_cast<std::size_t>(k2 - 1)],
                  factorial(3 * k1 - 1) * factorial(3 * k2 - 1));
    term.canonicalize();
    sum += term;
  }
  const Rational half = sum / 2;
  require(is_integer(half), ErrorKind::Internal, "recursion produced a non-integral count");
  return half.get_num();
}

}  // namespace detail

/// Number of rational plane curves of degree k through 3k - 1 general points.
inline Integer compute_nk(long k) {
  require(k >= 1, ErrorKind::Domain, "degree must be positive");
  std::vector<Integer> known;
  for (long i = 1; i <= k; ++i) known.push_back(detail::kontsevich_step(i, known));
  return known.back();
}

struct NkTable {
  enum class CacheStatus { Unused, Loaded, Invalid, Missing };
  std::vector<std::pair<long, Integer>> entries;
  CacheStatus cache = CacheStatus::Unused;

  long max_k() const { return static_cast<long>(entries.size()); }
};

inline const Integer& reference_nk(long k) {
  static const std::vector<Integer> ref{1, 1, 12, 620};
  return ref.at(static_cast<std::size_t>(k - 1));
}

inline nlohmann::json nk_cache_json(const std::vector<std::pair<long, Integer>>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, n] : entries) arr.push_back({k, n.get_str()});
  return {{"version", 1}, {"entries", arr}};
}

/// Parses and validates a cache document. Throws CacheInvalid on any
/// structural problem, version mismatch or disagreement with the reference
/// values for k <= 4.
inline std::vector<std::pair<long, Integer>> parse_nk_cache(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::CacheInvalid, std::string("cache is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || doc["version"] != 1 || !doc.contains("entries") ||
      !doc["entries"].is_array())
    fail(ErrorKind::CacheInvalid, "cache has the wrong version or layout");
  std::vector<std::pair<long, Integer>> out;
  for (const auto& e : doc["entries"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_string())
      fail(ErrorKind::CacheInvalid, "cache entry is malformed");
    const long k = e[0].get<long>();
    if (k != static_cast<long>(out.size()) + 1) fail(ErrorKind::CacheInvalid, "cache entries are not contiguous from 1");
    Integer n;
    if (n.set_str(e[1].get<std::string>(), 10) != 0 || n <= 0)
      fail(ErrorKind::CacheInvalid, "cache value is not a positive integer");
    if (k <= 4 && n != reference_nk(k)) fail(ErrorKind::CacheInvalid, "cache disagrees with the known values");
    out.emplace_back(k, n);
  }
  return out;
}

inline void write_file_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Domain, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) fail(ErrorKind::Domain, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

/// Table N_1..N_max. With a cache path, valid cached entries are reused and
/// the file is rewritten when it was missing, invalid or too short.
inline NkTable nk_table(long max_k, const std::optional<std::filesystem::path>& cache_path = std::nullopt) {
  require(max_k >= 1, ErrorKind::Domain, "max_k must be positive");
  NkTable t;
  std::vector<std::pair<long, Integer>> cached;
  if (cache_path) {
    std::ifstream in(*cache_path, std::ios::binary);
    if (!in) {
      t.cache = NkTable::CacheStatus::Missing;
    } else {
      const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      try {
        cached = parse_nk_cache(text);
        t.cache = NkTable::CacheStatus::Loaded;
      } catch (const Error&) {
        t.cache = NkTable::CacheStatus::Invalid;
      }
    }
  }
  std::vector<Integer> known;
  for (long k = 1; k <= max_k; ++k) {
    if (k <= static_cast<long>(cached.size()))
      known.push_back(cached[static_cast<std::size_t>(k - 1)].second);
    else
      known.push_back(detail::kontsevich_step(k, known));
    t.entries.emplace_back(k, known.back());
  }
  if (cache_path && (t.cache != NkTable::CacheStatus::Loaded || static_cast<long>(cached.size()) < max_k))
    write_file_atomically(*cache_path, nk_cache_json(t.entries).dump());
  return t;
}

}  // namespace ratcurves
