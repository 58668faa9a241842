#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "ratcurves/kontsevich.hpp"
#include "ratcurves/torsion.hpp"

using namespace ratcurves;
namespace fs = std::filesystem;

namespace {

fs::path temp_cache(const char* name) {
  fs::path p = fs::temp_directory_path() / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Kontsevich, FirstValues) {
  EXPECT_EQ(compute_nk(1), 1);
  EXPECT_EQ(compute_nk(2), 1);
  EXPECT_EQ(compute_nk(3), 12);
  EXPECT_EQ(compute_nk(4), 620);
  EXPECT_THROW(compute_nk(0), Error);
}

TEST(Kontsevich, FrozenHigherValues) {
  // Values from the binomial form of the recursion (oracle below).
  EXPECT_EQ(compute_nk(5), 87304);
  EXPECT_EQ(compute_nk(6), 26312976);
  EXPECT_EQ(compute_nk(7), Integer("14616808192"));
  EXPECT_EQ(compute_nk(8), Integer("13525751027392"));
  EXPECT_EQ(compute_nk(12), Integer("482113680618029292368686080"));
}

TEST(Kontsevich, AgreesWithBinomialFormThroughTwelve) {
  const auto expected = oracle::kontsevich_binomial(12);
  const NkTable t = nk_table(12);
  ASSERT_EQ(t.max_k(), 12);
  for (const auto& [k, n] : t.entries) EXPECT_EQ(n, expected[static_cast<std::size_t>(k)]) << "k = " << k;
}

TEST(Kontsevich, FactorialGuards) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_THROW(factorial(-1), Error);
}

TEST(NkCache, RoundTripAndReuse) {
  const fs::path p = temp_cache("ratcurves-test-cache-rt.json");
  const NkTable first = nk_table(6, p);
  EXPECT_EQ(first.cache, NkTable::CacheStatus::Missing);
  ASSERT_TRUE(fs::exists(p));
  EXPECT_FALSE(fs::exists(fs::path(p.string() + ".tmp")));
  const NkTable second = nk_table(6, p);
  EXPECT_EQ(second.cache, NkTable::CacheStatus::Loaded);
  EXPECT_EQ(first.entries, second.entries);
  EXPECT_EQ(parse_nk_cache(slurp(p)), first.entries);
  fs::remove(p);
}

TEST(NkCache, ExtendsShortCache) {
  const fs::path p = temp_cache("ratcurves-test-cache-ext.json");
  nk_table(3, p);
  const NkTable t = nk_table(7, p);
  EXPECT_EQ(t.cache, NkTable::CacheStatus::Loaded);
  EXPECT_EQ(parse_nk_cache(slurp(p)).size(), 7u);
  EXPECT_EQ(t.entries.back().second, Integer("14616808192"));
  fs::remove(p);
}

TEST(NkCache, CorruptCacheIsRecomputed) {
  const fs::path p = temp_cache("ratcurves-test-cache-bad.json");
  for (const std::string& bad :
       {std::string("not json"), std::string(R"({"version":2,"entries":[]})"),
        std::string(R"({"version":1,"entries":[[1,"1"],[2,"1"],[3,"13"]]})"),
        std::string(R"({"version":1,"entries":[[1,"1"],[3,"12"]]})")}) {
    {
      std::ofstream out(p);
      out << bad;
    }
    const NkTable t = nk_table(4, p);
    EXPECT_EQ(t.cache, NkTable::CacheStatus::Invalid) << bad;
    EXPECT_EQ(t.entries.back().second, 620);
    EXPECT_NO_THROW(parse_nk_cache(slurp(p)));
  }
  fs::remove(p);
}

TEST(NkCache, RejectsDisagreementWithKnownValues) {
  EXPECT_THROW(parse_nk_cache(R"({"version":1,"entries":[[1,"1"],[2,"2"]]})"), Error);
  EXPECT_THROW(parse_nk_cache(R"({"version":1,"entries":[[1,"-1"]]})"), Error);
  EXPECT_EQ(parse_nk_cache(R"({"version":1,"entries":[]})").size(), 0u);
}

TEST(Torsion, ContactCounts) {
  EXPECT_EQ(contact_count(1), 9);
  EXPECT_EQ(contact_count(2), 36);
  for (long k = 1; k <= 20; ++k) {
    EXPECT_EQ(contact_count(k), 9 * k * k);
    EXPECT_EQ(static_cast<long>(enumerate_contact_classes(k).size()), contact_count(k));
  }
  EXPECT_THROW(contact_count(0), Error);
}

TEST(Torsion, PrimitiveCounts) {
  EXPECT_EQ(primitive_contact_count(1), 9);
  EXPECT_EQ(primitive_contact_count(2), 27);
  EXPECT_EQ(primitive_contact_count(3), 72);
  for (long k = 1; k <= 50; ++k) EXPECT_EQ(primitive_contact_count(k), oracle::gcd_count(k)) << "k = " << k;
}

TEST(Torsion, PartitionIdentity) {
  for (long k = 1; k <= 60; ++k) {
    long sum = 0;
    for (long d = 1; d <= k; ++d)
      if (k % d == 0) sum += primitive_contact_count(d);
    EXPECT_EQ(sum, 9 * k * k);
  }
}

TEST(Torsion, MinimalLevelMatchesBruteForce) {
  for (long k = 1; k <= 12; ++k)
    for (const auto& [c, lvl] : enumerate_contact_classes(k)) {
      EXPECT_EQ(lvl, oracle::brute_force_level(c.n, c.m, c.k));
      EXPECT_TRUE(holds_at_level(c, lvl));
      EXPECT_EQ(k % lvl, 0);
    }
}

TEST(Torsion, HistogramMatchesPrimitiveCounts) {
  for (long k : {1L, 6L, 12L, 30L}) {
    const auto hist = level_histogram(k);
    for (const auto& [d, c] : hist) EXPECT_EQ(c, primitive_contact_count(d));
  }
}

TEST(Torsion, EnumerationGuard) {
  try {
    enumerate_contact_classes(1001);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Guard);
  }
  EXPECT_THROW(TorsionClass(3, 0, 1), Error);
}

TEST(Torsion, MobiusValues) {
  const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(mobius(n), expected[n - 1]);
}

TEST(Torsion, LevelOfPointOrder) {
  EXPECT_EQ(level_of_point_order(9), 3);
  EXPECT_EQ(level_of_point_order(6), 2);
  EXPECT_EQ(level_of_point_order(3), 1);
  EXPECT_EQ(level_of_point_order(2), 2);
  EXPECT_EQ(level_of_point_order(1), 1);
}
