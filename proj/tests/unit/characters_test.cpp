#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "jmwg/characters.hpp"
#include "jmwg/group_algebra.hpp"
#include "support/oracles.hpp"

namespace jmwg {
namespace {

CentralElement random_element(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  CentralElement f(n);
  for (std::size_t k = 0; k < f.classes().size(); ++k) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    f.set(k, c);
  }
  return f;
}

TEST(MnCharacter, TrivialCharacterIsOne) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : partitions_of(n)) EXPECT_EQ(mn_character(Partition::row(n), mu), 1);
  }
}

TEST(MnCharacter, SignCharacter) {
  EXPECT_EQ(mn_character(Partition({1, 1, 1}), Partition({2, 1})), -1);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : partitions_of(n)) {
      EXPECT_EQ(mn_character(Partition::column(n), mu), sign_power(n - mu.length()));
    }
  }
}

TEST(MnCharacter, DegreeOfStandardRepresentation) {
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({1, 1, 1})), 2);
}

TEST(MnCharacter, WeightMismatchThrows) {
  EXPECT_THROW(mn_character(Partition({2, 1}), Partition({2})), std::invalid_argument);
}

TEST(CharacterTable, SmallTables) {
  const auto& t1 = character_table(1);
  EXPECT_EQ(t1.size(), 1u);
  EXPECT_EQ(t1(0, 0), 1);

  const auto& t2 = character_table(2);
  // rows (2), (1,1); columns (2), (1,1)
  EXPECT_EQ(t2(0, 0), 1);
  EXPECT_EQ(t2(0, 1), 1);
  EXPECT_EQ(t2(1, 0), -1);
  EXPECT_EQ(t2(1, 1), 1);

  const auto& t4 = character_table(4);
  for (auto v : t4.row(0)) EXPECT_EQ(v, 1);
  EXPECT_THROW(character_table(0), std::invalid_argument);
}

TEST(CharacterTable, S4AgainstKnownValues) {
  const auto& t = character_table(4);
  // chi^{(3,1)} on (4),(3,1),(2,2),(2,1,1),(1^4)
  const std::vector<std::int64_t> standard{-1, 0, -1, 1, 3};
  const std::vector<std::int64_t> two_two{0, -1, 2, 0, 2};
  EXPECT_EQ(std::vector<std::int64_t>(t.row(1).begin(), t.row(1).end()), standard);
  EXPECT_EQ(std::vector<std::int64_t>(t.row(2).begin(), t.row(2).end()), two_two);
}

TEST(CharacterTable, OrthogonalityAndDegreesUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    const auto& t = character_table(n);
    EXPECT_TRUE(t.verify_orthogonality()) << n;
    for (std::size_t lambda = 0; lambda < t.size(); ++lambda) {
      EXPECT_EQ(Integer(static_cast<long>(t(lambda, t.size() - 1))),
                factorial(n) / hook_product(t.partitions()[lambda]));
    }
  }
}

TEST(CharacterTable, ReturnsTheSameCachedInstance) {
  EXPECT_EQ(&character_table(5), &character_table(5));
}

TEST(ClassSize, MatchesBruteForceCounts) {
  EXPECT_EQ(class_size(Partition({1, 1, 1})), 1);
  EXPECT_EQ(class_size(Partition({2, 1})), 3);
  EXPECT_EQ(class_size(Partition({4})), 6);
  for (int n = 1; n <= 6; ++n) {
    Integer total = 0;
    for (const auto& mu : partitions_of(n)) {
      const std::vector<int> parts(mu.parts().begin(), mu.parts().end());
      EXPECT_EQ(class_size(mu), testing::count_class(n, parts)) << mu.to_string();
      total += class_size(mu);
    }
    EXPECT_EQ(total, factorial(n));
  }
}

TEST(Transforms, IdentityHasDimensionCharacterExpansion) {
  for (int n = 1; n <= 6; ++n) {
    const auto chars = class_to_char(CentralElement::identity(n));
    const auto& ps = partitions_of(n);
    for (std::size_t k = 0; k < ps.size(); ++k) {
      EXPECT_EQ(chars.values[k], Rational(dimension(ps[k])) / Rational(factorial(n)));
    }
    CharacterExpansion f(n);
    for (std::size_t k = 0; k < ps.size(); ++k) f.values[k] = Rational(dimension(ps[k])) / Rational(factorial(n));
    EXPECT_EQ(char_to_class(f), CentralElement::identity(n));
  }
}

TEST(Transforms, TrivialCharacterIsAllOnes) {
  CharacterExpansion f(5);
  f[Partition::row(5)] = 1;
  const auto g = char_to_class(f);
  for (const auto& c : g.coefficients()) EXPECT_EQ(c, 1);
}

TEST(Transforms, TwoByTwoExamples) {
  CharacterExpansion f(2);
  f[Partition({2})] = Rational(1, 2);
  f[Partition({1, 1})] = Rational(-1, 2);
  const auto g = char_to_class(f);
  EXPECT_EQ(g[Partition({1, 1})], 0);
  EXPECT_EQ(g[Partition({2})], 1);

  const auto back = class_to_char(CentralElement::class_sum(Partition({2})));
  EXPECT_EQ(back[Partition({2})], Rational(1, 2));
  EXPECT_EQ(back[Partition({1, 1})], Rational(-1, 2));

  const auto zero = class_to_char(CentralElement::zero(3));
  for (const auto& v : zero.values) EXPECT_EQ(v, 0);
}

TEST(Transforms, RoundTripIsExactOnRandomRationals) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_element(n, rng);
      EXPECT_EQ(char_to_class(class_to_char(f)), f);
      const CharacterExpansion chars = class_to_char(f);
      EXPECT_EQ(class_to_char(char_to_class(chars)), chars);
    }
  }
}

TEST(MultiplyCentral, Examples) {
  const auto t2 = CentralElement::class_sum(Partition({2}));
  EXPECT_EQ(multiply_central(t2, t2), CentralElement::identity(2));

  const auto t3 = CentralElement::class_sum(Partition({2, 1}));
  CentralElement expected(3);
  expected.set(Partition({1, 1, 1}), 3);
  expected.set(Partition({3}), 3);
  EXPECT_EQ(multiply_central(t3, t3), expected);

  // Frozen against the brute-force composition over S(3).
  const auto brute = testing::brute_class_product(3, {2, 1}, {2, 1});
  EXPECT_EQ(brute.at({1, 1, 1}), 3);
  EXPECT_EQ(brute.at({3}), 3);
  EXPECT_EQ(brute.count({2, 1}), 0u);
}

TEST(MultiplyCentral, UnitLawAndWeightMismatch) {
  std::mt19937_64 rng(11);
  const auto f = random_element(5, rng);
  EXPECT_EQ(multiply_central(f, CentralElement::identity(5)), f);
  EXPECT_THROW(multiply_central(f, CentralElement::identity(4)), std::invalid_argument);
}

TEST(MultiplyCentral, AgreesWithGroupAlgebraConvolutionForAllClassPairs) {
  for (int n = 1; n <= 6; ++n) {
    const auto& ps = partitions_of(n);
    for (const auto& a : ps) {
      const auto lifted_a = lift_to_group_algebra(CentralElement::class_sum(a));
      for (const auto& b : ps) {
        if (b > a) continue;  // central products commute
        const auto direct = project_to_classes(multiply(lifted_a, lift_to_group_algebra(CentralElement::class_sum(b))));
        const auto fast = multiply_central(CentralElement::class_sum(a), CentralElement::class_sum(b));
        EXPECT_EQ(fast, direct) << a.to_string() << " * " << b.to_string();
      }
    }
  }
}

TEST(CentralElement, TextRendering) {
  CentralElement h(4);
  h.set(Partition({1, 1, 1, 1}), 6);
  h.set(Partition({2, 2}), 1);
  h.set(Partition({3, 1}), 2);
  EXPECT_EQ(h.to_string(), "6*C[1,1,1,1] + 1*C[2,2] + 2*C[3,1]");
  CentralElement g(4);
  g.set(Partition({4}), -5);
  g.set(Partition({2, 1, 1}), Rational(1, 2));
  EXPECT_EQ(g.to_string(), "1/2*C[2,1,1] - 5*C[4]");
  EXPECT_EQ(CentralElement::zero(3).to_string(), "0");
  EXPECT_THROW(h[Partition({2, 1})], std::invalid_argument);
}

TEST(TableCache, StoresAndReloadsVersionedFile) {
  const auto dir = std::filesystem::temp_directory_path() / "jmwg_table_cache_test";
  std::filesystem::remove_all(dir);
  const auto& reference = character_table(6);
  detail::store_cached_table(dir, 6, reference.entries());
  const auto path = detail::cached_table_path(dir, 6);
  ASSERT_TRUE(std::filesystem::exists(path));
  EXPECT_NE(path.filename().string().find("v1"), std::string::npos);
  const auto loaded = detail::load_cached_table(dir, 6);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(*loaded, std::vector<std::int64_t>(reference.entries().begin(), reference.entries().end()));
  EXPECT_FALSE(detail::load_cached_table(dir, 5).has_value());

  std::ofstream(path) << "{\"format\":\"jmwg-character-table\",\"version\":99}";
  EXPECT_FALSE(detail::load_cached_table(dir, 6).has_value());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace jmwg

namespace jmwg {
namespace {

TEST(TableCache, CharacterTableWritesThroughConfiguredDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "jmwg_table_cache_live";
  std::filesystem::remove_all(dir);
  set_table_cache_directory(dir);
  const auto& t = character_table(9);
  set_table_cache_directory(std::nullopt);
  EXPECT_TRUE(std::filesystem::exists(detail::cached_table_path(dir, 9)));
  EXPECT_EQ(t.size(), 30u);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace jmwg
