#include <gtest/gtest.h>

#include "jmwg/partition.hpp"
#include "support/oracles.hpp"

namespace jmwg {
namespace {

std::vector<std::vector<int>> as_vectors(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.emplace_back(p.parts().begin(), p.parts().end());
  return out;
}

TEST(Partition, RejectsNonCanonicalParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_NO_THROW(Partition({2, 2, 1}));
}

TEST(Partition, ParseAcceptsExponentsAndNormalizes) {
  EXPECT_EQ(Partition::parse("3,1"), Partition({3, 1}));
  EXPECT_EQ(Partition::parse("2^2"), Partition({2, 2}));
  EXPECT_EQ(Partition::parse("1^4"), Partition::column(4));
  EXPECT_EQ(Partition::parse("3,1^2"), Partition({3, 1, 1}));
  EXPECT_EQ(Partition::parse("1,3"), Partition({3, 1}));
  EXPECT_EQ(Partition::parse("(2,1)"), Partition({2, 1}));
  EXPECT_EQ(Partition::parse("-"), Partition());
}

TEST(Partition, ParseRejectsMalformedTokens) {
  EXPECT_THROW(Partition::parse("3,x"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("3,,1"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("0"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2^"), std::invalid_argument);
  try {
    Partition::parse("4,q");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("'q'"), std::string::npos);
  }
}

TEST(Partition, TextFormatRoundTrips) {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : partitions_of(n)) EXPECT_EQ(Partition::parse(p.to_string()), p);
  }
  EXPECT_EQ(Partition().to_string(), "-");
}

TEST(EnumeratePartitions, ZeroHasOnlyTheEmptyPartition) {
  const auto ps = enumerate_partitions(0);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_TRUE(ps[0].empty());
}

TEST(EnumeratePartitions, FourInReverseLexicographicOrder) {
  const std::vector<std::vector<int>> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(as_vectors(enumerate_partitions(4)), expected);
}

TEST(EnumeratePartitions, EightHasTwentyTwo) { EXPECT_EQ(enumerate_partitions(8).size(), 22u); }

TEST(EnumeratePartitions, MatchesIndependentCounterAndCompositionFilter) {
  for (int n = 0; n <= 12; ++n) {
    const auto ps = enumerate_partitions(n);
    EXPECT_EQ(static_cast<long>(ps.size()), testing::count_partitions(n, n)) << "n=" << n;
    auto mine = as_vectors(ps);
    auto theirs = testing::partitions_by_compositions(n);
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    EXPECT_EQ(mine, theirs) << "n=" << n;
    // Strictly decreasing in lexicographic order, so each appears once.
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
  }
}

TEST(EnumeratePartitions, IndexLookupMatchesPosition) {
  const auto& ps = partitions_of(7);
  for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_EQ(partition_index(ps[i]), i);
}

TEST(Partition, Length) {
  EXPECT_EQ(length(Partition({3, 1})), 2);
  EXPECT_EQ(length(Partition::column(4)), 4);
  EXPECT_EQ(length(Partition({4})), 1);
}

TEST(Contents, Examples) {
  EXPECT_EQ(contents(Partition({4, 2, 1})), ContentAlphabet({0, 1, 2, 3, -1, 0, -2}));
  EXPECT_EQ(contents(Partition({1})), ContentAlphabet({0}));
  EXPECT_EQ(contents(Partition({2, 2})), ContentAlphabet({0, 1, -1, 0}));
}

TEST(Contents, SumMatchesConjugateFormulaAndSizeIsWeight) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto alphabet = contents(lambda);
      EXPECT_EQ(static_cast<int>(alphabet.size()), n);
      long long expected = 0;
      for (int part : lambda.parts()) expected += static_cast<long long>(part) * (part - 1) / 2;
      const Partition conj = lambda.conjugate();
      for (int part : conj.parts()) expected -= static_cast<long long>(part) * (part - 1) / 2;
      EXPECT_EQ(alphabet.sum(), expected) << lambda.to_string();
    }
  }
}

TEST(Conjugate, IsAnInvolution) {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : partitions_of(n)) EXPECT_EQ(p.conjugate().conjugate(), p);
  }
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
}

TEST(HookProduct, Examples) {
  EXPECT_EQ(hook_product(Partition({1})), 1);
  EXPECT_EQ(hook_product(Partition({2, 2})), 12);
  EXPECT_EQ(hook_product(Partition({3})), 6);
}

TEST(HookProduct, QuotientIsTheTableauCount) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const Integer h = hook_product(lambda);
      EXPECT_TRUE(mpz_divisible_p(factorial(n).get_mpz_t(), h.get_mpz_t()));
      const std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
      EXPECT_EQ(dimension(lambda), testing::count_standard_tableaux(shape)) << lambda.to_string();
    }
  }
  // (2,2): two tableaux, 4!/2 = 12.
  EXPECT_EQ(testing::count_standard_tableaux({2, 2}), 2);
}

TEST(HookProduct, DividesFactorialUpToTen) {
  for (const auto& lambda : partitions_of(10)) {
    EXPECT_TRUE(mpz_divisible_p(factorial(10).get_mpz_t(), hook_product(lambda).get_mpz_t()));
  }
}

TEST(Catalan, SmallValues) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(2), 2);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(10), 16796);
  EXPECT_THROW(catalan(-1), std::invalid_argument);
}

TEST(Moebius, Examples) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(moebius(Partition::column(n)), 1);
  EXPECT_EQ(moebius(Partition({3, 1})), 2);
  EXPECT_EQ(moebius(Partition({2, 2})), 1);
  EXPECT_EQ(moebius(Partition({4})), -5);
  EXPECT_EQ(moebius(Partition({2, 1})), -1);
}

TEST(Moebius, SignIsParityOfCycleDeficit) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const int expected = sign_power(n - mu.length());
      EXPECT_EQ(sgn(moebius(mu)), expected) << mu.to_string();
    }
  }
}

}  // namespace
}  // namespace jmwg
