#include <gtest/gtest.h>

#include <random>

#include "jmwg/group_algebra.hpp"
#include "jmwg/jm_expansion.hpp"

namespace jmwg {
namespace {

TEST(Perm, CompositionConventionIsRightToLeft) {
  const Perm a = Perm::transposition(3, 1, 2);
  const Perm b = Perm::transposition(3, 2, 3);
  const Perm ab = a * b;
  // (ab)(x) = a(b(x)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  EXPECT_EQ(ab.images(), (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(ab.to_string(), "(1 2 3)");
  EXPECT_EQ(ab.cycle_type(), Partition({3}));
}

TEST(Perm, RejectsNonBijections) {
  const std::vector<int> bad{1, 1, 3};
  EXPECT_THROW(Perm::from_images(bad), std::invalid_argument);
  const std::vector<int> out_of_range{1, 4, 2};
  EXPECT_THROW(Perm::from_images(out_of_range), std::invalid_argument);
}

TEST(Perm, InverseAndConjugationInvariance) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    const Perm sigma = Perm::from_images(images);
    EXPECT_EQ(sigma * sigma.inverse(), Perm(n));
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(images.begin(), images.end(), rng);
      const Perm g = Perm::from_images(images);
      EXPECT_EQ((g * sigma * g.inverse()).cycle_type(), sigma.cycle_type());
    }
  }
}

TEST(JmElement, Definitions) {
  EXPECT_TRUE(jm_element(1, 4).is_zero());
  const auto j2 = jm_element(2, 4);
  EXPECT_EQ(j2, GroupAlgebraElement::from_perm(Perm::transposition(4, 1, 2)));
  const auto j4 = jm_element(4, 4);
  GroupAlgebraElement expected(4);
  expected.add(Perm::transposition(4, 1, 4), 1);
  expected.add(Perm::transposition(4, 2, 4), 1);
  expected.add(Perm::transposition(4, 3, 4), 1);
  EXPECT_EQ(j4, expected);
  EXPECT_THROW(jm_element(0, 4), std::out_of_range);
  EXPECT_THROW(jm_element(5, 4), std::out_of_range);
}

TEST(Multiply, UnitInvolutionAndMismatch) {
  const auto t = GroupAlgebraElement::from_perm(Perm::transposition(3, 1, 2));
  EXPECT_EQ(multiply(t, GroupAlgebraElement::identity(3)), t);
  EXPECT_EQ(multiply(t, t), GroupAlgebraElement::identity(3));
  EXPECT_THROW(multiply(t, GroupAlgebraElement::identity(4)), std::invalid_argument);
  GroupAlgebraElement cancel(3);
  cancel.add(Perm(3), 2);
  cancel.add(Perm(3), -2);
  EXPECT_TRUE(cancel.is_zero());
}

TEST(HDirect, SmallCases) {
  EXPECT_EQ(h_direct(3, 0), GroupAlgebraElement::identity(3));
  EXPECT_EQ(h_direct(2, 1), GroupAlgebraElement::from_perm(Perm::transposition(2, 1, 2)));
  CentralElement expected(3);
  expected.set(Partition({1, 1, 1}), 3);
  expected.set(Partition({3}), 2);
  EXPECT_EQ(project_to_classes(h_direct(3, 2)), expected);
}

TEST(HDirect, GuardRefusesWithCostEstimate) {
  try {
    h_direct(8, 2);
    FAIL();
  } catch (const OracleGuardError& e) {
    EXPECT_EQ(e.estimated_work(), binomial(9, 2) * factorial(8));
    EXPECT_NE(std::string(e.what()).find("n <= 7"), std::string::npos);
  }
  EXPECT_THROW(h_direct(3, 8), OracleGuardError);
}

TEST(ProjectToClasses, Examples) {
  EXPECT_EQ(project_to_classes(GroupAlgebraElement::identity(4)), CentralElement::identity(4));
  EXPECT_EQ(project_to_classes(jm_element(2, 2)), CentralElement::class_sum(Partition({2})));
  CentralElement expected(4);
  expected.set(Partition({1, 1, 1, 1}), 6);
  expected.set(Partition({2, 2}), 1);
  expected.set(Partition({3, 1}), 2);
  EXPECT_EQ(project_to_classes(h_direct(4, 2)), expected);
}

TEST(ProjectToClasses, RejectsNonCentralElements) {
  // J_3 alone is not central in S(3): (1,3)+(2,3) misses (1,2).
  try {
    project_to_classes(jm_element(3, 3));
    FAIL();
  } catch (const NonCentralError& e) {
    EXPECT_EQ(e.cycle_type(), Partition({2, 1}));
  }
  GroupAlgebraElement uneven(3);
  uneven.add(Perm::transposition(3, 1, 2), 1);
  uneven.add(Perm::transposition(3, 1, 3), 1);
  uneven.add(Perm::transposition(3, 2, 3), 2);
  EXPECT_THROW(project_to_classes(uneven), NonCentralError);
}

TEST(HDirect, IsCentralAndMatchesCharacterRoute) {
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= 5; ++r) {
      EXPECT_EQ(project_to_classes(h_direct(n, r)), h_class_expansion(n, r)) << n << "," << r;
    }
  }
}

TEST(EDirect, MatchesJucysIndicator) {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) EXPECT_EQ(project_to_classes(e_direct(n, r)), e_class_expansion(n, r));
  }
}

}  // namespace
}  // namespace jmwg
