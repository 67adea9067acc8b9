#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jmwg/characters.hpp"
#include "jmwg/partition.hpp"
#include "jmwg/scalar.hpp"

namespace jmwg {

/// Oracle cost guard: S(n) elements are dense up to n! terms.
inline constexpr int kOracleMaxN = 7;
inline constexpr int kOracleMaxDegree = 7;

/// A permutation of {1..n}, n <= kOracleMaxN + 1, stored as 0-based images.
///
/// Composition is right-to-left: (a * b)(x) = a(b(x)).
class Perm {
 public:
  static constexpr int kMaxN = 8;

  explicit Perm(int n);  // identity
  /// 1-based image list; throws std::invalid_argument unless a bijection.
  static Perm from_images(std::span<const int> images_one_based);
  /// The transposition (i j), 1-based.
  static Perm transposition(int n, int i, int j);

  int n() const { return n_; }
  /// 1-based.
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)] + 1; }
  std::vector<int> images() const;

  Perm inverse() const;
  Partition cycle_type() const;
  std::string to_string() const;  // cycle notation, e.g. "(1 2 3)", "()" for the identity

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  int n_;
  std::array<std::uint8_t, kMaxN> images_{};
};

/// Sparse element of Q[S(n)]; never stores a zero coefficient.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}
  static GroupAlgebraElement identity(int n);
  static GroupAlgebraElement from_perm(const Perm& p, Rational coefficient = 1);

  int n() const { return n_; }
  const std::map<Perm, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Perm& p) const;

  void add(const Perm& p, const Rational& c);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  int n_;
  std::map<Perm, Rational> terms_;
};

/// Bilinear extension of composition. Throws std::invalid_argument on weight mismatch.
GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// J_i = (1,i) + ... + (i-1,i); J_1 = 0. Throws std::out_of_range unless 1 <= i <= n.
GroupAlgebraElement jm_element(int i, int n);

/// Raised when a direct expansion would exceed the oracle guard.
class OracleGuardError : public std::length_error {
 public:
  OracleGuardError(int n, int r, const Integer& estimated_work);
  const Integer& estimated_work() const { return work_; }

 private:
  Integer work_;
};

/// h_r(J_1..J_n) by definition: the sum over weakly increasing index
/// sequences of J_{i_1} ... J_{i_r}. Guarded by kOracleMaxN / kOracleMaxDegree.
GroupAlgebraElement h_direct(int n, int r);

/// e_r(J_1..J_n) by definition (strictly increasing sequences).
GroupAlgebraElement e_direct(int n, int r);

/// binom(n + r - 1, r) * n!, the guard's work estimate.
Integer oracle_cost_estimate(int n, int r);

/// Raised by project_to_classes for an element that is not central.
class NonCentralError : public std::domain_error {
 public:
  NonCentralError(const Partition& cycle_type, const Rational& first, const Rational& second);
  const Partition& cycle_type() const { return cycle_type_; }

 private:
  Partition cycle_type_;
};

/// Bins coefficients by cycle type; every permutation of a class must carry
/// the same coefficient (absent permutations count as zero).
CentralElement project_to_classes(const GroupAlgebraElement& x);

/// Lifts a class-basis element to the full group algebra (test helper for central products).
GroupAlgebraElement lift_to_group_algebra(const CentralElement& f);

/// All n! permutations in lexicographic order of image lists.
std::vector<Perm> all_permutations(int n);

}  // namespace jmwg
