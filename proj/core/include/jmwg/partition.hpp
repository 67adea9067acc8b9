#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jmwg/scalar.hpp"

namespace jmwg {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Partitions label both the conjugacy classes of S(n) (cycle types) and
/// the irreducible characters (Young diagrams). The empty partition is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into canonical order.
  static Partition from_parts(std::vector<int> parts);

  /// The hook (n) and the column (1^n).
  static Partition row(int n);
  static Partition column(int n);

  /// Text format shared by the CLI and JSON: "3,1", "2^2", "3,1^2", "-" for
  /// the empty partition. Input is normalized to canonical order.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Multiplicity of part size `k`.
  int multiplicity(int k) const;

  Partition conjugate() const;

  /// "3,1" / "-".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n, reverse lexicographic: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

/// Cached enumeration; the reference stays valid for the process lifetime.
const std::vector<Partition>& partitions_of(int n);

/// Position of `mu` in `partitions_of(mu.weight())`.
std::size_t partition_index(const Partition& mu);

int length(const Partition& mu);

/// Multiset of cell contents (column minus row), sorted ascending.
class ContentAlphabet {
 public:
  ContentAlphabet() = default;
  explicit ContentAlphabet(std::vector<int> values);

  std::span<const int> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  long long sum() const;

  friend bool operator==(const ContentAlphabet&, const ContentAlphabet&) = default;

 private:
  std::vector<int> values_;
};

ContentAlphabet contents(const Partition& lambda);

/// Product of hook lengths over all cells; dim(lambda) = n!/H.
Integer hook_product(const Partition& lambda);

/// Number of standard Young tableaux, n!/hook_product.
Integer dimension(const Partition& lambda);

Integer catalan(int N);

/// Moebius function of NC(n) on the class mu: (-1)^{n-l} prod Cat_{mu_i - 1}.
Integer moebius(const Partition& mu);

}  // namespace jmwg
