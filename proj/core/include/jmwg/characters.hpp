#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jmwg/partition.hpp"
#include "jmwg/scalar.hpp"

namespace jmwg {

/// Element of the center Z(n), stored in the class-sum basis {C_mu}.
///
/// Coefficients are held densely in the canonical enumeration order of
/// `partitions_of(n)`; an absent coefficient is zero.
class CentralElement {
 public:
  explicit CentralElement(int n);
  /// Throws std::invalid_argument if `coefficients` has the wrong size.
  CentralElement(int n, std::vector<Rational> coefficients);

  static CentralElement zero(int n) { return CentralElement(n); }
  static CentralElement identity(int n);
  static CentralElement class_sum(const Partition& mu);

  int n() const { return n_; }
  const std::vector<Partition>& classes() const { return partitions_of(n_); }
  std::span<const Rational> coefficients() const { return coefficients_; }

  const Rational& operator[](const Partition& mu) const;
  const Rational& coefficient(std::size_t class_index) const { return coefficients_[class_index]; }
  void set(const Partition& mu, Rational value);
  void set(std::size_t class_index, Rational value) { coefficients_[class_index] = std::move(value); }

  bool is_zero() const;
  bool is_integral() const;

  CentralElement& operator+=(const CentralElement& other);
  CentralElement& operator-=(const CentralElement& other);
  CentralElement& operator*=(const Rational& scale);
  friend CentralElement operator+(CentralElement a, const CentralElement& b) { return a += b; }
  friend CentralElement operator-(CentralElement a, const CentralElement& b) { return a -= b; }
  friend CentralElement operator*(CentralElement a, const Rational& s) { return a *= s; }
  friend CentralElement operator*(const Rational& s, CentralElement a) { return a *= s; }
  CentralElement operator-() const;

  friend bool operator==(const CentralElement&, const CentralElement&) = default;

  /// e.g. "6*C[1,1,1,1] + 1*C[2,2] + 2*C[3,1]"; classes in ascending
  /// lexicographic order, zero terms omitted, "0" for the zero element.
  std::string to_string() const;

 private:
  void check_same_weight(const CentralElement& other) const;

  int n_;
  std::vector<Rational> coefficients_;
};

/// Element of Z(n) in the irreducible-character basis {chi^lambda}.
struct CharacterExpansion {
  int n = 0;
  /// Indexed like `partitions_of(n)`.
  std::vector<Rational> values;

  explicit CharacterExpansion(int weight)
      : n(weight), values(partitions_of(weight).size()) {}
  CharacterExpansion(int weight, std::vector<Rational> vals);

  const Rational& operator[](const Partition& lambda) const;
  Rational& operator[](const Partition& lambda);

  friend bool operator==(const CharacterExpansion&, const CharacterExpansion&) = default;
};

/// Character table of S(n). Rows are irreducibles lambda, columns classes
/// mu, both in canonical enumeration order.
class CharacterTable {
 public:
  CharacterTable(int n, std::vector<std::int64_t> entries);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_of(n_); }
  std::size_t size() const { return partitions().size(); }

  std::int64_t operator()(std::size_t lambda, std::size_t mu) const {
    return entries_[lambda * size() + mu];
  }
  std::int64_t value(const Partition& lambda, const Partition& mu) const;
  std::span<const std::int64_t> row(std::size_t lambda) const {
    return {entries_.data() + lambda * size(), size()};
  }
  std::span<const std::int64_t> entries() const { return entries_; }

  const Integer& class_size(std::size_t mu) const { return class_sizes_[mu]; }
  const Integer& dimension(std::size_t lambda) const { return dimensions_[lambda]; }
  const Integer& group_order() const { return group_order_; }

  /// Both orthogonality relations, exactly.
  bool verify_orthogonality() const;

 private:
  int n_;
  std::vector<std::int64_t> entries_;
  std::vector<Integer> class_sizes_;
  std::vector<Integer> dimensions_;
  Integer group_order_;
};

/// chi^lambda(mu) by the Murnaghan-Nakayama rule.
/// Throws std::invalid_argument when the weights differ.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// Memoized table for S(n), n >= 1. Verified orthogonal before first use;
/// the returned reference is immutable and valid for the process lifetime.
const CharacterTable& character_table(int n);

/// Optional on-disk cache for computed tables (versioned JSON files).
/// Passing std::nullopt disables it.
void set_table_cache_directory(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> table_cache_directory();

/// n!/z_mu.
Integer class_size(const Partition& mu);

/// z_mu = prod_i i^{m_i} m_i!, the centralizer order.
Integer centralizer_order(const Partition& mu);

/// f_mu = sum_lambda f(lambda) chi^lambda(mu).
CentralElement char_to_class(const CharacterExpansion& f);

/// f(lambda) = (1/n!) sum_mu |C_mu| chi^lambda(mu) f_mu.
CharacterExpansion class_to_char(const CentralElement& f);

/// Eigenvalue of f on the irreducible lambda:
/// omega_f(lambda) = sum_mu f_mu |C_mu| chi^lambda(mu) / dim(lambda).
std::vector<Rational> central_eigenvalues(const CentralElement& f);
CentralElement from_central_eigenvalues(int n, std::span<const Rational> omega);

/// Product in Z(n), via pointwise multiplication of eigenvalues.
/// Throws std::invalid_argument on weight mismatch.
CentralElement multiply_central(const CentralElement& f, const CentralElement& g);

namespace detail {
std::optional<std::vector<std::int64_t>> load_cached_table(const std::filesystem::path& dir, int n);
void store_cached_table(const std::filesystem::path& dir, int n, std::span<const std::int64_t> entries);
std::filesystem::path cached_table_path(const std::filesystem::path& dir, int n);
}  // namespace detail

}  // namespace jmwg
