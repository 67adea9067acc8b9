#pragma once

#include <string>
#include <vector>

#include "jmwg/characters.hpp"
#include "jmwg/partition.hpp"

namespace jmwg {

enum class SymKind { elementary, complete };

std::string to_string(SymKind kind);
/// "e" / "h". Throws std::invalid_argument otherwise.
SymKind parse_sym_kind(const std::string& text);

/// A symmetric polynomial of degree r in J_1..J_n, resolved in the class basis.
struct JMExpansion {
  int n = 0;
  int r = 0;
  SymKind kind = SymKind::complete;
  CentralElement element{0};
};

/// e_r(J_1..J_n): the indicator of classes with exactly n - r cycles.
/// r > n gives zero; r < 0 throws std::invalid_argument.
CentralElement e_class_expansion(int n, int r);

/// e_r(J_1..J_n) computed through content evaluation and the character
/// transform instead of the closed form.
CentralElement e_class_expansion_via_characters(int n, int r);

/// h_r(J_1..J_n) = sum_lambda h_r(A_lambda)/H_lambda chi^lambda, resolved in
/// the class basis. Throws std::logic_error if the result is not a
/// non-negative integer combination supported on l(mu) = n - r + 2g.
CentralElement h_class_expansion(int n, int r);

/// Dispatch on `kind`.
JMExpansion expand(SymKind kind, int n, int r);

/// Coefficients of d^{-(n+r)} in Wg_d: (-1)^r h_r(J_1..J_n).
CentralElement a_coefficients(int n, int r);

/// True when a nonzero coefficient on mu is admissible in degree r, i.e.
/// l(mu) = n - r + 2g for some g >= 0.
bool admissible_class(int n, int r, const Partition& mu);

struct SupportReport {
  int n = 0;
  int r = 0;
  /// Nonzero coefficients on inadmissible classes.
  std::vector<Partition> violations;
  /// Admissible classes whose coefficient is zero.
  std::vector<Partition> vanishing_admissible;
  bool only_if_holds() const { return violations.empty(); }
  bool if_holds() const { return vanishing_admissible.empty(); }
};

SupportReport support_report(int n, int r);

struct MinimalCoefficientEntry {
  Partition mu;
  Integer expected;
  Rational actual;
  bool ok() const { return Rational(expected) == actual; }
};

struct MinimalCoefficientReport {
  int n = 0;
  int r = 0;
  std::vector<MinimalCoefficientEntry> entries;
  bool all_pass() const;
};

/// For 1 <= r < n, compares each coefficient of h_r on l(mu) = n - r with
/// (-1)^r Moeb(mu). Mismatches are reported, not thrown; out-of-range r
/// throws std::invalid_argument.
MinimalCoefficientReport minimal_coefficient_check(int n, int r);

struct CatalanIdentityResult {
  Partition mu;
  Rational lhs;
  Integer rhs;
  bool holds() const { return lhs == Rational(rhs); }
};

/// sum_lambda h_{n-l(mu)}(A_lambda)/H_lambda chi^lambda(mu) vs prod Cat_{mu_i - 1}.
CatalanIdentityResult catalan_identity_check(const Partition& mu);

}  // namespace jmwg
