#pragma once

#include <stdexcept>
#include <vector>

#include "jmwg/characters.hpp"
#include "jmwg/partition.hpp"
#include "jmwg/polynomial.hpp"
#include "jmwg/scalar.hpp"

namespace jmwg {

/// Raised for d < n, outside the range where Wg_d is defined by the
/// convolution formula.
class WeingartenDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Asymptotic expansion of Wg_d(mu): coefficients[r] multiplies d^{-(n+r)}.
struct WgExpansion {
  int n = 0;
  Partition mu;
  std::vector<Integer> coefficients;

  int offset() const { return n; }
};

/// Wg_d(mu) as an exact rational function of d, from the character sum
///   sum_lambda chi^lambda(mu) / (H_lambda * prod_{cells} (d + c)).
/// Throws std::invalid_argument if mu is not a partition of n.
RationalFunction wg_rational(int n, const Partition& mu);

/// Wg_d(mu) at an integer d >= n (throws WeingartenDomainError otherwise).
Rational wg_numeric(int n, const Partition& mu, const Integer& d);

/// a_0(mu) .. a_R(mu) from the class expansions of h_r(J_1..J_n).
WgExpansion wg_series(int n, const Partition& mu, int order);

/// The same coefficients by long division of wg_rational at d = infinity.
std::vector<Rational> wg_series_by_division(int n, const Partition& mu, int order);

/// sum_mu Wg_d(mu) C_mu at a fixed integer d >= n.
CentralElement weingarten_element(int n, const Integer& d);

/// sum_mu d^{l(mu)} C_mu.
CentralElement weingarten_inverse_element(int n, const Integer& d);

struct InverseCheckResult {
  int n = 0;
  Integer d;
  CentralElement product{0};
  /// product - identity
  CentralElement residual{0};
  bool ok() const { return residual.is_zero(); }
};

/// Multiplies Wg_d by sum_mu d^{l(mu)} C_mu in Z(n) and compares to 1.
InverseCheckResult inverse_check(int n, const Integer& d);

struct JucysProductCheckResult {
  int n = 0;
  Integer d;
  /// sum_r d^{n-r} e_r(J_1..J_n)
  CentralElement from_elementary{0};
  /// sum_mu d^{l(mu)} C_mu
  CentralElement from_cycles{0};
  bool ok() const { return from_elementary == from_cycles; }
};

JucysProductCheckResult jucys_product_check(int n, const Integer& d);

}  // namespace jmwg
