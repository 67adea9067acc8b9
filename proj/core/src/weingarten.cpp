#include "jmwg/weingarten.hpp"

#include <string>

#include "jmwg/jm_expansion.hpp"

namespace jmwg {

namespace {

void require_partition_of(int n, const Partition& mu, const char* what) {
  if (n < 1 || mu.weight() != n) {
    throw std::invalid_argument(std::string(what) + ": " + mu.to_string() + " is not a partition of " +
                                std::to_string(n));
  }
}

void require_dimension(int n, const Integer& d, const char* what) {
  if (d < n) {
    throw WeingartenDomainError(std::string(what) + ": requires d >= n (got d=" + d.get_str() +
                                ", n=" + std::to_string(n) + ")");
  }
}

// prod_{cells} (d + c) as a polynomial in d.
IntPolynomial content_polynomial(const Partition& lambda) {
  const ContentAlphabet alphabet = contents(lambda);
  IntPolynomial p = IntPolynomial::constant(1);
  for (int c : alphabet.values()) p = p * IntPolynomial::linear(c);
  return p;
}

Rational wg_numeric_unchecked(int n, const Partition& mu, const Integer& d) {
  const auto& table = character_table(n);
  const std::size_t column = partition_index(mu);
  const auto& shapes = partitions_of(n);
  Rational sum = 0;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    const long chi = static_cast<long>(table(k, column));
    if (chi == 0) continue;
    const ContentAlphabet alphabet = contents(shapes[k]);
    Integer denom = hook_product(shapes[k]);
    for (int c : alphabet.values()) denom *= d + c;
    if (denom == 0) {
      throw PoleError("Wg_d(" + mu.to_string() + ") has a pole at d=" + d.get_str());
    }
    sum += Rational(chi) / Rational(denom);
  }
  return sum;
}

}  // namespace

RationalFunction wg_rational(int n, const Partition& mu) {
  require_partition_of(n, mu, "wg_rational");
  const auto& table = character_table(n);
  const std::size_t column = partition_index(mu);
  const auto& shapes = partitions_of(n);
  RationalFunction sum;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    const long chi = static_cast<long>(table(k, column));
    if (chi == 0) continue;
    sum += RationalFunction(IntPolynomial::constant(chi),
                            content_polynomial(shapes[k]) * hook_product(shapes[k]));
  }
  for (int d = n + 1; d <= n + 5; ++d) {
    if (sum.evaluate(Rational(d)) != wg_numeric_unchecked(n, mu, d)) {
      throw std::logic_error("wg_rational: reduced form disagrees with the direct sum at d=" +
                             std::to_string(d));
    }
  }
  return sum;
}

Rational wg_numeric(int n, const Partition& mu, const Integer& d) {
  require_partition_of(n, mu, "wg_numeric");
  require_dimension(n, d, "wg_numeric");
  return wg_numeric_unchecked(n, mu, d);
}

WgExpansion wg_series(int n, const Partition& mu, int order) {
  require_partition_of(n, mu, "wg_series");
  if (order < 0) throw std::invalid_argument("wg_series: order must be non-negative");
  WgExpansion out;
  out.n = n;
  out.mu = mu;
  out.coefficients.reserve(static_cast<std::size_t>(order) + 1);
  for (int r = 0; r <= order; ++r) {
    const Rational a = a_coefficients(n, r)[mu];
    out.coefficients.push_back(a.get_num());
  }
  return out;
}

std::vector<Rational> wg_series_by_division(int n, const Partition& mu, int order) {
  if (order < 0) throw std::invalid_argument("wg_series_by_division: order must be non-negative");
  return wg_rational(n, mu).series_at_infinity(n, order + 1);
}

CentralElement weingarten_element(int n, const Integer& d) {
  require_dimension(n, d, "weingarten_element");
  CentralElement wg(n);
  const auto& classes = partitions_of(n);
  for (std::size_t k = 0; k < classes.size(); ++k) wg.set(k, wg_numeric(n, classes[k], d));
  return wg;
}

CentralElement weingarten_inverse_element(int n, const Integer& d) {
  CentralElement out(n);
  const auto& classes = partitions_of(n);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(classes[k].length()));
    out.set(k, Rational(power));
  }
  return out;
}

InverseCheckResult inverse_check(int n, const Integer& d) {
  require_dimension(n, d, "inverse_check");
  InverseCheckResult result;
  result.n = n;
  result.d = d;
  result.product = multiply_central(weingarten_element(n, d), weingarten_inverse_element(n, d));
  result.residual = result.product - CentralElement::identity(n);
  return result;
}

JucysProductCheckResult jucys_product_check(int n, const Integer& d) {
  require_dimension(n, d, "jucys_product_check");
  JucysProductCheckResult result;
  result.n = n;
  result.d = d;
  result.from_elementary = CentralElement(n);
  for (int r = 0; r <= n; ++r) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n - r));
    result.from_elementary += e_class_expansion(n, r) * Rational(power);
  }
  result.from_cycles = weingarten_inverse_element(n, d);
  return result;
}

}  // namespace jmwg
