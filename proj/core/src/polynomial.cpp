#include "jmwg/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace jmwg {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(Integer c) { return IntPolynomial(std::vector<Integer>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(Integer c, int k) {
  std::vector<Integer> coeffs(static_cast<std::size_t>(k) + 1, 0);
  coeffs.back() = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear(Integer c) { return IntPolynomial(std::vector<Integer>{std::move(c), 1}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  return divide_exact(content());
}

IntPolynomial IntPolynomial::divide_exact(const Integer& c) const {
  if (c == 0) throw std::domain_error("IntPolynomial: division by zero");
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), c.get_mpz_t())) {
      throw std::domain_error("IntPolynomial: inexact integer division");
    }
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rational(coeffs_[i]);
  return acc;
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (k == 0 || magnitude != 1) out += magnitude.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division and gcd

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: division by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int top = a.degree(); top >= db; --top) {
    const Integer lead = r[static_cast<std::size_t>(top)];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(top - db + j)] -= lead * bc[static_cast<std::size_t>(j)];
  }
  return IntPolynomial(std::move(r));
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient: division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int top = a.degree(); top >= db; --top) {
    const Integer& lead = r[static_cast<std::size_t>(top)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    Integer factor;
    mpz_divexact(factor.get_mpz_t(), lead.get_mpz_t(), b.leading().get_mpz_t());
    q[static_cast<std::size_t>(top - db)] = factor;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(top - db + j)] -= factor * bc[static_cast<std::size_t>(j)];
  }
  for (const auto& c : r) {
    if (c != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(q));
}

namespace {

Integer integer_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer power(const Integer& base, int exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

IntPolynomial normalize_sign(IntPolynomial p) {
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a_in, const IntPolynomial& b_in) {
  if (a_in.is_zero()) return normalize_sign(b_in);
  if (b_in.is_zero()) return normalize_sign(a_in);

  IntPolynomial a = a_in;
  IntPolynomial b = b_in;
  if (a.degree() < b.degree()) std::swap(a, b);

  const Integer content_gcd = integer_gcd(a.content(), b.content());
  a = a.primitive_part();
  b = b.primitive_part();

  Integer g = 1;
  Integer h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = IntPolynomial::constant(1);
      break;
    }
    a = std::move(b);
    b = r.divide_exact(g * power(h, delta));
    g = a.leading();
    // h <- g^delta / h^(delta - 1); unchanged when delta = 0.
    if (delta > 0) {
      Integer num = power(g, delta);
      Integer den = power(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return normalize_sign(b.primitive_part() * content_gcd);
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  const IntPolynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = *exact_quotient(num_, g);
    den_ = *exact_quotient(den_, g);
  }
  const Integer c = integer_gcd(num_.content(), den_.content());
  if (c != 1) {
    num_ = num_.divide_exact(c);
    den_ = den_.divide_exact(c);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d == 0) throw PoleError("rational function has a pole at " + jmwg::to_string(x));
  return num_.evaluate(x) / d;
}

std::vector<Rational> RationalFunction::series_at_infinity(int first, int count) const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(count, 0)), 0);
  if (num_.is_zero() || count <= 0) return out;
  // num/den = x^{-shift} * N*(1/x) / D*(1/x) with reversed coefficient lists.
  const int shift = den_.degree() - num_.degree();
  const auto& nc = num_.coefficients();
  const auto& dc = den_.coefficients();
  const int p = num_.degree();
  const int q = den_.degree();
  auto rev_num = [&](int k) { return k <= p ? Rational(nc[static_cast<std::size_t>(p - k)]) : Rational(0); };
  auto rev_den = [&](int k) { return k <= q ? Rational(dc[static_cast<std::size_t>(q - k)]) : Rational(0); };

  const int last = first + count - 1;
  if (last < shift) return out;
  const int terms = last - shift + 1;
  std::vector<Rational> s(static_cast<std::size_t>(terms));
  const Rational lead = rev_den(0);
  for (int k = 0; k < terms; ++k) {
    Rational acc = rev_num(k);
    for (int j = 1; j <= std::min(k, q); ++j) acc -= rev_den(j) * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = acc / lead;
  }
  for (int k = 0; k < terms; ++k) {
    const int order = shift + k;
    if (order < first) {
      if (s[static_cast<std::size_t>(k)] != 0) {
        throw std::domain_error("series_at_infinity: expansion has terms of order " +
                                std::to_string(order) + " below the requested start " +
                                std::to_string(first));
      }
      continue;
    }
    out[static_cast<std::size_t>(order - first)] = s[static_cast<std::size_t>(k)];
  }
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  *this = RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  *this = RationalFunction(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  *this = RationalFunction(num_ * other.num_, den_ * other.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  *this = RationalFunction(num_ * other.den_, den_ * other.num_);
  return *this;
}

namespace {

bool is_single_term(const IntPolynomial& p) {
  return std::count_if(p.coefficients().begin(), p.coefficients().end(),
                       [](const Integer& c) { return c != 0; }) <= 1;
}

std::string render_numerator(const IntPolynomial& num, const std::string& var, bool has_den) {
  const std::string text = num.to_string(var);
  if (!has_den || is_single_term(num)) return text;
  return "(" + text + ")";
}

std::string with_exponent(std::string base, int exponent) {
  if (exponent > 1) base += "^" + std::to_string(exponent);
  return base;
}

}  // namespace

std::string RationalFunction::to_string(const std::string& var) const {
  const bool has_den = den_.degree() > 0 || den_.leading() != 1;
  std::string out = render_numerator(num_, var, has_den);
  if (!has_den) return out;
  const bool bare = is_single_term(den_) && den_.leading() == 1;
  return out + "/" + (bare ? den_.to_string(var) : "(" + den_.to_string(var) + ")");
}

std::string RationalFunction::to_factored_string(const std::string& var) const {
  const bool has_den = den_.degree() > 0 || den_.leading() != 1;
  std::string out = render_numerator(num_, var, has_den);
  if (!has_den) return out;

  const Integer scale = den_.content();
  IntPolynomial rest = den_.divide_exact(scale);
  int zero_order = 0;
  while (!rest.is_zero() && rest.coefficient(0) == 0) {
    rest = *exact_quotient(rest, IntPolynomial({0, 1}));
    ++zero_order;
  }

  std::vector<std::string> pieces;
  if (scale != 1) pieces.push_back(scale.get_str());
  if (zero_order > 0) pieces.push_back(with_exponent(var, zero_order));

  constexpr long kMaxRootSearch = 10000;
  for (long k = 1; k <= kMaxRootSearch && rest.degree() > 0; ++k) {
    const Integer trailing = rest.coefficient(0);
    if (!mpz_divisible_ui_p(trailing.get_mpz_t(), static_cast<unsigned long>(k))) continue;
    int minus = 0;
    int plus = 0;
    while (auto q = exact_quotient(rest, IntPolynomial::linear(-k))) {
      rest = *q;
      ++minus;
    }
    while (auto q = exact_quotient(rest, IntPolynomial::linear(k))) {
      rest = *q;
      ++plus;
    }
    const int paired = std::min(minus, plus);
    const std::string ks = std::to_string(k);
    if (paired > 0) pieces.push_back(with_exponent("(" + var + "^2-" + std::to_string(k * k) + ")", paired));
    if (minus > paired) pieces.push_back(with_exponent("(" + var + "-" + ks + ")", minus - paired));
    if (plus > paired) pieces.push_back(with_exponent("(" + var + "+" + ks + ")", plus - paired));
  }
  if (rest.degree() > 0) pieces.push_back("(" + rest.to_string(var) + ")");
  else if (rest.leading() != 1) pieces.push_back(rest.to_string(var));

  std::string joined;
  for (const auto& p : pieces) joined += p;
  const bool wrap = pieces.size() > 1 || (pieces.size() == 1 && pieces.front().front() != '(' &&
                                          pieces.front().find_first_of("+-") != std::string::npos);
  return out + "/" + (wrap ? "(" + joined + ")" : joined);
}

}  // namespace jmwg
