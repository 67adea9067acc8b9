#include "jmwg/group_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace jmwg {

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(int n) : n_(n) {
  if (n < 0 || n > kMaxN) {
    throw std::invalid_argument("Perm: n must be in [0, " + std::to_string(kMaxN) + "]");
  }
  for (int x = 0; x < n; ++x) images_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
}

Perm Perm::from_images(std::span<const int> images_one_based) {
  Perm p(static_cast<int>(images_one_based.size()));
  std::array<bool, kMaxN> seen{};
  for (std::size_t x = 0; x < images_one_based.size(); ++x) {
    const int image = images_one_based[x];
    if (image < 1 || image > p.n_ || seen[static_cast<std::size_t>(image - 1)]) {
      throw std::invalid_argument("Perm: image list is not a bijection on {1..n}");
    }
    seen[static_cast<std::size_t>(image - 1)] = true;
    p.images_[x] = static_cast<std::uint8_t>(image - 1);
  }
  return p;
}

Perm Perm::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw std::out_of_range("Perm::transposition: indices out of range");
  }
  Perm p(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

std::vector<int> Perm::images() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) out[static_cast<std::size_t>(x)] = images_[static_cast<std::size_t>(x)] + 1;
  return out;
}

Perm Perm::inverse() const {
  Perm inv(n_);
  for (int x = 0; x < n_; ++x) {
    inv.images_[images_[static_cast<std::size_t>(x)]] = static_cast<std::uint8_t>(x);
  }
  return inv;
}

Partition Perm::cycle_type() const {
  std::array<bool, kMaxN> seen{};
  std::vector<int> cycles;
  for (int start = 0; start < n_; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  return Partition::from_parts(std::move(cycles));
}

std::string Perm::to_string() const {
  std::array<bool, kMaxN> seen{};
  std::string out;
  for (int start = 0; start < n_; ++start) {
    if (seen[static_cast<std::size_t>(start)] || images_[static_cast<std::size_t>(start)] == start) continue;
    out += '(';
    bool first = true;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Perm: weight mismatch in composition");
  Perm c(a.n_);
  for (int x = 0; x < a.n_; ++x) {
    c.images_[static_cast<std::size_t>(x)] = a.images_[b.images_[static_cast<std::size_t>(x)]];
  }
  return c;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// ---------------------------------------------------------------------------
// GroupAlgebraElement

GroupAlgebraElement GroupAlgebraElement::identity(int n) { return from_perm(Perm(n)); }

GroupAlgebraElement GroupAlgebraElement::from_perm(const Perm& p, Rational coefficient) {
  GroupAlgebraElement x(p.n());
  x.add(p, coefficient);
  return x;
}

Rational GroupAlgebraElement::coefficient(const Perm& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Perm& p, const Rational& c) {
  if (p.n() != n_) throw std::invalid_argument("GroupAlgebraElement: weight mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("GroupAlgebraElement: weight mismatch");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("multiply: weight mismatch (" + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()) + ")");
  }
  GroupAlgebraElement out(a.n());
  for (const auto& [p, cp] : a.terms()) {
    for (const auto& [q, cq] : b.terms()) out.add(p * q, cp * cq);
  }
  return out;
}

GroupAlgebraElement jm_element(int i, int n) {
  if (n < 1 || n > Perm::kMaxN) {
    throw std::out_of_range("jm_element: n must be in [1, " + std::to_string(Perm::kMaxN) + "]");
  }
  if (i < 1 || i > n) {
    throw std::out_of_range("jm_element: index " + std::to_string(i) + " outside [1, " +
                            std::to_string(n) + "]");
  }
  GroupAlgebraElement x(n);
  for (int k = 1; k < i; ++k) x.add(Perm::transposition(n, k, i), 1);
  return x;
}

// ---------------------------------------------------------------------------
// Direct expansions

Integer oracle_cost_estimate(int n, int r) {
  return binomial(n + r - 1, r) * factorial(n);
}

OracleGuardError::OracleGuardError(int n, int r, const Integer& estimated_work)
    : std::length_error("oracle refused n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                        ": limits are n <= " + std::to_string(kOracleMaxN) + ", r <= " +
                        std::to_string(kOracleMaxDegree) + " (estimated work " +
                        estimated_work.get_str() + " term products; use the character route)"),
      work_(estimated_work) {}

namespace {

void guard(int n, int r) {
  if (n < 1 || r < 0 || n > kOracleMaxN || r > kOracleMaxDegree) {
    throw OracleGuardError(n, r, oracle_cost_estimate(std::max(n, 1), std::max(r, 0)));
  }
}

// Accumulates prefix * J_{i_k} * ... over index sequences starting at `first`.
void expand_sequences(const std::vector<GroupAlgebraElement>& jm, const GroupAlgebraElement& prefix,
                      int first, int remaining, bool strict, GroupAlgebraElement& total) {
  if (remaining == 0) {
    total += prefix;
    return;
  }
  const int n = static_cast<int>(jm.size());
  for (int i = first; i <= n; ++i) {
    GroupAlgebraElement next = multiply(prefix, jm[static_cast<std::size_t>(i - 1)]);
    if (next.is_zero()) continue;
    expand_sequences(jm, next, strict ? i + 1 : i, remaining - 1, strict, total);
  }
}

GroupAlgebraElement direct(int n, int r, bool strict) {
  guard(n, r);
  std::vector<GroupAlgebraElement> jm;
  for (int i = 1; i <= n; ++i) jm.push_back(jm_element(i, n));
  GroupAlgebraElement total(n);
  expand_sequences(jm, GroupAlgebraElement::identity(n), 1, r, strict, total);
  return total;
}

}  // namespace

GroupAlgebraElement h_direct(int n, int r) { return direct(n, r, false); }

GroupAlgebraElement e_direct(int n, int r) { return direct(n, r, true); }

// ---------------------------------------------------------------------------
// Projection

NonCentralError::NonCentralError(const Partition& cycle_type, const Rational& first,
                                 const Rational& second)
    : std::domain_error("element is not central: class C[" + cycle_type.to_string() +
                        "] carries coefficients " + to_string(first) + " and " + to_string(second)),
      cycle_type_(cycle_type) {}

CentralElement project_to_classes(const GroupAlgebraElement& x) {
  const int n = x.n();
  const auto& classes = partitions_of(n);
  std::vector<Rational> value(classes.size());
  std::vector<Integer> count(classes.size(), 0);
  for (const auto& [p, c] : x.terms()) {
    const std::size_t k = partition_index(p.cycle_type());
    if (count[k] == 0) {
      value[k] = c;
    } else if (value[k] != c) {
      throw NonCentralError(classes[k], value[k], c);
    }
    ++count[k];
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (count[k] != 0 && count[k] != class_size(classes[k])) {
      // Some permutations of the class are missing, i.e. carry coefficient zero.
      throw NonCentralError(classes[k], value[k], 0);
    }
  }
  return CentralElement(n, std::move(value));
}

GroupAlgebraElement lift_to_group_algebra(const CentralElement& f) {
  const int n = f.n();
  if (n > kOracleMaxN) {
    throw OracleGuardError(n, 0, factorial(n));
  }
  GroupAlgebraElement x(n);
  for (const auto& p : all_permutations(n)) x.add(p, f[p.cycle_type()]);
  return x;
}

}  // namespace jmwg
