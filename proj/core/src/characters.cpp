#include "jmwg/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace jmwg {

// ---------------------------------------------------------------------------
// CentralElement

CentralElement::CentralElement(int n) : n_(n), coefficients_(partitions_of(n).size()) {}

CentralElement::CentralElement(int n, std::vector<Rational> coefficients)
    : n_(n), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != partitions_of(n).size()) {
    throw std::invalid_argument("CentralElement: coefficient count does not match p(n)");
  }
}

CentralElement CentralElement::identity(int n) {
  CentralElement e(n);
  e.set(Partition::column(n), 1);
  return e;
}

CentralElement CentralElement::class_sum(const Partition& mu) {
  CentralElement e(mu.weight());
  e.set(mu, 1);
  return e;
}

const Rational& CentralElement::operator[](const Partition& mu) const {
  if (mu.weight() != n_) {
    throw std::invalid_argument("CentralElement: class " + mu.to_string() + " is not a partition of " +
                                std::to_string(n_));
  }
  return coefficients_[partition_index(mu)];
}

void CentralElement::set(const Partition& mu, Rational value) {
  if (mu.weight() != n_) {
    throw std::invalid_argument("CentralElement: class " + mu.to_string() + " is not a partition of " +
                                std::to_string(n_));
  }
  coefficients_[partition_index(mu)] = std::move(value);
}

bool CentralElement::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CentralElement::is_integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

void CentralElement::check_same_weight(const CentralElement& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("CentralElement: weight mismatch (" + std::to_string(n_) + " vs " +
                                std::to_string(other.n_) + ")");
  }
}

CentralElement& CentralElement::operator+=(const CentralElement& other) {
  check_same_weight(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

CentralElement& CentralElement::operator-=(const CentralElement& other) {
  check_same_weight(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

CentralElement& CentralElement::operator*=(const Rational& scale) {
  for (auto& c : coefficients_) c *= scale;
  return *this;
}

CentralElement CentralElement::operator-() const {
  CentralElement result(*this);
  for (auto& c : result.coefficients_) c = -c;
  return result;
}

std::string CentralElement::to_string() const {
  std::string out;
  const auto& classes = partitions_of(n_);
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const Rational& c = coefficients_[k];
    if (c == 0) continue;
    const std::string term = "C[" + classes[k].to_string() + "]";
    if (out.empty()) {
      out = jmwg::to_string(c) + "*" + term;
    } else if (c < 0) {
      out += " - " + jmwg::to_string(Rational(-c)) + "*" + term;
    } else {
      out += " + " + jmwg::to_string(c) + "*" + term;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// CharacterExpansion

CharacterExpansion::CharacterExpansion(int weight, std::vector<Rational> vals)
    : n(weight), values(std::move(vals)) {
  if (values.size() != partitions_of(weight).size()) {
    throw std::invalid_argument("CharacterExpansion: value count does not match p(n)");
  }
}

const Rational& CharacterExpansion::operator[](const Partition& lambda) const {
  return values.at(partition_index(lambda));
}

Rational& CharacterExpansion::operator[](const Partition& lambda) {
  return values.at(partition_index(lambda));
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

// A shape is encoded by its beta-set {lambda_i + (l-1-i)}; removing a border
// strip of length k moves one bead from b to b-k.
class MurnaghanNakayama {
 public:
  std::int64_t evaluate(const std::vector<int>& shape, std::span<const int> cycles) {
    if (cycles.empty()) return shape.empty() ? 1 : 0;
    Key key{shape, std::vector<int>(cycles.begin(), cycles.end())};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int k = cycles.front();
    const auto rest = cycles.subspan(1);
    const int len = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);

    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int target = beta[i] - k;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int height = 0;
      for (int b : beta) {
        if (b > target && b < beta[i]) ++height;
      }
      std::vector<int> moved = beta;
      moved[i] = target;
      total += (height % 2 == 0 ? 1 : -1) * evaluate(shape_from_beta(moved), rest);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  static std::vector<int> shape_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> shape;
    for (int i = 0; i < len; ++i) {
      const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (part > 0) shape.push_back(part);
    }
    return shape;
  }

  std::map<Key, std::int64_t> memo_;
};

std::vector<std::int64_t> compute_table(int n) {
  const auto& parts = partitions_of(n);
  MurnaghanNakayama mn;
  std::vector<std::int64_t> entries;
  entries.reserve(parts.size() * parts.size());
  for (const auto& lambda : parts) {
    const std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
    for (const auto& mu : parts) entries.push_back(mn.evaluate(shape, mu.parts()));
  }
  return entries;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::optional<std::filesystem::path>& cache_dir_slot() {
  static std::optional<std::filesystem::path> dir;
  return dir;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("mn_character: weight mismatch between " + lambda.to_string() +
                                " and " + mu.to_string());
  }
  MurnaghanNakayama mn;
  const std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
  return mn.evaluate(shape, mu.parts());
}

// ---------------------------------------------------------------------------
// CharacterTable

Integer centralizer_order(const Partition& mu) {
  Integer z = 1;
  const int top = mu.empty() ? 0 : mu[0];
  for (int i = 1; i <= top; ++i) {
    const int m = mu.multiplicity(i);
    if (m == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
    z *= power * factorial(m);
  }
  return z;
}

Integer class_size(const Partition& mu) { return factorial(mu.weight()) / centralizer_order(mu); }

CharacterTable::CharacterTable(int n, std::vector<std::int64_t> entries)
    : n_(n), entries_(std::move(entries)), group_order_(factorial(n)) {
  const auto& parts = partitions_of(n);
  if (entries_.size() != parts.size() * parts.size()) {
    throw std::invalid_argument("CharacterTable: entry count does not match p(n)^2");
  }
  class_sizes_.reserve(parts.size());
  dimensions_.reserve(parts.size());
  for (const auto& p : parts) {
    class_sizes_.push_back(jmwg::class_size(p));
    dimensions_.push_back(jmwg::dimension(p));
  }
}

std::int64_t CharacterTable::value(const Partition& lambda, const Partition& mu) const {
  if (lambda.weight() != n_ || mu.weight() != n_) {
    throw std::invalid_argument("CharacterTable: partition weight differs from table weight");
  }
  return (*this)(partition_index(lambda), partition_index(mu));
}

bool CharacterTable::verify_orthogonality() const {
  const std::size_t p = size();
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a; b < p; ++b) {
      Integer rows = 0;
      Integer cols = 0;
      for (std::size_t k = 0; k < p; ++k) {
        rows += class_sizes_[k] * Integer(static_cast<long>((*this)(a, k) * (*this)(b, k)));
        cols += Integer(static_cast<long>((*this)(k, a) * (*this)(k, b)));
      }
      const Integer want_rows = (a == b) ? group_order_ : Integer(0);
      const Integer want_cols = (a == b) ? Integer(group_order_ / class_sizes_[a]) : Integer(0);
      if (rows != want_rows || cols != want_cols) return false;
    }
  }
  // Degree column must match the hook length formula.
  const std::size_t identity_class = p - 1;
  for (std::size_t a = 0; a < p; ++a) {
    if (Integer(static_cast<long>((*this)(a, identity_class))) != dimensions_[a]) return false;
  }
  return true;
}

void set_table_cache_directory(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(cache_mutex());
  cache_dir_slot() = std::move(dir);
}

std::optional<std::filesystem::path> table_cache_directory() {
  std::lock_guard lock(cache_mutex());
  return cache_dir_slot();
}

const CharacterTable& character_table(int n) {
  if (n < 1) {
    throw std::invalid_argument("character_table: n must be at least 1");
  }
  static std::map<int, std::unique_ptr<const CharacterTable>> tables;
  std::lock_guard lock(cache_mutex());
  if (auto it = tables.find(n); it != tables.end()) return *it->second;

  const auto& dir = cache_dir_slot();
  std::unique_ptr<CharacterTable> table;
  if (dir) {
    if (auto cached = detail::load_cached_table(*dir, n)) {
      auto candidate = std::make_unique<CharacterTable>(n, std::move(*cached));
      if (candidate->verify_orthogonality()) table = std::move(candidate);
    }
  }
  if (!table) {
    table = std::make_unique<CharacterTable>(n, compute_table(n));
    if (!table->verify_orthogonality()) {
      throw std::logic_error("character_table: orthogonality failed for n=" + std::to_string(n));
    }
    if (dir) detail::store_cached_table(*dir, n, table->entries());
  }
  return *tables.emplace(n, std::move(table)).first->second;
}

// ---------------------------------------------------------------------------
// Basis transforms

CentralElement char_to_class(const CharacterExpansion& f) {
  const auto& table = character_table(f.n);
  const std::size_t p = table.size();
  std::vector<Rational> out(p);
  for (std::size_t mu = 0; mu < p; ++mu) {
    Rational sum = 0;
    for (std::size_t lambda = 0; lambda < p; ++lambda) {
      if (f.values[lambda] == 0) continue;
      sum += f.values[lambda] * Rational(static_cast<long>(table(lambda, mu)));
    }
    out[mu] = std::move(sum);
  }
  return CentralElement(f.n, std::move(out));
}

CharacterExpansion class_to_char(const CentralElement& f) {
  const auto& table = character_table(f.n());
  const std::size_t p = table.size();
  std::vector<Rational> out(p);
  for (std::size_t lambda = 0; lambda < p; ++lambda) {
    Rational sum = 0;
    for (std::size_t mu = 0; mu < p; ++mu) {
      if (f.coefficient(mu) == 0) continue;
      sum += f.coefficient(mu) * Rational(table.class_size(mu) * static_cast<long>(table(lambda, mu)));
    }
    out[lambda] = sum / Rational(table.group_order());
  }
  return CharacterExpansion(f.n(), std::move(out));
}

std::vector<Rational> central_eigenvalues(const CentralElement& f) {
  const auto& table = character_table(f.n());
  const std::size_t p = table.size();
  std::vector<Rational> omega(p);
  for (std::size_t lambda = 0; lambda < p; ++lambda) {
    Rational sum = 0;
    for (std::size_t mu = 0; mu < p; ++mu) {
      if (f.coefficient(mu) == 0) continue;
      sum += f.coefficient(mu) * Rational(table.class_size(mu) * static_cast<long>(table(lambda, mu)));
    }
    omega[lambda] = sum / Rational(table.dimension(lambda));
  }
  return omega;
}

CentralElement from_central_eigenvalues(int n, std::span<const Rational> omega) {
  const auto& table = character_table(n);
  const std::size_t p = table.size();
  if (omega.size() != p) {
    throw std::invalid_argument("from_central_eigenvalues: eigenvalue count does not match p(n)");
  }
  std::vector<Rational> out(p);
  for (std::size_t mu = 0; mu < p; ++mu) {
    Rational sum = 0;
    for (std::size_t lambda = 0; lambda < p; ++lambda) {
      if (omega[lambda] == 0) continue;
      sum += omega[lambda] * Rational(table.dimension(lambda) * static_cast<long>(table(lambda, mu)));
    }
    out[mu] = sum / Rational(table.group_order());
  }
  return CentralElement(n, std::move(out));
}

CentralElement multiply_central(const CentralElement& f, const CentralElement& g) {
  if (f.n() != g.n()) {
    throw std::invalid_argument("multiply_central: weight mismatch (" + std::to_string(f.n()) +
                                " vs " + std::to_string(g.n()) + ")");
  }
  auto omega = central_eigenvalues(f);
  const auto omega_g = central_eigenvalues(g);
  for (std::size_t i = 0; i < omega.size(); ++i) omega[i] *= omega_g[i];
  return from_central_eigenvalues(f.n(), omega);
}

}  // namespace jmwg
