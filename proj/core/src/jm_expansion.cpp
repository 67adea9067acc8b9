#include "jmwg/jm_expansion.hpp"

#include <stdexcept>

#include "jmwg/symfun.hpp"

namespace jmwg {

std::string to_string(SymKind kind) { return kind == SymKind::elementary ? "e" : "h"; }

SymKind parse_sym_kind(const std::string& text) {
  if (text == "e") return SymKind::elementary;
  if (text == "h") return SymKind::complete;
  throw std::invalid_argument("unknown kind '" + text + "' (expected e or h)");
}

namespace {

void require_degree(int r, const char* what) {
  if (r < 0) throw std::invalid_argument(std::string(what) + ": r must be non-negative");
}

void require_weight(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
}

// Throws unless h is a non-negative integer combination on admissible classes.
void validate_complete(const CentralElement& h, int r) {
  const auto& classes = h.classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const Rational& c = h.coefficient(k);
    if (c == 0) continue;
    if (!is_integer(c) || c < 0) {
      throw std::logic_error("h_class_expansion: coefficient " + to_string(c) + " on C[" +
                             classes[k].to_string() + "] is not a non-negative integer");
    }
    if (!admissible_class(h.n(), r, classes[k])) {
      throw std::logic_error("h_class_expansion: nonzero coefficient on inadmissible class C[" +
                             classes[k].to_string() + "] at r=" + std::to_string(r));
    }
  }
}

}  // namespace

CentralElement e_class_expansion(int n, int r) {
  require_degree(r, "e_class_expansion");
  CentralElement out(n);
  const auto& classes = partitions_of(n);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].length() == n - r) out.set(k, 1);
  }
  return out;
}

CentralElement e_class_expansion_via_characters(int n, int r) {
  require_degree(r, "e_class_expansion_via_characters");
  require_weight(n, "e_class_expansion_via_characters");
  CharacterExpansion f(n);
  const auto& shapes = partitions_of(n);
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    f.values[k] = Rational(e_eval(r, contents(shapes[k]))) / Rational(hook_product(shapes[k]));
  }
  return char_to_class(f);
}

CentralElement h_class_expansion(int n, int r) {
  require_degree(r, "h_class_expansion");
  require_weight(n, "h_class_expansion");
  if (n == 1) {
    // J_1 = 0.
    return r == 0 ? CentralElement::identity(1) : CentralElement::zero(1);
  }
  CharacterExpansion f(n);
  const auto& shapes = partitions_of(n);
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    f.values[k] = Rational(h_eval(r, contents(shapes[k]))) / Rational(hook_product(shapes[k]));
  }
  CentralElement h = char_to_class(f);
  validate_complete(h, r);
  return h;
}

JMExpansion expand(SymKind kind, int n, int r) {
  JMExpansion out;
  out.n = n;
  out.r = r;
  out.kind = kind;
  out.element = kind == SymKind::elementary ? e_class_expansion(n, r) : h_class_expansion(n, r);
  return out;
}

CentralElement a_coefficients(int n, int r) {
  CentralElement h = h_class_expansion(n, r);
  if (r % 2 != 0) h = -h;
  return h;
}

bool admissible_class(int n, int r, const Partition& mu) {
  const int excess = mu.length() - (n - r);
  return excess >= 0 && excess % 2 == 0;
}

SupportReport support_report(int n, int r) {
  SupportReport report;
  report.n = n;
  report.r = r;
  const CentralElement h = h_class_expansion(n, r);
  const auto& classes = h.classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const bool admissible = admissible_class(n, r, classes[k]);
    const bool nonzero = h.coefficient(k) != 0;
    if (nonzero && !admissible) report.violations.push_back(classes[k]);
    if (!nonzero && admissible) report.vanishing_admissible.push_back(classes[k]);
  }
  return report;
}

bool MinimalCoefficientReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.ok()) return false;
  }
  return true;
}

MinimalCoefficientReport minimal_coefficient_check(int n, int r) {
  if (r < 1 || r >= n) {
    throw std::invalid_argument("minimal_coefficient_check: requires 1 <= r < n");
  }
  MinimalCoefficientReport report;
  report.n = n;
  report.r = r;
  const CentralElement h = h_class_expansion(n, r);
  const auto& classes = h.classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].length() != n - r) continue;
    report.entries.push_back({classes[k], sign_power(r) * moebius(classes[k]), h.coefficient(k)});
  }
  return report;
}

CatalanIdentityResult catalan_identity_check(const Partition& mu) {
  const int n = mu.weight();
  Integer rhs = 1;
  for (int part : mu.parts()) rhs *= catalan(part - 1);

  const int degree = n - mu.length();
  const auto& table = character_table(n);
  const auto& shapes = partitions_of(n);
  const std::size_t column = partition_index(mu);
  Rational lhs = 0;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    const Integer chi = static_cast<long>(table(k, column));
    if (chi == 0) continue;
    lhs += Rational(h_eval(degree, contents(shapes[k])) * chi) / Rational(hook_product(shapes[k]));
  }
  return {mu, lhs, rhs};
}

}  // namespace jmwg
