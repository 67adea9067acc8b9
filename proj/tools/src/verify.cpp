#include <algorithm>
#include <set>

#include "jmwg/group_algebra.hpp"
#include "jmwg/weingarten.hpp"
#include "jmwg_cli/payload.hpp"

namespace jmwg::cli {

namespace {

constexpr int kVerifyOracleMaxN = 6;

struct Suite {
  std::string name;
  bool passed = true;
  std::string detail;
  std::string note;
};

std::string list(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::vector<int> sample_dimensions(int n) {
  std::set<int> ds{n, n + 1, n + 3, 10};
  return {ds.begin(), ds.end()};
}

Suite jucys_indicator(int n) {
  Suite s;
  s.name = "jucys-elementary";
  std::vector<std::string> bad;
  for (int r = 0; r <= n; ++r) {
    if (e_class_expansion_via_characters(n, r) != e_class_expansion(n, r)) bad.push_back("r=" + std::to_string(r));
  }
  s.passed = bad.empty();
  s.detail = s.passed ? "e_r(J) is the indicator of l(mu) = n - r for r = 0.." + std::to_string(n)
                      : "mismatch at " + list(bad);
  return s;
}

Suite orthogonality(int n) {
  Suite s;
  s.name = "character-orthogonality";
  s.passed = character_table(n).verify_orthogonality();
  s.detail = std::to_string(partitions_of(n).size()) + " irreducible characters";
  return s;
}

Suite support(int n, int max_r) {
  Suite s;
  s.name = "complete-support";
  std::vector<std::string> bad;
  std::vector<std::string> vanishing;
  for (int r = 0; r <= max_r; ++r) {
    try {
      const SupportReport report = support_report(n, r);
      for (const auto& mu : report.violations) bad.push_back("h_" + std::to_string(r) + " on " + mu.to_string());
      if (!report.if_holds()) vanishing.push_back("r=" + std::to_string(r));
    } catch (const std::logic_error& e) {
      bad.push_back(e.what());
    }
  }
  s.passed = bad.empty();
  s.detail = s.passed ? "nonzero coefficients only on l(mu) = n - r + 2g, r <= " + std::to_string(max_r)
                      : "violations: " + list(bad);
  if (!vanishing.empty()) s.note = "admissible classes with zero coefficient at " + list(vanishing);
  return s;
}

Suite moebius_minima(int n, int max_r) {
  Suite s;
  s.name = "moebius-minima";
  std::vector<std::string> bad;
  int checked = 0;
  for (int r = 1; r < n && r <= max_r; ++r) {
    for (const auto& entry : minimal_coefficient_check(n, r).entries) {
      ++checked;
      if (!entry.ok()) {
        bad.push_back("h_" + std::to_string(r) + " on " + entry.mu.to_string() + ": " + to_string(entry.actual) +
                      " != " + entry.expected.get_str());
      }
    }
  }
  s.passed = bad.empty();
  s.detail = s.passed ? std::to_string(checked) + " minimal coefficients equal (-1)^r Moeb(mu)" : list(bad);
  return s;
}

Suite catalan(int n) {
  Suite s;
  s.name = "catalan-identity";
  std::vector<std::string> bad;
  for (const auto& mu : partitions_of(n)) {
    const auto result = catalan_identity_check(mu);
    if (!result.holds()) bad.push_back(mu.to_string() + ": " + to_string(result.lhs) + " != " + result.rhs.get_str());
  }
  s.passed = bad.empty();
  s.detail = s.passed ? "sum over characters equals prod Cat_{mu_i - 1} for all mu" : list(bad);
  return s;
}

Suite inverse(int n) {
  Suite s;
  s.name = "weingarten-inverse";
  std::vector<std::string> bad;
  std::string ds;
  for (int d : sample_dimensions(n)) {
    ds += (ds.empty() ? "" : ",") + std::to_string(d);
    const auto result = inverse_check(n, d);
    if (!result.ok()) bad.push_back("d=" + std::to_string(d) + " residual " + result.residual.to_string());
  }
  s.passed = bad.empty();
  s.detail = s.passed ? "Wg_d * sum d^l(mu) C_mu = 1 at d = " + ds : list(bad);
  return s;
}

Suite jucys_product(int n) {
  Suite s;
  s.name = "jucys-product";
  std::vector<std::string> bad;
  for (int d : sample_dimensions(n)) {
    if (!jucys_product_check(n, d).ok()) bad.push_back("d=" + std::to_string(d));
  }
  s.passed = bad.empty();
  s.detail = s.passed ? "sum_r d^(n-r) e_r(J) = sum_mu d^l(mu) C_mu" : "mismatch at " + list(bad);
  return s;
}

Suite dual_route(int n, int max_r) {
  Suite s;
  s.name = "series-dual-route";
  std::vector<std::string> bad;
  for (const auto& mu : partitions_of(n)) {
    const auto by_h = wg_series(n, mu, max_r);
    const auto by_division = wg_series_by_division(n, mu, max_r);
    for (int r = 0; r <= max_r; ++r) {
      if (by_division[static_cast<std::size_t>(r)] != Rational(by_h.coefficients[static_cast<std::size_t>(r)])) {
        bad.push_back(mu.to_string() + " r=" + std::to_string(r));
      }
    }
  }
  s.passed = bad.empty();
  s.detail = s.passed ? "long division of Wg_d equals (-1)^r h_r(J) through r = " + std::to_string(max_r)
                      : "mismatch at " + list(bad);
  return s;
}

Suite leading_sign(int n) {
  Suite s;
  s.name = "leading-sign";
  std::vector<std::string> bad;
  std::vector<std::string> negative;
  const auto& classes = partitions_of(n);
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
    const Partition& mu = *it;
    const int g = n - mu.length();
    const auto series = wg_series_by_division(n, mu, g);
    const Rational& lead = series[static_cast<std::size_t>(g)];
    if (lead != Rational(moebius(mu))) bad.push_back(mu.to_string());
    for (int r = 0; r < g; ++r) {
      if (series[static_cast<std::size_t>(r)] != 0) bad.push_back(mu.to_string() + " early term");
    }
    if (g % 2 != 0) negative.push_back(mu.to_string());
  }
  s.passed = bad.empty();
  s.detail = s.passed ? "leading term of Wg_d(mu) is Moeb(mu)/d^(2n-l(mu))"
                      : "wrong sign at " + list(bad);
  if (!negative.empty()) s.note = "Wg_d is negative for large d on the odd classes " + list(negative);
  return s;
}

Suite oracle_suite(int n, int max_r) {
  Suite s;
  s.name = "oracle";
  const int top = std::min(max_r, kOracleMaxDegree);
  std::vector<std::string> bad;
  for (int r = 0; r <= top; ++r) {
    if (project_to_classes(h_direct(n, r)) != h_class_expansion(n, r)) bad.push_back("h_" + std::to_string(r));
    if (r <= n && project_to_classes(e_direct(n, r)) != e_class_expansion(n, r)) {
      bad.push_back("e_" + std::to_string(r));
    }
  }
  s.passed = bad.empty();
  s.detail = s.passed ? "group-algebra h_r and e_r agree with the character route for r <= " + std::to_string(top)
                      : "mismatch at " + list(bad);
  return s;
}

}  // namespace

Json verify_payload(int n, int max_r, bool oracle) {
  if (n < 1 || n > 8) throw std::invalid_argument("verify: n must satisfy 1 <= n <= 8 (got " + std::to_string(n) + ")");
  if (max_r < 0 || max_r > 16) {
    throw std::invalid_argument("verify: max-r must satisfy 0 <= max-r <= 16 (got " + std::to_string(max_r) + ")");
  }
  if (oracle && n > kVerifyOracleMaxN) {
    throw std::invalid_argument("verify: oracle suites need n <= 6 (got " + std::to_string(n) + ")");
  }
  std::vector<Suite> suites{jucys_indicator(n), orthogonality(n), support(n, max_r), moebius_minima(n, max_r),
                            catalan(n),         inverse(n),       jucys_product(n),  dual_route(n, max_r),
                            leading_sign(n)};
  if (oracle) suites.push_back(oracle_suite(n, max_r));
  Json list = Json::array();
  bool all = true;
  for (const auto& s : suites) {
    Json entry{{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}};
    if (!s.note.empty()) entry["note"] = s.note;
    list.push_back(std::move(entry));
    all = all && s.passed;
  }
  return Json{{"n", n}, {"max_r", max_r}, {"oracle", oracle}, {"suites", list}, {"passed", all}};
}

}  // namespace jmwg::cli
