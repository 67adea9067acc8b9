#include "jmwg_cli/payload.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "jmwg/group_algebra.hpp"
#include "jmwg/weingarten.hpp"

namespace jmwg::cli {

namespace {

constexpr int kTablesOrder = 12;

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json int_array(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + text + "' (expected text, json or csv)");
}

Json central_to_json(const CentralElement& f) {
  Json out = Json::object();
  const auto& classes = f.classes();
  for (std::size_t k = classes.size(); k-- > 0;) out[classes[k].to_string()] = to_string(f.coefficient(k));
  return out;
}

CentralElement central_from_json(int n, const Json& coeffs) {
  CentralElement f(n);
  for (const auto& [key, value] : coeffs.items()) {
    const Partition mu = Partition::parse(key);
    f.set(partition_index(mu), parse_rational(value.get<std::string>()));
  }
  return f;
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

IntPolynomial polynomial_from_json(const Json& coeffs) {
  std::vector<Integer> c;
  for (const auto& x : coeffs) c.emplace_back(x.get<std::string>());
  return IntPolynomial(std::move(c));
}

Json classes_payload(SymKind kind, int n, int r) {
  const JMExpansion e = expand(kind, n, r);
  return Json{{"n", n}, {"r", r}, {"kind", to_string(kind)}, {"coeffs", central_to_json(e.element)}};
}

Json oracle_payload(SymKind kind, int n, int r) {
  const GroupAlgebraElement direct = kind == SymKind::complete ? h_direct(n, r) : e_direct(n, r);
  const CentralElement projected = project_to_classes(direct);
  const JMExpansion reference = expand(kind, n, r);
  return Json{{"n", n},
              {"r", r},
              {"kind", to_string(kind)},
              {"method", "direct"},
              {"coeffs", central_to_json(projected)},
              {"agrees_with_characters", projected == reference.element}};
}

Json wg_payload(int n, const Partition& mu) {
  const RationalFunction wg = wg_rational(n, mu);
  return Json{{"n", n},
              {"mu", mu.to_string()},
              {"num", polynomial_to_json(wg.numerator())},
              {"den", polynomial_to_json(wg.denominator())},
              {"text", wg.to_string()},
              {"factored", wg.to_factored_string()}};
}

Json wg_series_payload(int n, const Partition& mu, int order) {
  const WgExpansion s = wg_series(n, mu, order);
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients) coeffs.push_back(c.get_str());
  return Json{{"n", n}, {"mu", mu.to_string()}, {"offset", s.offset()}, {"order", order}, {"coefficients", coeffs}};
}

Json moebius_payload(const Partition& mu) {
  return Json{{"n", mu.weight()}, {"mu", mu.to_string()}, {"value", moebius(mu).get_str()}};
}

Json chartable_payload(int n) {
  const CharacterTable& table = character_table(n);
  Json parts = Json::array();
  Json rows = Json::object();
  for (std::size_t a = 0; a < table.size(); ++a) {
    parts.push_back(table.partitions()[a].to_string());
    Json row = Json::array();
    for (auto v : table.row(a)) row.push_back(std::to_string(v));
    rows[table.partitions()[a].to_string()] = row;
  }
  return Json{{"n", n}, {"partitions", parts}, {"rows", rows}};
}

Json tables_payload(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("tables: n must satisfy 2 <= n <= 8 (got " + std::to_string(n) + ")");
  Json wg = Json::array();
  const auto& classes = partitions_of(n);
  for (std::size_t k = classes.size(); k-- > 0;) {
    Json entry = wg_payload(n, classes[k]);
    entry["series"] = wg_series_payload(n, classes[k], kTablesOrder)["coefficients"];
    entry.erase("n");
    wg.push_back(std::move(entry));
  }
  Json h = Json::array();
  for (int r = 0; r <= kTablesOrder; ++r) h.push_back(Json{{"r", r}, {"coeffs", central_to_json(h_class_expansion(n, r))}});
  return Json{{"n", n}, {"order", kTablesOrder}, {"wg", wg}, {"h", h}};
}

Json mc_payload(const MomentSpec& spec, std::uint64_t samples, std::uint64_t seed, int workers) {
  spec.validate();
  const Rational exact = moment_exact(spec);
  const McEstimate est = moment_mc(spec, samples, seed, workers);
  const double exact_d = exact.get_d();
  return Json{{"n", spec.n},
              {"d", spec.d},
              {"i", int_array(spec.i)},
              {"j", int_array(spec.j)},
              {"iprime", int_array(spec.iprime)},
              {"jprime", int_array(spec.jprime)},
              {"samples", samples},
              {"seed", seed},
              {"workers", workers},
              {"exact", to_string(exact)},
              {"mc_mean", Json{{"re", est.mean.real()}, {"im", est.mean.imag()}}},
              {"stderr", est.stderr},
              {"z_score", est.z_score(exact_d)},
              {"within", est.within(exact_d)}};
}

std::string series_text(const Json& coefficients, int offset) {
  std::string out;
  for (std::size_t r = 0; r < coefficients.size(); ++r) {
    Rational c = parse_rational(coefficients[r].get<std::string>());
    if (c == 0) continue;
    const std::string power = "/d^" + std::to_string(offset + static_cast<int>(r));
    if (out.empty()) {
      out = to_string(c) + power;
    } else {
      out += c < 0 ? " - " : " + ";
      out += to_string(Rational(abs(c))) + power;
    }
  }
  const std::string tail = "O(1/d^" + std::to_string(offset + static_cast<int>(coefficients.size())) + ")";
  return out.empty() ? tail : out + " + " + tail;
}

namespace {

void text_tables(const Json& p, std::ostream& out) {
  const int n = p["n"].get<int>();
  out << "Weingarten function, n = " << n << "\n\n";
  for (const auto& e : p["wg"]) {
    out << "Wg_d(" << e["mu"].get<std::string>() << ") = " << e["factored"].get<std::string>() << "\n";
    out << "  = " << series_text(e["series"], n) << "\n";
  }
  out << "\nComplete symmetric polynomials h_r(J_1, ..., J_" << n << ")\n\n";
  for (const auto& e : p["h"]) {
    out << "h_" << e["r"].get<int>() << " = " << central_from_json(n, e["coeffs"]).to_string() << "\n";
  }
}

void text_chartable(const Json& p, std::ostream& out) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"lambda\\mu"};
  for (const auto& mu : p["partitions"]) header.push_back(mu.get<std::string>());
  grid.push_back(header);
  for (const auto& lambda : p["partitions"]) {
    std::vector<std::string> row{lambda.get<std::string>()};
    for (const auto& v : p["rows"][lambda.get<std::string>()]) row.push_back(v.get<std::string>());
    grid.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    out << "\n";
  }
}

void text_mc(const Json& p, std::ostream& out) {
  const Rational exact = parse_rational(p["exact"].get<std::string>());
  out << "exact    " << p["exact"].get<std::string>() << " (" << format_double(exact.get_d()) << ")\n";
  const double im = p["mc_mean"]["im"].get<double>();
  out << "mc_mean  " << format_double(p["mc_mean"]["re"].get<double>()) << (im < 0 ? " - " : " + ")
      << format_double(std::abs(im)) << "i\n";
  out << "stderr   " << format_double(p["stderr"].get<double>()) << "\n";
  out << "z_score  " << format_double(p["z_score"].get<double>()) << "\n";
  out << "samples  " << p["samples"].get<std::uint64_t>() << " (seed " << p["seed"].get<std::uint64_t>() << ", "
      << p["workers"].get<int>() << " workers)\n";
  out << "within " << StatisticalGates::kAcceptanceSigmas << " sigma: " << (p["within"].get<bool>() ? "yes" : "no")
      << "\n";
}

void text_verify(const Json& p, std::ostream& out) {
  int failed = 0;
  for (const auto& s : p["suites"]) {
    const bool ok = s["passed"].get<bool>();
    failed += ok ? 0 : 1;
    out << (ok ? "PASS " : "FAIL ") << s["name"].get<std::string>() << ": " << s["detail"].get<std::string>() << "\n";
    if (s.contains("note")) out << "     note: " << s["note"].get<std::string>() << "\n";
  }
  if (failed == 0) {
    out << "all " << p["suites"].size() << " suites passed\n";
  } else {
    out << failed << " of " << p["suites"].size() << " suites failed\n";
  }
}

}  // namespace

void render_text(const std::string& command, const Json& p, std::ostream& out, bool factored) {
  if (command == "classes" || command == "oracle") {
    out << central_from_json(p["n"].get<int>(), p["coeffs"]).to_string() << "\n";
  } else if (command == "wg") {
    out << p[factored ? "factored" : "text"].get<std::string>() << "\n";
  } else if (command == "wg-series") {
    out << series_text(p["coefficients"], p["offset"].get<int>()) << "\n";
  } else if (command == "moebius") {
    out << p["value"].get<std::string>() << "\n";
  } else if (command == "chartable") {
    text_chartable(p, out);
  } else if (command == "tables") {
    text_tables(p, out);
  } else if (command == "mc") {
    text_mc(p, out);
  } else if (command == "verify") {
    text_verify(p, out);
  } else {
    throw std::invalid_argument("no text renderer for '" + command + "'");
  }
}

void render_csv(const std::string& command, const Json& p, std::ostream& out) {
  if (command == "classes" || command == "oracle") {
    out << "mu,coefficient\n";
    for (const auto& [mu, c] : p["coeffs"].items()) out << csv_quote(mu) << "," << c.get<std::string>() << "\n";
  } else if (command == "wg") {
    out << "power,numerator,denominator\n";
    const auto& num = p["num"];
    const auto& den = p["den"];
    const std::size_t terms = std::max(num.size(), den.size());
    for (std::size_t k = 0; k < terms; ++k) {
      out << k << "," << (k < num.size() ? num[k].get<std::string>() : "0") << ","
          << (k < den.size() ? den[k].get<std::string>() : "0") << "\n";
    }
  } else if (command == "wg-series") {
    out << "r,power,coefficient\n";
    const int offset = p["offset"].get<int>();
    int r = 0;
    for (const auto& c : p["coefficients"]) {
      out << r << "," << -(offset + r) << "," << c.get<std::string>() << "\n";
      ++r;
    }
  } else if (command == "moebius") {
    out << "mu,value\n" << csv_quote(p["mu"].get<std::string>()) << "," << p["value"].get<std::string>() << "\n";
  } else if (command == "chartable") {
    out << "lambda";
    for (const auto& mu : p["partitions"]) out << "," << csv_quote(mu.get<std::string>());
    out << "\n";
    for (const auto& lambda : p["partitions"]) {
      out << csv_quote(lambda.get<std::string>());
      for (const auto& v : p["rows"][lambda.get<std::string>()]) out << "," << v.get<std::string>();
      out << "\n";
    }
  } else if (command == "tables") {
    out << "table,mu,r,value\n";
    for (const auto& e : p["wg"]) {
      const std::string mu = csv_quote(e["mu"].get<std::string>());
      out << "wg," << mu << ",," << e["text"].get<std::string>() << "\n";
      int r = 0;
      for (const auto& c : e["series"]) out << "a," << mu << "," << r++ << "," << c.get<std::string>() << "\n";
    }
    for (const auto& e : p["h"]) {
      for (const auto& [mu, c] : e["coeffs"].items()) {
        out << "h," << csv_quote(mu) << "," << e["r"].get<int>() << "," << c.get<std::string>() << "\n";
      }
    }
  } else if (command == "mc") {
    out << "exact,mc_re,mc_im,stderr,z_score,samples,seed,workers,within\n";
    out << p["exact"].get<std::string>() << "," << format_double(p["mc_mean"]["re"].get<double>()) << ","
        << format_double(p["mc_mean"]["im"].get<double>()) << "," << format_double(p["stderr"].get<double>()) << ","
        << format_double(p["z_score"].get<double>()) << "," << p["samples"].get<std::uint64_t>() << ","
        << p["seed"].get<std::uint64_t>() << "," << p["workers"].get<int>() << ","
        << (p["within"].get<bool>() ? "true" : "false") << "\n";
  } else if (command == "verify") {
    out << "suite,passed,detail\n";
    for (const auto& s : p["suites"]) {
      out << csv_quote(s["name"].get<std::string>()) << "," << (s["passed"].get<bool>() ? "true" : "false") << ","
          << csv_quote(s["detail"].get<std::string>()) << "\n";
    }
  } else {
    throw std::invalid_argument("no csv renderer for '" + command + "'");
  }
}

void render_json(const std::string& command, const Json& payload, std::ostream& out) {
  Json envelope{{"command", command}, {"format", "json"}};
  for (const auto& [key, value] : payload.items()) envelope[key] = value;
  out << envelope.dump(2) << "\n";
}

}  // namespace jmwg::cli
