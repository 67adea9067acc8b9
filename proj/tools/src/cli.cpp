#include "jmwg_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "jmwg/group_algebra.hpp"
#include "jmwg/weingarten.hpp"
#include "jmwg_cli/payload.hpp"

namespace jmwg::cli {

namespace {

Partition parse_partition_option(const std::string& flag, const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(flag + ": " + e.what());
  }
}

std::vector<int> parse_indices(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string token = text.substr(start, comma - start);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (token.empty() || used != token.size()) {
      throw std::invalid_argument(flag + ": malformed index token '" + token + "' in '" + text + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

struct Options {
  std::string format = "text";
  int workers = 1;
  std::string kind = "h";
  int n = -1;
  int r = -1;
  int d = -1;
  int order = 12;
  int max_r = 6;
  std::string mu;
  bool factored = false;
  bool oracle = false;
  std::string i, j, iprime, jprime;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
};

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jucys-Murphy class expansions and Weingarten functions", "jmwg"};
  app.require_subcommand(1);
  Options o;

  auto* classes = app.add_subcommand("classes", "Class expansion of e_r or h_r in J_1..J_n");
  classes->add_option("--kind", o.kind, "e or h")->check(CLI::IsMember({"e", "h"}));
  classes->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  classes->add_option("--r", o.r)->required()->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "Class expansion by direct group-algebra multiplication");
  oracle->add_option("--kind", o.kind, "e or h")->check(CLI::IsMember({"e", "h"}));
  oracle->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  oracle->add_option("--r", o.r)->required()->check(CLI::NonNegativeNumber);

  auto* wg = app.add_subcommand("wg", "Weingarten function as a rational function of d");
  wg->add_option("--n", o.n, "Defaults to |mu|");
  wg->add_option("--mu", o.mu)->required();
  wg->add_flag("--factored", o.factored, "Split the denominator into factors");

  auto* series = app.add_subcommand("wg-series", "Coefficients of the expansion of Wg_d at d = infinity");
  series->add_option("--n", o.n, "Defaults to |mu|");
  series->add_option("--mu", o.mu)->required();
  series->add_option("--order", o.order, "Last coefficient index")->check(CLI::Range(0, 64));

  auto* moeb = app.add_subcommand("moebius", "Moebius function of the non-crossing partition lattice");
  moeb->add_option("n,--n", o.n, "Defaults to |mu|");
  moeb->add_option("--mu", o.mu)->required();

  auto* chartable = app.add_subcommand("chartable", "Character table of S(n)");
  chartable->add_option("n,--n", o.n)->required()->check(CLI::Range(1, 20));

  auto* tables = app.add_subcommand("tables", "Closed forms, series and h_r tables for one n");
  tables->add_option("n,--n", o.n)->required();

  auto* verify = app.add_subcommand("verify", "Run the verification suites for one n");
  verify->add_option("n,--n", o.n)->required();
  verify->add_option("--max-r", o.max_r, "Largest degree checked");
  verify->add_flag("--oracle", o.oracle, "Include the group-algebra oracle suites (n <= 6)");

  auto* mc = app.add_subcommand("mc", "Monte Carlo Haar moment against the exact value");
  mc->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  mc->add_option("--d", o.d)->required()->check(CLI::PositiveNumber);
  mc->add_option("--i", o.i)->required();
  mc->add_option("--j", o.j)->required();
  mc->add_option("--iprime", o.iprime)->required();
  mc->add_option("--jprime", o.jprime)->required();
  mc->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  mc->add_option("--seed", o.seed);
  mc->add_option("--workers", o.workers)->check(CLI::Range(1, 256));

  for (auto* sub : {classes, oracle, wg, series, moeb, chartable, tables, verify, mc}) add_format(sub, o);

  if (!args.empty() && !args.front().starts_with("-") && !app.get_subcommand_no_throw(args.front())) {
    err << "error: unknown subcommand '" << args.front() << "'\n" << app.help();
    return kExitUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (const char* dir = std::getenv("JMWG_CACHE_DIR"); dir && *dir) set_table_cache_directory(std::filesystem::path(dir));

  std::string command;
  Json payload;
  bool verification_failed = false;
  try {
    const Format format = parse_format(o.format);
    auto weight_of = [&](const Partition& mu) {
      if (o.n >= 0 && o.n != mu.weight()) {
        throw std::invalid_argument("--mu " + mu.to_string() + " is not a partition of n=" + std::to_string(o.n));
      }
      return mu.weight();
    };

    if (classes->parsed()) {
      command = "classes";
      payload = classes_payload(parse_sym_kind(o.kind), o.n, o.r);
    } else if (oracle->parsed()) {
      command = "oracle";
      payload = oracle_payload(parse_sym_kind(o.kind), o.n, o.r);
      verification_failed = !payload["agrees_with_characters"].get<bool>();
    } else if (wg->parsed()) {
      command = "wg";
      const Partition mu = parse_partition_option("--mu", o.mu);
      payload = wg_payload(weight_of(mu), mu);
    } else if (series->parsed()) {
      command = "wg-series";
      const Partition mu = parse_partition_option("--mu", o.mu);
      payload = wg_series_payload(weight_of(mu), mu, o.order);
    } else if (moeb->parsed()) {
      command = "moebius";
      const Partition mu = parse_partition_option("--mu", o.mu);
      weight_of(mu);
      payload = moebius_payload(mu);
    } else if (chartable->parsed()) {
      command = "chartable";
      payload = chartable_payload(o.n);
    } else if (tables->parsed()) {
      command = "tables";
      payload = tables_payload(o.n);
    } else if (verify->parsed()) {
      command = "verify";
      payload = verify_payload(o.n, o.max_r, o.oracle);
      verification_failed = !payload["passed"].get<bool>();
    } else if (mc->parsed()) {
      command = "mc";
      MomentSpec spec;
      spec.n = o.n;
      spec.d = o.d;
      spec.i = parse_indices("--i", o.i);
      spec.j = parse_indices("--j", o.j);
      spec.iprime = parse_indices("--iprime", o.iprime);
      spec.jprime = parse_indices("--jprime", o.jprime);
      payload = mc_payload(spec, o.samples, o.seed, o.workers);
    }

    switch (format) {
      case Format::text: render_text(command, payload, out, o.factored); break;
      case Format::json: render_json(command, payload, out); break;
      case Format::csv: render_csv(command, payload, out); break;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return verification_failed ? kExitVerificationFailed : kExitOk;
}

}  // namespace jmwg::cli
