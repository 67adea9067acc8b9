#pragma once

#include <json.hpp>
#include <ostream>
#include <string>

#include "jmwg/characters.hpp"
#include "jmwg/haar_mc.hpp"
#include "jmwg/jm_expansion.hpp"
#include "jmwg/polynomial.hpp"

namespace jmwg::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(const std::string& text);

// Exact scalars travel as decimal strings.
Json central_to_json(const CentralElement& f);
CentralElement central_from_json(int n, const Json& coeffs);

Json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& coeffs);

// Payload builders. Every renderer below reads only the payload.
Json classes_payload(SymKind kind, int n, int r);
Json oracle_payload(SymKind kind, int n, int r);
Json wg_payload(int n, const Partition& mu);
Json wg_series_payload(int n, const Partition& mu, int order);
Json moebius_payload(const Partition& mu);
Json chartable_payload(int n);
Json tables_payload(int n);
Json mc_payload(const MomentSpec& spec, std::uint64_t samples, std::uint64_t seed, int workers);
/// Runs every exact suite for n (and the oracle suites when asked); the
/// payload carries "passed".
Json verify_payload(int n, int max_r, bool oracle);

/// "1/d^3 + 3/d^5 - 1/d^7 + O(1/d^9)"
std::string series_text(const Json& coefficients, int offset);

void render_text(const std::string& command, const Json& payload, std::ostream& out, bool factored = false);
void render_csv(const std::string& command, const Json& payload, std::ostream& out);
void render_json(const std::string& command, const Json& payload, std::ostream& out);

}  // namespace jmwg::cli
