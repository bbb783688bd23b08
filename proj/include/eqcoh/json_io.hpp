#pragma once

// JSON encodings shared by the command-line tool and the tests. Every report
// carries a "schema" field naming the versioned document in schemas/.

#include <json.hpp>

#include "eqcoh/affine_grassmannian.hpp"
#include "eqcoh/bb_theory.hpp"
#include "eqcoh/flag_instance.hpp"
#include "eqcoh/stratification.hpp"

namespace eqcoh::json_io {

using nlohmann::json;

/// Big integers become JSON numbers when they fit in 64 bits, strings otherwise.
json integer(const BigInt& c);
BigInt parse_integer(const json& j);

json vector(const std::vector<Int>& v);
std::vector<Int> parse_vector(const json& j);

/// {"theory", "rank", "terms": [{"exponents", "coeff"}], "text", ...}.
/// K adds "degree"; MU adds "truncation" and "precision" (null when exact).
json ring_element(const RingElement& e);
RingElement parse_ring_element(const json& j);

json model(const VarietyModel& m);
VarietyModel parse_model(const json& j);  // throws ParseError, then validate_model errors

/// {"labels", "covers": [[lower, upper]], "payload": {label: {"codim", "euler"}}}.
json poset(const StratumPoset& p);
StratumPoset parse_poset(const json& j);
/// Theory of the payload classes, H when there are none.
Theory poset_theory(const json& j);

json decomposition(const GradedModuleDecomposition& dec);
json weyl_report(const WeylGroup& weyl);
json flag_report(const FlagVariety& fv, const GradedModuleDecomposition& dec, const Coweight& lam);
json model_report(const GradedModuleDecomposition& dec, const Coweight& lam, const std::vector<std::string>& notes);
json poset_report(const GradedModuleDecomposition& dec, const std::vector<std::string>& order,
                  const std::vector<std::string>& notes);
json gr_report(const AffineGrassmannian& gr, int level);
json gr_limit_report(const LimitModulePresentation& p, bool commute);
json euler_report(Theory theory, std::size_t rank, const std::vector<Weight>& weights, const RingElement& cls);
json error_report(std::string_view code, std::string_view message);

}  // namespace eqcoh::json_io
