#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "conjugate/quantum.hpp"
#include "conjugate/sampling.hpp"
#include "conjugate/widths.hpp"

namespace conjugate {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "conjugate-bench/1";

Json to_json(const WidthReport& report);
Json to_json(const UncertaintyReport& report);
Json to_json(const CorpusAudit& audit);
Json to_json(const std::vector<BoundCheck>& sweep);
Json to_json(const SamplingScenario& scenario);
Json to_json(const AliasReport& report);
Json to_json(const PhysicalLimits& limits);
Json to_json(const ConjugatePair& pair);
Json to_json(const ReducedWavenumber& reduced, const BrillouinZone& zone);
Json to_json(const HydrogenicTransition& transition);
Json to_json(const PhysicalConstants& constants);

// Fields present in the document override `base`. A document that sets
// planck_h without hbar gets hbar = planck_h / (2 pi). Throws ParameterError
// on unknown fields, non-numeric values or a constant set that fails
// validate().
PhysicalConstants constants_from_json(const nlohmann::json& document, PhysicalConstants base = {});

// printf("%.15g"): 15 significant digits, lowercase exponent. Non-finite
// values have no JSON form and are written as null by dump().
std::string format_number(double value);

// Deterministic pretty printer: insertion-ordered keys, two-space indent,
// numbers through format_number, trailing newline.
std::string dump(const Json& document);

}  // namespace conjugate
