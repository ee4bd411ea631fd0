#pragma once

#include <json.hpp>

#include "matchkit/bounds.hpp"
#include "matchkit/constructive.hpp"
#include "matchkit/gallai_edmonds.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/numbers.hpp"

namespace matchkit {

// Reports use insertion-ordered JSON so replays are byte-identical.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);        // {"num":..,"den":..}
std::string count_to_string(const BigCount& c);  // decimal, arbitrary precision
Rational rational_from_json(const Json& j);
/// Accepts "3/4", "5", or "0.25"-free integer ratios; exact only.
Rational parse_rational(const std::string& text);

Json matching_to_json(const Matching& m);  // sorted pair list
Json decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const Json& j);
Json verification_to_json(const VerificationReport& report);
Json bound_report_to_json(const BoundReport& report);
Json extraction_to_json(const ExtractionReport& report);
Json swap_family_to_json(const SwapFamily& fam);

}  // namespace matchkit
