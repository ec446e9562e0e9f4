#pragma once

#include <json.hpp>

#include "polyrec/oracle.hpp"

namespace polyrec {

using json = nlohmann::json;

// all coefficients travel as decimal strings (they outgrow 64 bits quickly)
json coeffs_to_json(const std::vector<Int>& coeffs);
std::vector<Int> coeffs_from_json(const json& j);

json deck_to_json(const Deck& d);
Deck deck_from_json(const json& j);

json outcome_to_json(const ReconstructionOutcome& out);
json sweep_report_to_json(const SweepReport& report);
json collision_report_to_json(const CollisionReport& report);

}  // namespace polyrec
