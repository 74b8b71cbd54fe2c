#pragma once

// JSON views of library types.

#include <json.hpp>

#include "brieskorn/einstein.hpp"
#include "brieskorn/invariants.hpp"
#include "brieskorn/tables.hpp"

namespace brieskorn {

nlohmann::ordered_json to_json(const GradedRanks& ranks);
nlohmann::ordered_json to_json(const SEReport& report);
nlohmann::ordered_json to_json(const ModuliReport& report);
nlohmann::ordered_json to_json(const LinkRecord& record);
nlohmann::ordered_json to_json(const MecCollision& group);

SEReport se_report_from_json(const nlohmann::ordered_json& j);
ModuliReport moduli_report_from_json(const nlohmann::ordered_json& j);
LinkRecord record_from_json(const nlohmann::ordered_json& j);

}  // namespace brieskorn
