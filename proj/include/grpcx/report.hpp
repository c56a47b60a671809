#pragma once

#include <string>

#include <json.hpp>

#include "grpcx/measures.hpp"

namespace grpcx
{

// Each level lists the generators of V_i (1-based cycle strings) and the
// quotient V_i / V_{i-1}.
nlohmann::json to_json(Decomposition const &d);
nlohmann::json to_json(MeasureReport const &r, bool witnesses = true);
std::string to_table(MeasureReport const &r, bool witnesses = false);
std::string to_table(Decomposition const &d);

} // namespace grpcx
