#pragma once

#include <nlohmann/json.hpp>

#include "lapdom/verify.hpp"

namespace lapdom {

/// Integers serialize as JSON integers, other rationals as doubles.
nlohmann::json rational_json(const Rational& q);

void to_json(nlohmann::json& j, const GraphClass& cls);
void to_json(nlohmann::json& j, const Check& check);
/// {graph_id, n, m, class, checks, all_pass}.
void to_json(nlohmann::json& j, const TheoremReport& report);

}  // namespace lapdom
