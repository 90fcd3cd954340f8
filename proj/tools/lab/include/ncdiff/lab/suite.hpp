#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncdiff/field.hpp"
#include "ncdiff/lab/scenario.hpp"

namespace ncdiff::lab {

/// Built-in scenarios over the given field, in fixed order. Inputs are
/// resolved lazily inside the checks.
std::vector<Scenario> builtin_suite(const Field& field = Field::rationals());
std::vector<std::string> scenario_ids();
std::optional<Scenario> find_scenario(const std::string& id, const Field& field = Field::rationals());

}  // namespace ncdiff::lab
