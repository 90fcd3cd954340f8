#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ncdiff/linalg.hpp"

namespace ncdiff::lab {

using json = nlohmann::json;

json to_json(const Field& f, const mpq_class& x);
json to_json(const Vector& v);
json to_json(const Matrix& m);
/// {"ambient", "dim", "basis"}
json to_json(const Subspace& s);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical(const json& j);

}  // namespace ncdiff::lab
