#pragma once

#include <optional>
#include <string>

#include "ncdiff/algebra.hpp"
#include "ncdiff/bimodule.hpp"

namespace ncdiff::lab {

/// "q" or "p:PRIME". Throws SpecError.
Field parse_field(const std::string& text);

/// A JSON spec path or "catalog:NAME[:PARAM]". Throws SpecError.
FiniteAlgebra resolve_algebra(const std::string& spec, std::optional<Field> field = std::nullopt);

/// "regular", "free:K", "zero", "char:L/R" (comma-separated character
/// values on the basis, e.g. char:1,0,0/0,0,1), or a module JSON path.
Bimodule resolve_module(const std::string& spec, const FiniteAlgebra& a);

}  // namespace ncdiff::lab
