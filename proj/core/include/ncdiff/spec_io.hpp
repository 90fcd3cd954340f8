#pragma once

#include <optional>
#include <string>

#include "ncdiff/algebra.hpp"
#include "ncdiff/bimodule.hpp"

namespace ncdiff {

/// Algebra spec JSON:
///   {"name", "char": 0 | p, "dim", "basis": [names], "unit": ["p/q", ...],
///    "parity": [0|1, ...] (optional), "sc": [[i, j, k, "p/q"], ...]}
/// Omitted structure constants are zero. Numbers may also be JSON integers.
/// Structural problems raise SpecError; the algebra axioms are not checked
/// here (see FiniteAlgebra::validate).
/// `field` overrides "char" when given.
FiniteAlgebra parse_algebra(const std::string& json, std::optional<Field> field = std::nullopt);
FiniteAlgebra load_algebra(const std::string& path, std::optional<Field> field = std::nullopt);
/// Canonical text: sorted keys, sc triples in index order, nonzero only.
std::string algebra_to_json(const FiniteAlgebra& a);

/// Module spec JSON:
///   {"name", "algebra": algebra name, "dim",
///    "left": [[i, r, c, "p/q"], ...], "right": [[i, r, c, "p/q"], ...],
///    "parity": optional}
/// Entry (i, r, c) is row r, column c of the action matrix of e_i.
Bimodule parse_module(const std::string& json, const FiniteAlgebra& a);
Bimodule load_module(const std::string& path, const FiniteAlgebra& a);
std::string module_to_json(const Bimodule& m);

}  // namespace ncdiff
