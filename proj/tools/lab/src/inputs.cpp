#include "ncdiff/lab/inputs.hpp"

#include <charconv>
#include <vector>

#include "ncdiff/errors.hpp"
#include "ncdiff/spec_io.hpp"

namespace ncdiff::lab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw SpecError(std::string("bad ") + what + ": " + s);
  return v;
}

Vector parse_values(const Field& f, const std::string& s, std::size_t n) {
  const auto parts = split(s, ',');
  if (parts.size() != n) throw SpecError("character needs " + std::to_string(n) + " values");
  Vector v(f, n);
  try {
    for (std::size_t i = 0; i < n; ++i) v.set(i, f.parse(parts[i]));
  } catch (const Error& e) {
    throw SpecError(e.what());
  }
  return v;
}

}  // namespace

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.rfind("p:", 0) == 0) {
    try {
      return Field::prime(parse_count(text.substr(2), "prime"));
    } catch (const InvalidArgument& e) {
      throw SpecError(e.what());
    }
  }
  throw SpecError("field must be q or p:PRIME");
}

FiniteAlgebra resolve_algebra(const std::string& spec, std::optional<Field> field) {
  if (spec.rfind("catalog:", 0) == 0) {
    const auto parts = split(spec.substr(8), ':');
    if (parts.empty() || parts.size() > 2 || parts[0].empty()) throw SpecError("catalog spec is catalog:NAME[:PARAM]");
    const std::size_t param = parts.size() == 2 ? parse_count(parts[1], "catalog parameter") : 0;
    try {
      return catalog::by_name(parts[0], param, field.value_or(Field::rationals()));
    } catch (const InvalidArgument& e) {
      throw SpecError(e.what());
    }
  }
  return load_algebra(spec, field);
}

Bimodule resolve_module(const std::string& spec, const FiniteAlgebra& a) {
  if (spec == "regular") return regular_bimodule(a);
  if (spec == "zero") return zero_module(a);
  if (spec.rfind("free:", 0) == 0) return free_module(a, parse_count(spec.substr(5), "rank"));
  if (spec.rfind("char:", 0) == 0) {
    const auto sides = split(spec.substr(5), '/');
    if (sides.size() != 2) throw SpecError("character module spec is char:L/R");
    try {
      return character_bimodule(a, parse_values(a.field(), sides[0], a.dim()), parse_values(a.field(), sides[1], a.dim()));
    } catch (const InvalidArgument& e) {
      throw SpecError(e.what());
    }
  }
  return load_module(spec, a);
}

}  // namespace ncdiff::lab
