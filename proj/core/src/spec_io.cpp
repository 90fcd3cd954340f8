#include "ncdiff/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ncdiff/errors.hpp"

namespace ncdiff {

namespace {

using json = nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t as_index(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
    throw SpecError(std::string("bad ") + what + " index");
  return j.get<std::size_t>();
}

mpq_class as_scalar(const Field& f, const json& j) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.get<long>());
  } catch (const Error& e) {
    throw SpecError(std::string("bad scalar: ") + e.what());
  }
  throw SpecError("scalars must be \"p/q\" strings or integers");
}

std::optional<std::vector<int>> parity_of(const json& j, std::size_t dim) {
  if (!j.contains("parity") || j.at("parity").is_null()) return std::nullopt;
  const json& p = j.at("parity");
  if (!p.is_array() || p.size() != dim) throw SpecError("parity length must equal dim");
  std::vector<int> out;
  for (const auto& x : p) {
    if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1)) throw SpecError("parity entries are 0 or 1");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<Matrix> actions(const Field& f, const json& entries, std::size_t n, std::size_t m, const char* what) {
  std::vector<Matrix> out(n, Matrix(f, m, m));
  if (!entries.is_array()) throw SpecError(std::string(what) + " must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 4) throw SpecError(std::string(what) + " entries are [i, r, c, value]");
    const std::size_t i = as_index(e[0], n, "algebra basis");
    const std::size_t r = as_index(e[1], m, "row"), c = as_index(e[2], m, "column");
    out[i].set(r, c, out[i](r, c) + as_scalar(f, e[3]));
  }
  return out;
}

json triples(const Field& f, const std::vector<Matrix>& ms) {
  json out = json::array();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t r = 0; r < ms[i].rows(); ++r)
      for (std::size_t c = 0; c < ms[i].cols(); ++c)
        if (ms[i](r, c) != 0) out.push_back(json::array({i, r, c, f.format(ms[i](r, c))}));
  return out;
}

}  // namespace

FiniteAlgebra parse_algebra(const std::string& text, std::optional<Field> field) {
  const json j = parse_json(text);
  Field f;
  if (field) {
    f = *field;
  } else {
    const json& ch = need(j, "char");
    if (!ch.is_number_integer() || ch.get<long long>() < 0) throw SpecError("char must be 0 or a prime");
    try {
      f = ch.get<std::uint64_t>() == 0 ? Field::rationals() : Field::prime(ch.get<std::uint64_t>());
    } catch (const InvalidArgument& e) {
      throw SpecError(e.what());
    }
  }
  const json& dj = need(j, "dim");
  if (!dj.is_number_integer() || dj.get<long long>() <= 0) throw SpecError("dim must be a positive integer");
  const std::size_t n = dj.get<std::size_t>();
  if (!need(j, "name").is_string()) throw SpecError("name must be a string");
  const std::string name = j.at("name").get<std::string>();
  std::vector<std::string> basis;
  if (j.contains("basis")) {
    if (!j.at("basis").is_array() || j.at("basis").size() != n) throw SpecError("basis length must equal dim");
    for (const auto& b : j.at("basis")) {
      if (!b.is_string()) throw SpecError("basis names are strings");
      basis.push_back(b.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i));
  }
  const json& uj = need(j, "unit");
  if (!uj.is_array() || uj.size() != n) throw SpecError("unit length must equal dim");
  Vector unit(f, n);
  for (std::size_t i = 0; i < n; ++i) unit.set(i, as_scalar(f, uj[i]));
  std::vector<mpq_class> sc(n * n * n);
  const json& sj = need(j, "sc");
  if (!sj.is_array()) throw SpecError("sc must be an array");
  for (const auto& e : sj) {
    if (!e.is_array() || e.size() != 4) throw SpecError("sc entries are [i, j, k, value]");
    const std::size_t a = as_index(e[0], n, "sc"), b = as_index(e[1], n, "sc"), c = as_index(e[2], n, "sc");
    sc[(a * n + b) * n + c] += as_scalar(f, e[3]);
  }
  for (auto& x : sc) f.normalize(x);
  try {
    return FiniteAlgebra(f, name, basis, sc, unit, parity_of(j, n));
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(e.what());
  }
}

FiniteAlgebra load_algebra(const std::string& path, std::optional<Field> field) {
  return parse_algebra(read_file(path), field);
}

std::string algebra_to_json(const FiniteAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  json j;
  j["name"] = a.name();
  j["char"] = f.characteristic();
  j["dim"] = n;
  j["basis"] = a.basis_names();
  json unit = json::array();
  for (std::size_t i = 0; i < n; ++i) unit.push_back(f.format(a.unit()[i]));
  j["unit"] = unit;
  if (a.parity()) j["parity"] = *a.parity();
  json sc = json::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (a.sc(x, y, z) != 0) sc.push_back(json::array({x, y, z, f.format(a.sc(x, y, z))}));
  j["sc"] = sc;
  return j.dump(2) + "\n";
}

Bimodule parse_module(const std::string& text, const FiniteAlgebra& a) {
  const json j = parse_json(text);
  const json& an = need(j, "algebra");
  if (!an.is_string() || an.get<std::string>() != a.name())
    throw SpecError("module refers to algebra \"" + (an.is_string() ? an.get<std::string>() : std::string("?")) +
                    "\", loaded \"" + a.name() + "\"");
  const json& dj = need(j, "dim");
  if (!dj.is_number_integer() || dj.get<long long>() < 0) throw SpecError("dim must be a nonnegative integer");
  const std::size_t m = dj.get<std::size_t>();
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "P";
  const Field& f = a.field();
  auto left = actions(f, need(j, "left"), a.dim(), m, "left");
  auto right = actions(f, need(j, "right"), a.dim(), m, "right");
  try {
    return Bimodule(a, name, m, std::move(left), std::move(right), parity_of(j, m));
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(e.what());
  }
}

Bimodule load_module(const std::string& path, const FiniteAlgebra& a) { return parse_module(read_file(path), a); }

std::string module_to_json(const Bimodule& m) {
  const Field& f = m.field();
  json j;
  j["name"] = m.name();
  j["algebra"] = m.algebra().name();
  j["dim"] = m.dim();
  j["left"] = triples(f, m.left_actions());
  j["right"] = triples(f, m.right_actions());
  if (m.parity()) j["parity"] = *m.parity();
  return j.dump(2) + "\n";
}

}  // namespace ncdiff
