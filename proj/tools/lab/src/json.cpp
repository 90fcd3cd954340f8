#include "ncdiff/lab/json.hpp"

namespace ncdiff::lab {

json to_json(const Field& f, const mpq_class& x) { return f.format(x); }

json to_json(const Vector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v.field().format(v[i]));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis_vectors()) basis.push_back(to_json(v));
  return {{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ncdiff::lab
