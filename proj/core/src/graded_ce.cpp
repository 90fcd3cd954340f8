#include "ncdiff/graded_ce.hpp"

#include <algorithm>

#include "ncdiff/errors.hpp"

namespace ncdiff {

GradedCEComplex::GradedCEComplex(const FiniteAlgebra& a, std::size_t max_degree)
    : a_(a), max_degree_(max_degree), der_(ncdiff::derivations(a, true)) {
  if (!a_.is_graded_commutative()) throw InvalidArgument("graded CE complex needs a graded commutative algebra");
  if (max_degree_ > 4) throw InvalidArgument("graded CE degree cap is 4");
  u_ = der_.basis_maps();
  const std::size_t m = u_.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const bool odd = der_.parities[i] * der_.parities[j] == 1;
      bracket_.push_back(der_.coordinates(odd ? u_[i] * u_[j] + u_[j] * u_[i] : u_[i] * u_[j] - u_[j] * u_[i]));
    }
  }
  build_tuples();
  for (std::size_t k = 0; k < max_degree_; ++k) build_coboundary(k);
  for (std::size_t k = 0; k <= max_degree_; ++k) build_forms(k);
}

std::pair<int, std::vector<std::size_t>> GradedCEComplex::normal(const std::vector<std::size_t>& tuple) const {
  std::vector<std::size_t> t = tuple;
  int sign = 1;
  auto key = [this](std::size_t l) { return std::pair{der_.parities[l], l}; };
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y + 1 < t.size() - x; ++y) {
      if (key(t[y]) > key(t[y + 1])) {
        // swapping x, y costs -(-1)^{[x][y]}
        if (der_.parities[t[y]] * der_.parities[t[y + 1]] == 0) sign = -sign;
        std::swap(t[y], t[y + 1]);
      }
    }
  }
  for (std::size_t y = 0; y + 1 < t.size(); ++y)
    if (t[y] == t[y + 1] && der_.parities[t[y]] == 0) return {0, t};
  return {sign, t};
}

void GradedCEComplex::build_tuples() {
  const std::size_t m = u_.size();
  tuples_.assign(max_degree_ + 2, {});
  index_.assign(max_degree_ + 2, {});
  for (std::size_t k = 0; k <= max_degree_ + 1; ++k) {
    std::vector<std::size_t> t(k, 0);
    const bool empty = m == 0 && k > 0;
    while (!empty) {
      auto [s, nt] = normal(t);
      if (s != 0 && nt == t) {
        index_[k][t] = tuples_[k].size();
        tuples_[k].push_back(t);
      }
      std::size_t p = k;
      while (p > 0 && ++t[p - 1] == m) t[--p] = 0;
      if (p == 0) break;
    }
  }
}

std::size_t GradedCEComplex::tuple_index(std::size_t k, const std::vector<std::size_t>& t) const {
  return index_.at(k).at(t);
}

Vector GradedCEComplex::evaluate(const Vector& c, const std::vector<std::size_t>& tuple) const {
  const std::size_t n = a_.dim(), k = tuple.size();
  if (c.size() != cochain_dim(k)) throw DimensionMismatch("cochain degree does not match the tuple");
  Vector out(a_.field(), n);
  auto [s, nt] = normal(tuple);
  if (s == 0) return out;
  const std::size_t b = tuple_index(k, nt);
  for (std::size_t t = 0; t < n; ++t) out.set(t, s * c[b * n + t]);
  return out;
}

void GradedCEComplex::build_coboundary(std::size_t k) {
  const std::size_t n = a_.dim(), m = u_.size();
  SparseMatrix d(a_.field(), cochain_dim(k + 1), cochain_dim(k));
  // adds coef * c(tuple)[t] into output row (b, t) for every t
  auto add_eval = [&](std::size_t b, const std::vector<std::size_t>& tuple, const mpq_class& coef) {
    auto [s, nt] = normal(tuple);
    if (s == 0) return;
    const std::size_t src = tuple_index(k, nt);
    for (std::size_t t = 0; t < n; ++t) d.add(b * n + t, src * n + t, s * coef);
  };
  // adds coef * u(c(tuple)) into row block b
  auto add_act = [&](std::size_t b, const Matrix& u, const std::vector<std::size_t>& tuple, const mpq_class& coef) {
    auto [s, nt] = normal(tuple);
    if (s == 0) return;
    const std::size_t src = tuple_index(k, nt);
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t q = 0; q < n; ++q)
        if (u(t, q) != 0) d.add(b * n + t, src * n + q, s * coef * u(t, q));
  };
  auto add_bracket = [&](std::size_t b, std::size_t x, std::size_t y, std::vector<std::size_t> rest,
                         const mpq_class& coef) {
    const Vector& c = bracket_[x * m + y];
    rest.insert(rest.begin(), 0);
    for (std::size_t l = 0; l < m; ++l) {
      if (c[l] == 0) continue;
      rest[0] = l;
      add_eval(b, rest, coef * c[l]);
    }
  };
  for (std::size_t b = 0; b < tuples_[k + 1].size(); ++b) {
    const auto& tup = tuples_[k + 1][b];
    std::vector<std::size_t> ev, od;
    for (auto l : tup) (der_.parities[l] ? od : ev).push_back(l);
    const std::size_t r = ev.size(), s = od.size();
    auto without = [](const std::vector<std::size_t>& v, std::size_t i) {
      auto w = v;
      w.erase(w.begin() + i);
      return w;
    };
    auto join = [](std::vector<std::size_t> x, const std::vector<std::size_t>& y) {
      x.insert(x.end(), y.begin(), y.end());
      return x;
    };
    for (std::size_t i = 0; i < r; ++i) add_act(b, u_[ev[i]], join(without(ev, i), od), i % 2 ? -1 : 1);
    for (std::size_t j = 0; j < s; ++j) add_act(b, u_[od[j]], join(ev, without(od, j)), r % 2 ? -1 : 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        add_bracket(b, ev[i], ev[j], join(without(without(ev, j), i), od), (i + j) % 2 ? -1 : 1);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j) add_bracket(b, od[i], od[j], join(ev, without(without(od, j), i)), -1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < s; ++j)
        add_bracket(b, ev[i], od[j], join(without(ev, i), without(od, j)), (i + r) % 2 ? -1 : 1);
  }
  d.compress();
  d_.push_back(std::move(d));
}

void GradedCEComplex::build_forms(std::size_t k) {
  const Field& f = a_.field();
  const std::size_t n = a_.dim(), m = u_.size(), dim = cochain_dim(k);
  if (k == 0 || dim == 0) {
    forms_.push_back(Subspace::full(f, dim));
    return;
  }
  // a u_l in the derivation basis
  std::vector<Vector> au(n * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t l = 0; l < m; ++l) au[a * m + l] = der_.coordinates(a_.left_mult(a) * u_[l]);
  EchelonBasis rows(f, dim);
  // permuting the trailing arguments only flips the sign of a row, so the
  // rest runs over normal (k-1)-tuples
  for (std::size_t first = 0; first < m; ++first) {
    for (const auto& rest : tuples_[k - 1]) {
      std::vector<std::size_t> tup{first};
      tup.insert(tup.end(), rest.begin(), rest.end());
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t out = 0; out < n; ++out) {
          Vector row(f, dim);
          // c(a u_1, rest) - a c(u_1, rest)
          const Vector& c = au[a * m + first];
          for (std::size_t l = 0; l < m; ++l) {
            if (c[l] == 0) continue;
            auto t2 = tup;
            t2[0] = l;
            auto [s, nt] = normal(t2);
            if (s != 0) row.add_scaled_at(tuple_index(k, nt) * n + out, s * c[l]);
          }
          auto [s, nt] = normal(tup);
          if (s != 0)
            for (std::size_t t = 0; t < n; ++t)
              if (a_.sc(a, t, out) != 0) row.add_scaled_at(tuple_index(k, nt) * n + t, -s * a_.sc(a, t, out));
          if (!row.is_zero()) rows.insert(row);
        }
      }
    }
  }
  forms_.push_back(kernel_of_rows(rows));
}

bool GradedCEComplex::dd_vanishes(std::size_t k) const {
  if (k + 2 > max_degree_) throw InvalidArgument("dd check exceeds the degree cap");
  const Subspace& s = linear_forms(k);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!d(d(s.basis_vector(i), k), k + 1).is_zero()) return false;
  return true;
}

bool GradedCEComplex::d_preserves_forms(std::size_t k) const {
  const Subspace& s = linear_forms(k);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!linear_forms(k + 1).contains(d(s.basis_vector(i), k))) return false;
  return true;
}

}  // namespace ncdiff
