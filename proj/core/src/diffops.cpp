#include "ncdiff/diffops.hpp"

#include "ncdiff/errors.hpp"

namespace ncdiff {

const char* to_string(Definition d) {
  switch (d) {
    case Definition::grothendieck:
      return "grothendieck";
    case Definition::graded:
      return "graded";
    case Definition::dv_first_order:
      return "dv_first_order";
    case Definition::lunts_left:
      return "lunts_left";
    case Definition::lunts_right:
      return "lunts_right";
    case Definition::two_sided:
      return "two_sided";
  }
  return "?";
}

bool Filtration::monotone() const {
  for (std::size_t r = 1; r < terms.size(); ++r)
    if (!terms[r - 1].is_subspace_of(terms[r])) return false;
  return true;
}

namespace {

Filtration delta_chain(const HomSpace& h, std::size_t k, const std::vector<SparseMatrix>& ops, Definition def) {
  Filtration f{def, {}};
  Subspace prev = Subspace::zero(h.field(), h.dim());
  for (std::size_t j = 0; j <= k; ++j) {
    prev = preimage(ops, prev);
    f.terms.push_back(prev);
  }
  return f;
}

Subspace span_images(const std::vector<SparseMatrix>& ops, const Subspace& s, const Subspace& base) {
  EchelonBasis e = base.echelon();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vector v = s.basis_vector(i);
    for (const auto& op : ops) e.insert(op.apply(v));
  }
  return Subspace::from_echelon(e);
}

std::vector<SparseMatrix> concat(const std::vector<SparseMatrix>& a, const std::vector<SparseMatrix>& b) {
  std::vector<SparseMatrix> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

Filtration grothendieck_chain(const HomSpace& h, std::size_t k) {
  return delta_chain(h, k, h.deltas(), Definition::grothendieck);
}

DiffSpace grothendieck_diff(const HomSpace& h, std::size_t k) {
  return {Definition::grothendieck, k, grothendieck_chain(h, k).terms.back(), !h.algebra().is_commutative()};
}

Filtration graded_chain(const HomSpace& h, std::size_t k) {
  return delta_chain(h, k, h.graded_deltas(), Definition::graded);
}

DiffSpace graded_diff(const HomSpace& h, std::size_t k) {
  return {Definition::graded, k, graded_chain(h, k).terms.back(), false};
}

Subspace left_zero_order(const HomSpace& h) { return preimage(h.deltas(), Subspace::zero(h.field(), h.dim())); }

Subspace right_zero_order(const HomSpace& h) {
  return preimage(h.bar_deltas(), Subspace::zero(h.field(), h.dim()));
}

Subspace bimodule_maps(const HomSpace& h) {
  return preimage(concat(h.deltas(), h.bar_deltas()), Subspace::zero(h.field(), h.dim()));
}

DiffSpace dv_first_order(const HomSpace& h) {
  // delta_a bar_delta_b Phi = 0 for all a  <=>  bar_delta_b Phi is left A-linear
  return {Definition::dv_first_order, 1, preimage(h.bar_deltas(), left_zero_order(h)), false};
}

DvSplit dv_split(const HomSpace& h, const Matrix& delta) {
  const Vector flat = h.flatten(delta);
  if (!dv_first_order(h).space.contains(flat)) throw NotMember("operator is not first order in the dv sense");
  const FiniteAlgebra& a = h.algebra();
  const std::size_t n = a.dim();
  DvSplit out;
  for (std::size_t i = 0; i < n; ++i) {
    out.forward.push_back(h.unflatten(h.deltas()[i].apply(flat).scaled(-1)));
    out.backward.push_back(h.unflatten(h.bar_deltas()[i].apply(flat).scaled(-1)));
  }
  out.forward_right_linear = out.backward_left_linear = true;
  out.forward_leibniz = out.backward_leibniz = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector f = h.flatten(out.forward[i]);
    const Vector b = h.flatten(out.backward[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (!h.bar_deltas()[j].apply(f).is_zero()) out.forward_right_linear = false;
      if (!h.deltas()[j].apply(b).is_zero()) out.backward_left_linear = false;
    }
  }
  auto combo = [&](const std::vector<Matrix>& parts, const Vector& x) {
    Matrix m(h.field(), h.target().dim(), h.source().dim());
    for (std::size_t k = 0; k < n; ++k)
      if (x[k] != 0) m = m + parts[k].scaled(x[k]);
    return h.flatten(m);
  };
  for (std::size_t i = 0; i < n && (out.forward_leibniz || out.backward_leibniz); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ab = a.multiply(a.basis(i), a.basis(j));
      // forward(ab) = forward(a) . b + a forward(b)
      const Vector lhs_f = combo(out.forward, ab);
      const Vector rhs_f = h.left_bullets()[j].apply(h.flatten(out.forward[i])) +
                           h.lefts()[i].apply(h.flatten(out.forward[j]));
      if (!(lhs_f == rhs_f)) out.forward_leibniz = false;
      // backward(ab) = backward(a) b + a . backward(b)
      const Vector lhs_b = combo(out.backward, ab);
      const Vector rhs_b = h.rights()[j].apply(h.flatten(out.backward[i])) +
                           h.right_bullets()[i].apply(h.flatten(out.backward[j]));
      if (!(lhs_b == rhs_b)) out.backward_leibniz = false;
    }
  }
  out.reconstruction = true;
  const Bimodule& p = h.source();
  const Bimodule& q = h.target();
  for (std::size_t i = 0; i < n && out.reconstruction; ++i) {
    for (std::size_t pc = 0; pc < p.dim() && out.reconstruction; ++pc) {
      const Vector pv = Vector::unit(h.field(), p.dim(), pc);
      for (std::size_t j = 0; j < n; ++j) {
        const Vector apb = p.left(i) * (p.right(j) * pv);
        const Vector lhs = delta * apb;
        const Vector rhs = q.right(j) * (out.forward[i] * pv) + q.left(i) * (q.right(j) * (delta * pv)) +
                           q.left(i) * (out.backward[j] * pv);
        if (!(lhs == rhs)) {
          out.reconstruction = false;
          break;
        }
      }
    }
  }
  return out;
}

Filtration lunts_filtration(const HomSpace& h, std::size_t r, Side side, LuntsForm form) {
  const bool left = side == Side::left;
  const auto& ops = left ? h.deltas() : h.bar_deltas();
  const auto& mult = left ? h.lefts() : h.rights();
  const auto gens = left ? concat(h.lefts(), h.left_bullets()) : concat(h.rights(), h.right_bullets());
  Filtration f{left ? Definition::lunts_left : Definition::lunts_right, {}};
  Subspace prev = Subspace::zero(h.field(), h.dim());
  for (std::size_t j = 0; j <= r; ++j) {
    const Subspace z = preimage(ops, prev);
    prev = form == LuntsForm::closure ? closure(z, gens) : span_images(mult, z, prev);
    f.terms.push_back(prev);
  }
  return f;
}

TwoSidedFiltration two_sided_filtration(const HomSpace& h, std::size_t r) {
  TwoSidedFiltration out{{Definition::two_sided, {}}, false};
  const Subspace l0 = lunts_filtration(h, 0, Side::left)[0];
  const Subspace r0 = lunts_filtration(h, 0, Side::right)[0];
  out.zero_order_union_is_subspace = l0.is_subspace_of(r0) || r0.is_subspace_of(l0);
  Subspace prev = sum(l0, r0);
  out.filtration.terms.push_back(prev);
  for (std::size_t j = 1; j <= r; ++j) {
    const Subspace lr = span_images(h.lefts(), preimage(h.deltas(), prev), prev);
    const Subspace rr = span_images(h.rights(), preimage(h.bar_deltas(), prev), prev);
    prev = intersect(lr, rr);
    out.filtration.terms.push_back(prev);
  }
  return out;
}

bool composition_order_check(const HomSpace& h, const Filtration& lunts, const Matrix& delta1, std::size_t n,
                             const Matrix& delta2, std::size_t m) {
  if (h.source().dim() != h.target().dim()) throw InvalidArgument("composition needs endomorphisms");
  if (lunts.top() < n + m) throw InvalidArgument("filtration does not reach the composite order");
  if (!lunts[n].contains(h.flatten(delta1))) throw NotMember("first operator is not of the stated order");
  if (!lunts[m].contains(h.flatten(delta2))) throw NotMember("second operator is not of the stated order");
  return lunts[n + m].contains(h.flatten(delta1 * delta2));
}

bool Comparison::all_equal() const {
  for (const auto& row : relation)
    for (auto r : row)
      if (r != Inclusion::equal) return false;
  return true;
}

std::optional<Vector> witness_outside(const Subspace& a, const Subspace& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector v = a.basis_vector(i);
    if (!b.contains(v)) return v;
  }
  return std::nullopt;
}

Comparison compare_definitions(const HomSpace& h, std::size_t order) {
  Comparison c;
  c.order = order;
  c.names.push_back("grothendieck");
  c.spaces.push_back(grothendieck_diff(h, order).space);
  const bool graded = h.algebra().is_graded() && h.source().is_graded() && h.target().is_graded() &&
                      h.field().characteristic() != 2;
  if (graded) {
    c.names.push_back("graded");
    c.spaces.push_back(graded_diff(h, order).space);
  }
  if (order == 1) {
    c.names.push_back("dv_first_order");
    c.spaces.push_back(dv_first_order(h).space);
  }
  c.names.push_back("lunts_left");
  c.spaces.push_back(lunts_filtration(h, order, Side::left)[order]);
  c.names.push_back("lunts_right");
  c.spaces.push_back(lunts_filtration(h, order, Side::right)[order]);
  const TwoSidedFiltration ts = two_sided_filtration(h, order);
  c.names.push_back("two_sided");
  c.spaces.push_back(ts.filtration[order]);
  c.union_is_subspace = ts.zero_order_union_is_subspace;
  const std::size_t k = c.spaces.size();
  c.relation.assign(k, std::vector<Inclusion>(k, Inclusion::equal));
  c.witness.assign(k, std::vector<std::optional<Vector>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      c.relation[i][j] = compare(c.spaces[i], c.spaces[j]);
      c.witness[i][j] = witness_outside(c.spaces[i], c.spaces[j]);
    }
  }
  return c;
}

}  // namespace ncdiff
