#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncdiff/homspace.hpp"

namespace ncdiff {

enum class Definition { grothendieck, graded, dv_first_order, lunts_left, lunts_right, two_sided };
const char* to_string(Definition d);

enum class Side { left, right };

struct DiffSpace {
  Definition definition;
  std::size_t order = 0;
  Subspace space;
  /// Grothendieck's condition over a noncommutative algebra.
  bool naive = false;
};

/// Increasing chain of subspaces; terms[r] is the order-r piece.
struct Filtration {
  Definition definition;
  std::vector<Subspace> terms;
  const Subspace& operator[](std::size_t r) const { return terms.at(r); }
  std::size_t top() const { return terms.size() - 1; }
  bool monotone() const;
};

/// Diff_k: all (k+1)-fold composites of basis deltas vanish. Built as the
/// chain Diff_j = {Phi : delta_i Phi in Diff_{j-1} for all i}.
DiffSpace grothendieck_diff(const HomSpace& h, std::size_t k);
/// Diff_0 .. Diff_k.
Filtration grothendieck_chain(const HomSpace& h, std::size_t k);
DiffSpace graded_diff(const HomSpace& h, std::size_t k);
Filtration graded_chain(const HomSpace& h, std::size_t k);

/// {Delta : delta_a bar_delta_b Delta = 0 for all a, b}.
DiffSpace dv_first_order(const HomSpace& h);
/// Maps killed by every delta (left A-linear), resp. every bar delta.
Subspace left_zero_order(const HomSpace& h);
Subspace right_zero_order(const HomSpace& h);
/// Bimodule morphisms.
Subspace bimodule_maps(const HomSpace& h);

/// The two halves of a first-order operator in the dv sense:
/// forward[a](p) = Delta(ap) - a Delta(p), backward[b](p) = Delta(pb) - Delta(p) b.
struct DvSplit {
  std::vector<Matrix> forward;
  std::vector<Matrix> backward;
  bool forward_right_linear = false;
  bool backward_left_linear = false;
  bool forward_leibniz = false;
  bool backward_leibniz = false;
  /// Delta(apb) = forward[a](p) b + a Delta(p) b + a backward[b](p) on all basis triples.
  bool reconstruction = false;
  bool ok() const {
    return forward_right_linear && backward_left_linear && forward_leibniz && backward_leibniz && reconstruction;
  }
};
/// Throws NotMember if Delta is not first order in the dv sense.
DvSplit dv_split(const HomSpace& h, const Matrix& delta);

enum class LuntsForm {
  /// I_r = closure of {Phi : delta_i Phi in I_{r-1}} under the two actions.
  closure,
  /// I_r = span{b Phi : delta_i Phi in I_{r-1}} + I_{r-1}.
  representatives,
};
Filtration lunts_filtration(const HomSpace& h, std::size_t r, Side side, LuntsForm form = LuntsForm::closure);

struct TwoSidedFiltration {
  Filtration filtration;
  /// Whether left-zero-order union right-zero-order is already a subspace
  /// (one contains the other); otherwise TS_0 is the span of the union.
  bool zero_order_union_is_subspace = false;
};
TwoSidedFiltration two_sided_filtration(const HomSpace& h, std::size_t r);

/// Checks Delta1 o Delta2 in I_{n+m} for left Lunts operators on the
/// regular bimodule. `lunts` must reach order n + m. Throws NotMember when
/// Delta1 is not in I_n or Delta2 is not in I_m.
bool composition_order_check(const HomSpace& h, const Filtration& lunts, const Matrix& delta1, std::size_t n,
                             const Matrix& delta2, std::size_t m);

/// Pairwise set relations between the applicable definitions at one order.
struct Comparison {
  std::size_t order = 0;
  std::vector<std::string> names;
  std::vector<Subspace> spaces;
  /// relation[i][j] relates spaces[i] to spaces[j]
  std::vector<std::vector<Inclusion>> relation;
  /// witness[i][j]: an element of spaces[i] outside spaces[j], if any
  std::vector<std::vector<std::optional<Vector>>> witness;
  bool union_is_subspace = true;
  bool all_equal() const;
};
/// Includes graded Diff_k when algebra and modules are graded, and the dv
/// space when order == 1.
Comparison compare_definitions(const HomSpace& h, std::size_t order);

/// First basis vector of a lying outside b.
std::optional<Vector> witness_outside(const Subspace& a, const Subspace& b);

}  // namespace ncdiff
