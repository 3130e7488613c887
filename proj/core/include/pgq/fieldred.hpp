#pragma once

// Field reduction PG(1,q^t) -> PG(2t-1,q): the Desarguesian (t-1)-spread,
// the B(.) operator, transversal (indicator) frames, and the subgeometry
// chart onto P_x labels.
//
// Ambient coordinates are two blocks of t: the point of PG(1,q^t) with
// homogeneous pair (a:b) has body { (vec(ya) | vec(yb)) : y in GF(q^t)* },
// where vec expands over the basis (1, omega, ..., omega^(t-1)).

#include <cstdint>
#include <utility>
#include <vector>

#include "pgq/extlinalg.hpp"
#include "pgq/gfield.hpp"
#include "pgq/projspace.hpp"

namespace pgq::spread {

using gf::Tower;
using gf::elt;
using pg::PGSpace;
using pg::Row;
using pg::Subspace;

struct WeightedLabel {
  std::uint32_t label;
  int weight;
  bool operator==(const WeightedLabel& o) const = default;
};

class Spread {
 public:
  explicit Spread(const Tower& tw);

  const Tower& tower() const { return *tw_; }
  const PGSpace& space() const { return space_; }
  int n() const { return 2 * static_cast<int>(tw_->t()) - 1; }
  std::uint64_t q() const { return tw_->q(); }
  unsigned t() const { return tw_->t(); }

  // labels: id y in [0, Q) is (1 : y); id Q is (0 : 1) -- Q = q^t.
  // P_infinity of the studied line is (1 : 0), id 0.
  std::uint32_t label_count() const { return static_cast<std::uint32_t>(tw_->big().order()) + 1; }
  std::pair<elt, elt> label(std::uint32_t id) const;
  std::uint32_t id_of(elt a, elt b) const;
  std::uint32_t pinf_id() const { return 0; }

  Subspace body(std::uint32_t id) const;
  // spread element containing the point (dense table over point indices)
  std::uint32_t lookup(const std::uint8_t* coords) const;
  std::uint32_t lookup_index(std::uint64_t point_index) const { return table_[point_index]; }

  std::pair<elt, elt> coords_pair(const std::uint8_t* coords) const;  // (A,B) over GF(q^t)

  // weights of B(pi): every returned element meets pi; weight w means the
  // intersection has projective dimension w-1. Sorted by label id.
  std::vector<WeightedLabel> b_of(const Subspace& pi) const;

  // the t conjugate frame points of the element, rows over GF(q^t) of width
  // 2t; row i+1 is the coordinatewise q-th power of row i (cyclically)
  std::vector<ext::EVec> frame(std::uint32_t id) const;
  // dual basis rows w*_i of the covectors u_i = (1, w^{q^i}, ..., w^{(t-1)q^i})
  const ext::EMat& dual_basis() const { return wstar_; }
  // multiplication-by-omega matrix on vec coordinates (GF(q) entries)
  const ext::EMat& omega_matrix() const { return omega_mat_; }

  // subgeometry chart of an element: a point of body(id) is vecimg(y*(a,b));
  // multiplier_of returns that y (pinned by the normalized row), and the
  // chart sends it to the P_x label class with x = 1/y.
  elt multiplier_of(std::uint32_t id, const std::uint8_t* coords) const;
  Row point_of_multiplier(std::uint32_t id, elt y) const;
  elt chart_label(std::uint32_t id, const std::uint8_t* coords) const;

  // D_s classes of GF(q^t)* labels: x ~ y iff x/y in GF(q^s)
  bool same_subspread_class(elt x, elt y, unsigned s) const;
  elt subspread_rep(elt x, unsigned s) const;  // least element of x * GF(q^s)*

  // conjugate frame of the D_k sub-element through multiplier y inside the
  // element: k rows over GF(q^t), Frobenius-cyclic
  std::vector<ext::EVec> subelement_frame(std::uint32_t id, elt y, unsigned k) const;

 private:
  const Tower* tw_;
  PGSpace space_;
  std::vector<std::uint32_t> table_;  // normalized point index -> label id
  ext::EMat wstar_;                   // t x t dual-basis rows over GF(q^t)
  ext::EMat omega_mat_;               // t x t over GF(q) (codes embedded as big elts)
};

}  // namespace pgq::spread
