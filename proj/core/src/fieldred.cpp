#include "pgq/fieldred.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgq::spread {

Spread::Spread(const Tower& tw) : tw_(&tw), space_(tw.sub(), 2 * tw.t() - 1) {
  const gf::Field& B = tw.big();
  const unsigned t = tw.t();

  // dense lookup: normalized point index -> label id
  table_.assign(space_.point_count(), 0);
  for (std::uint64_t i = 0; i < space_.point_count(); ++i) {
    Row p = space_.point_at(i);
    auto [A, Bv] = coords_pair(p.data());
    table_[i] = id_of(A, Bv);
  }

  // covectors u_i = (1, w^{q^i}, ..., w^{(t-1)q^i}); dual-basis rows w*_i
  ext::EMat U(t, ext::EVec(t));
  for (unsigned i = 0; i < t; ++i) {
    elt wi = tw.frob(tw.omega(), i);
    elt acc = 1;
    for (unsigned j = 0; j < t; ++j) {
      U[i][j] = acc;
      acc = B.mul(acc, wi);
    }
  }
  // w*-rows satisfy z = sum_i <z,u_i> w*_i, i.e. W = (U^T)^{-1}
  ext::EMat Ut(t, ext::EVec(t));
  for (unsigned i = 0; i < t; ++i)
    for (unsigned j = 0; j < t; ++j) Ut[i][j] = U[j][i];
  auto inv = ext::invert(B, Ut);
  if (!inv) throw std::logic_error("tower basis covectors are degenerate");
  wstar_ = *inv;

  // multiplication-by-omega matrix: row j = vec(omega^{j+1}) as big elements
  omega_mat_.assign(t, ext::EVec(t));
  elt wp = tw.omega();
  for (unsigned j = 0; j < t; ++j) {
    auto v = tw.decompose(wp);
    for (unsigned c = 0; c < t; ++c) omega_mat_[j][c] = tw.embed(v[c]);
    wp = B.mul(wp, tw.omega());
  }
}

std::pair<elt, elt> Spread::label(std::uint32_t id) const {
  const std::uint64_t Q = tw_->big().order();
  if (id < Q) return {1, id};
  if (id == Q) return {0, 1};
  throw std::out_of_range("label id");
}

std::uint32_t Spread::id_of(elt a, elt b) const {
  const std::uint64_t Q = tw_->big().order();
  if (a) return static_cast<std::uint32_t>(tw_->big().div(b, a));
  if (b) return static_cast<std::uint32_t>(Q);
  throw std::invalid_argument("zero pair is not a projective point");
}

std::pair<elt, elt> Spread::coords_pair(const std::uint8_t* c) const {
  const unsigned t = tw_->t();
  std::vector<elt> x(t), y(t);
  for (unsigned j = 0; j < t; ++j) {
    x[j] = c[j];
    y[j] = c[t + j];
  }
  return {tw_->recompose(x), tw_->recompose(y)};
}

Subspace Spread::body(std::uint32_t id) const {
  auto [a, b] = label(id);
  const gf::Field& B = tw_->big();
  const unsigned t = tw_->t();
  std::vector<Row> rows;
  elt wp = 1;
  for (unsigned j = 0; j < t; ++j) {
    auto vx = tw_->decompose(B.mul(wp, a));
    auto vy = tw_->decompose(B.mul(wp, b));
    Row r(2 * t);
    for (unsigned c = 0; c < t; ++c) {
      r[c] = static_cast<std::uint8_t>(vx[c]);
      r[t + c] = static_cast<std::uint8_t>(vy[c]);
    }
    rows.push_back(std::move(r));
    wp = B.mul(wp, tw_->omega());
  }
  return pg::subspace_from_rows(tw_->sub(), rows, n());
}

std::uint32_t Spread::lookup(const std::uint8_t* coords) const {
  return table_[space_.index_of_point(coords)];
}

std::vector<WeightedLabel> Spread::b_of(const Subspace& pi) const {
  if (pi.d < 0) throw std::invalid_argument("B(.) of the empty subspace");
  std::vector<std::uint32_t> hits;
  std::vector<std::uint32_t> count(label_count(), 0);
  space_.points_of(pi, [&](const std::uint8_t* p) {
    std::uint32_t id = table_[space_.index_of_point(p)];
    if (count[id]++ == 0) hits.push_back(id);
  });
  std::sort(hits.begin(), hits.end());
  const std::uint64_t q = tw_->q();
  std::vector<WeightedLabel> out;
  out.reserve(hits.size());
  std::uint64_t total = 0;
  for (auto id : hits) {
    std::uint64_t c = count[id], th = 1, w = 1;
    while (th < c) {
      th = th * q + 1;
      ++w;
    }
    if (th != c) throw std::logic_error("element intersection is not a subspace");
    total += c;
    out.push_back({id, static_cast<int>(w)});
  }
  if (total != pg::theta(pi.d + 1, q))
    throw std::logic_error("weight sum identity violated");
  return out;
}

std::vector<ext::EVec> Spread::frame(std::uint32_t id) const {
  auto [a, b] = label(id);
  const gf::Field& B = tw_->big();
  const unsigned t = tw_->t();
  std::vector<ext::EVec> rows(t, ext::EVec(2 * t, 0));
  for (unsigned i = 0; i < t; ++i) {
    elt ai = tw_->frob(a, i), bi = tw_->frob(b, i);
    for (unsigned j = 0; j < t; ++j) {
      rows[i][j] = B.mul(ai, wstar_[i][j]);
      rows[i][t + j] = B.mul(bi, wstar_[i][j]);
    }
    rows[i] = ext::normalize(B, std::move(rows[i]));
  }
  return rows;
}

elt Spread::multiplier_of(std::uint32_t id, const std::uint8_t* coords) const {
  auto [a, b] = label(id);
  auto [A, Bv] = coords_pair(coords);
  const gf::Field& B = tw_->big();
  elt y = a ? B.div(A, a) : B.div(Bv, b);
  if (y == 0 || (a && B.mul(y, b) != Bv) || (!a && A != 0))
    throw std::invalid_argument("point does not lie in this spread element");
  return y;
}

Row Spread::point_of_multiplier(std::uint32_t id, elt y) const {
  auto [a, b] = label(id);
  const gf::Field& B = tw_->big();
  const unsigned t = tw_->t();
  auto vx = tw_->decompose(B.mul(y, a));
  auto vy = tw_->decompose(B.mul(y, b));
  Row r(2 * t);
  for (unsigned c = 0; c < t; ++c) {
    r[c] = static_cast<std::uint8_t>(vx[c]);
    r[t + c] = static_cast<std::uint8_t>(vy[c]);
  }
  return pg::normalized_point(tw_->sub(), std::move(r));
}

elt Spread::chart_label(std::uint32_t id, const std::uint8_t* coords) const {
  elt y = multiplier_of(id, coords);
  return tw_->class_rep(tw_->big().inv(y));
}

bool Spread::same_subspread_class(elt x, elt y, unsigned s) const {
  if (!x || !y) throw std::invalid_argument("subspread classes live on nonzero labels");
  elt r = tw_->big().div(x, y);
  return tw_->frob(r, s) == r;
}

elt Spread::subspread_rep(elt x, unsigned s) const {
  if (!x) throw std::invalid_argument("subspread classes live on nonzero labels");
  const gf::Field& B = tw_->big();
  elt best = x;
  for (std::uint64_t z = 1; z < B.order(); ++z) {
    if (tw_->frob(z, s) != z) continue;
    elt m = B.mul(z, x);
    if (m < best) best = m;
  }
  return best;
}

std::vector<ext::EVec> Spread::subelement_frame(std::uint32_t id, elt y, unsigned k) const {
  const unsigned t = tw_->t();
  if (k == 0 || t % k != 0) throw std::invalid_argument("k must divide t");
  const gf::Field& B = tw_->big();
  auto [a, b] = label(id);
  std::vector<ext::EVec> rows(k, ext::EVec(2 * t, 0));
  for (unsigned m = 0; m < t; ++m) {
    elt am = tw_->frob(a, m), bm = tw_->frob(b, m), ym = tw_->frob(y, m);
    unsigned i = m % k;
    for (unsigned j = 0; j < t; ++j) {
      rows[i][j] = B.add(rows[i][j], B.mul(ym, B.mul(am, wstar_[m][j])));
      rows[i][t + j] = B.add(rows[i][t + j], B.mul(ym, B.mul(bm, wstar_[m][j])));
    }
  }
  for (auto& r : rows) r = ext::normalize(B, std::move(r));
  return rows;
}

}  // namespace pgq::spread
