#pragma once

// Dense linear algebra over an arbitrary gf::Field, for the small systems
// that live over extension fields (frames, charts, curve parameterizations).
// Rows are std::vector<gf::elt>; nothing here is performance-critical.

#include <optional>
#include <vector>

#include "pgq/gfield.hpp"

namespace pgq::ext {

using gf::Field;
using gf::elt;
using EVec = std::vector<elt>;
using EMat = std::vector<EVec>;

inline int rank(const Field& F, EMat m) {
  int rows = static_cast<int>(m.size());
  if (!rows) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    elt s = F.inv(m[r][c]);
    for (int j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], s);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !m[i][c]) continue;
      elt f = F.neg(m[i][c]);
      for (int j = c; j < cols; ++j) m[i][j] = F.add(m[i][j], F.mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

inline std::optional<EMat> invert(const Field& F, const EMat& a) {
  const int n = static_cast<int>(a.size());
  EMat m(n, EVec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  int r = 0;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (m[i][c]) { piv = i; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[piv], m[r]);
    elt s = F.inv(m[r][c]);
    for (int j = 0; j < 2 * n; ++j) m[r][j] = F.mul(m[r][j], s);
    for (int i = 0; i < n; ++i) {
      if (i == r || !m[i][c]) continue;
      elt f = F.neg(m[i][c]);
      for (int j = 0; j < 2 * n; ++j) m[i][j] = F.add(m[i][j], F.mul(f, m[r][j]));
    }
    ++r;
  }
  EMat inv(n, EVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

// first-nonzero-is-one normalization of a projective coordinate row
inline EVec normalize(const Field& F, EVec v) {
  for (auto& x : v)
    if (x) {
      elt s = F.inv(x);
      for (auto& y : v) y = F.mul(y, s);
      return v;
    }
  return v;  // zero row stays zero; callers treat it as invalid
}

inline bool is_zero(const EVec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

inline EVec mat_vec_right(const Field& F, const EVec& row, const EMat& m) {
  // row * m for row-vector convention
  const int n = static_cast<int>(row.size());
  const int c = static_cast<int>(m[0].size());
  EVec out(c, 0);
  for (int i = 0; i < n; ++i) {
    if (!row[i]) continue;
    for (int j = 0; j < c; ++j) out[j] = F.add(out[j], F.mul(row[i], m[i][j]));
  }
  return out;
}

}  // namespace pgq::ext
