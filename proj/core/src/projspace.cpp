#include "pgq/projspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pgq::pg {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 checked_u64(u128 v) {
  if (v > static_cast<u128>(~0ull)) throw std::overflow_error("count exceeds 64 bits");
  return static_cast<u64>(v);
}

u64 upow(u64 q, unsigned e) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= q;
  return checked_u64(r);
}

// lexicographic combination enumeration: first is (0..k-1); returns false
// when exhausted
bool next_combo(std::vector<int>& c, int m) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < m - (k - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

unsigned free_exponent(const std::vector<int>& combo, int m) {
  int k = static_cast<int>(combo.size());
  unsigned e = 0;
  for (int i = 0; i < k; ++i) e += (m - 1 - combo[i]) - (k - 1 - i);
  return e;
}

// scan order of the free positions: row-major, columns ascending
std::vector<std::pair<int, int>> free_positions(const std::vector<int>& combo, int m) {
  int k = static_cast<int>(combo.size());
  std::vector<char> is_pivot(m, 0);
  for (int c : combo) is_pivot[c] = 1;
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < k; ++i)
    for (int j = combo[i] + 1; j < m; ++j)
      if (!is_pivot[j]) pos.emplace_back(i, j);
  return pos;
}

}  // namespace

u64 theta(unsigned m, u64 q) {
  u128 p = 1, s = 0;
  for (unsigned i = 0; i < m; ++i) {
    s += p;
    p *= q;
  }
  return checked_u64(s);
}

u64 gaussian_binomial(unsigned n, unsigned k, u64 q) {
  if (k > n) return 0;
  if (n > 24) throw std::invalid_argument("gaussian binomial limited to n <= 24");
  // q-Pascal recurrence, integer arithmetic throughout:
  // [m,j] = [m-1,j] + q^(m-j) * [m-1,j-1]
  std::vector<u128> row(k + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = std::min(m, k); j >= 1; --j) {
      u128 qp = 1;
      for (unsigned i = 0; i < m - j; ++i) qp *= q;
      row[j] = row[j] + qp * row[j - 1];
    }
  }
  return checked_u64(row[k]);
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= d; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols(); ++j) os << (j ? "," : "") << int(row(i)[j]);
  }
  os << "]";
  return os.str();
}

int rref_in_place(const Field& F, std::uint8_t* a, int nrows, int ncols) {
  const std::uint8_t* mul = F.mul_table();
  const std::uint8_t* add = F.add_table();
  const std::uint8_t* inv = F.inv_table();
  const std::uint8_t* neg = F.neg_table();
  const int q = static_cast<int>(F.order());
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int piv = -1;
    for (int r = rank; r < nrows; ++r)
      if (a[r * ncols + col]) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < ncols; ++j) std::swap(a[piv * ncols + j], a[rank * ncols + j]);
    std::uint8_t pv = a[rank * ncols + col];
    if (pv != 1) {
      std::uint8_t s = inv[pv];
      for (int j = col; j < ncols; ++j)
        a[rank * ncols + j] = mul[a[rank * ncols + j] * q + s];
    }
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      std::uint8_t f = a[r * ncols + col];
      if (!f) continue;
      std::uint8_t nf = neg[f];
      for (int j = col; j < ncols; ++j)
        a[r * ncols + j] = add[a[r * ncols + j] * q + mul[nf * q + a[rank * ncols + j]]];
    }
    ++rank;
  }
  return rank;
}

Row normalized_point(const Field& F, Row v) {
  int lead = -1;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) { lead = static_cast<int>(i); break; }
  if (lead < 0) throw std::invalid_argument("zero vector is not a projective point");
  if (v[lead] != 1) {
    gf::elt s = F.inv(v[lead]);
    for (size_t i = lead; i < v.size(); ++i)
      v[i] = static_cast<std::uint8_t>(F.mul(v[i], s));
  }
  return v;
}

Subspace subspace_from_rows(const Field& F, const std::vector<Row>& rows, int n) {
  const int m = n + 1;
  Row buf(rows.size() * m, 0);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != m)
      throw std::invalid_argument("row width does not match ambient dimension");
    std::copy(rows[i].begin(), rows[i].end(), buf.begin() + i * m);
  }
  int rank = rref_in_place(F, buf.data(), static_cast<int>(rows.size()), m);
  Subspace S;
  S.n = n;
  S.d = rank - 1;
  S.b.assign(buf.begin(), buf.begin() + static_cast<size_t>(rank) * m);
  return S;
}

Subspace point_subspace(const Field& F, const Row& p) {
  return subspace_from_rows(F, {p}, static_cast<int>(p.size()) - 1);
}

Subspace span_pair(const Field& F, const Subspace& A, const Subspace& B) {
  if (A.n != B.n) throw std::invalid_argument("ambient dimension mismatch");
  const int m = A.cols();
  Row buf;
  buf.reserve((A.rows() + B.rows()) * m);
  buf.insert(buf.end(), A.b.begin(), A.b.end());
  buf.insert(buf.end(), B.b.begin(), B.b.end());
  int rank = rref_in_place(F, buf.data(), A.rows() + B.rows(), m);
  Subspace S;
  S.n = A.n;
  S.d = rank - 1;
  S.b.assign(buf.begin(), buf.begin() + static_cast<size_t>(rank) * m);
  return S;
}

Subspace dual(const Field& F, const Subspace& S) {
  const int m = S.cols(), k = S.rows();
  std::vector<int> piv;
  std::vector<char> is_piv(m, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < m; ++j)
      if (S.row(i)[j]) { piv.push_back(j); is_piv[j] = 1; break; }
  }
  std::vector<Row> kernel;
  for (int f = 0; f < m; ++f) {
    if (is_piv[f]) continue;
    Row v(m, 0);
    v[f] = 1;
    for (int i = 0; i < k; ++i)
      v[piv[i]] = static_cast<std::uint8_t>(F.neg(S.row(i)[f]));
    kernel.push_back(std::move(v));
  }
  return subspace_from_rows(F, kernel, S.n);
}

Subspace meet(const Field& F, const Subspace& A, const Subspace& B) {
  if (A.n != B.n) throw std::invalid_argument("ambient dimension mismatch");
  if (A.d < 0 || B.d < 0) {
    Subspace S;
    S.n = A.n;
    return S;
  }
  return dual(F, span_pair(F, dual(F, A), dual(F, B)));
}

bool contains(const Field& F, const Subspace& S, const Row& p) {
  const int m = S.cols();
  Row v = p;
  for (int i = 0; i < S.rows(); ++i) {
    int pc = -1;
    for (int j = 0; j < m; ++j)
      if (S.row(i)[j]) { pc = j; break; }
    if (pc < 0 || !v[pc]) continue;
    gf::elt f = F.neg(v[pc]);
    for (int j = 0; j < m; ++j)
      v[j] = static_cast<std::uint8_t>(F.add(v[j], F.mul(f, S.row(i)[j])));
  }
  for (auto x : v)
    if (x) return false;
  return true;
}

int rank_of_points(const Field& F, const std::vector<Row>& pts) {
  if (pts.empty()) return 0;
  const int m = static_cast<int>(pts[0].size());
  Row buf(pts.size() * m);
  for (size_t i = 0; i < pts.size(); ++i)
    std::copy(pts[i].begin(), pts[i].end(), buf.begin() + i * m);
  return rref_in_place(F, buf.data(), static_cast<int>(pts.size()), m);
}

Row project_from_point(const Field& F, const Row& P, const Subspace& target, const Row& X) {
  if (rank_of_points(F, {P, X}) != 2)
    throw std::invalid_argument("projection point coincides with the argument");
  if (contains(F, target, P))
    throw std::invalid_argument("projection point lies in the target");
  Subspace line = subspace_from_rows(F, {P, X}, target.n);
  Subspace hit = meet(F, line, target);
  if (hit.d != 0) throw std::logic_error("line meets target in unexpected dimension");
  return Row(hit.b.begin(), hit.b.end());
}

// -------------------------------------------------------------- PGSpace ----

PGSpace::PGSpace(const Field& F, int n) : F_(&F), n_(n) {
  if (!F.mul_table()) throw std::invalid_argument("PGSpace requires q <= 256");
  offsets_.assign(n + 2, 0);
  u64 acc = 0;
  for (int j = 0; j <= n; ++j) {
    offsets_[j] = acc;
    acc += upow(q(), n - j);
  }
  offsets_[n + 1] = acc;
}

Row PGSpace::point_at(u64 idx) const {
  const u64 qq = q();
  int lead = 0;
  while (lead < n_ && idx >= offsets_[lead + 1]) ++lead;
  u64 v = idx - offsets_[lead];
  Row p(n_ + 1, 0);
  p[lead] = 1;
  for (int j = n_; j > lead; --j) {
    p[j] = static_cast<std::uint8_t>(v % qq);
    v /= qq;
  }
  return p;
}

u64 PGSpace::index_of_point(const std::uint8_t* c) const {
  const u64 qq = q();
  int lead = 0;
  while (lead <= n_ && !c[lead]) ++lead;
  u64 v = 0;
  for (int j = lead + 1; j <= n_; ++j) v = v * qq + c[j];
  return offsets_[lead] + v;
}

Subspace PGSpace::subspace_at(int d, u64 idx) const {
  const int m = n_ + 1, k = d + 1;
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  while (true) {
    unsigned E = free_exponent(combo, m);
    u64 cnt = upow(q(), E);
    if (idx < cnt) {
      Subspace S;
      S.n = n_;
      S.d = d;
      S.b.assign(static_cast<size_t>(k) * m, 0);
      for (int i = 0; i < k; ++i) S.b[i * m + combo[i]] = 1;
      auto pos = free_positions(combo, m);
      for (size_t t = 0; t < pos.size(); ++t) {
        u64 digit = idx / upow(q(), static_cast<unsigned>(pos.size() - 1 - t));
        S.b[pos[t].first * m + pos[t].second] = static_cast<std::uint8_t>(digit % q());
      }
      return S;
    }
    idx -= cnt;
    if (!next_combo(combo, m)) throw std::out_of_range("subspace index out of range");
  }
}

u64 PGSpace::index_of_subspace(const Subspace& S) const {
  const int m = n_ + 1, k = S.rows();
  std::vector<int> piv;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j)
      if (S.row(i)[j]) { piv.push_back(j); break; }
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  u64 base = 0;
  while (combo != piv) {
    base += upow(q(), free_exponent(combo, m));
    if (!next_combo(combo, m)) throw std::logic_error("pivot combination not found");
  }
  auto pos = free_positions(combo, m);
  u64 v = 0;
  for (auto [r, c] : pos) v = v * q() + S.row(r)[c];
  return base + v;
}

std::vector<Row> PGSpace::points_of(const Subspace& S) const {
  std::vector<Row> out;
  out.reserve(theta(S.rows(), q()));
  points_of(S, [&](const std::uint8_t* p) { out.emplace_back(p, p + n_ + 1); });
  return out;
}

void PGSpace::points_of(const Subspace& S,
                        const std::function<void(const std::uint8_t*)>& fn) const {
  const int m = n_ + 1, k = S.rows();
  const int qq = static_cast<int>(q());
  const std::uint8_t* mul = F_->mul_table();
  const std::uint8_t* add = F_->add_table();
  std::uint8_t buf[16];
  std::vector<std::uint8_t> coef(k, 0);
  // normalized coefficient tuples: leading 1 at position `lead`
  for (int lead = 0; lead < k; ++lead) {
    std::fill(coef.begin(), coef.end(), 0);
    coef[lead] = 1;
    while (true) {
      for (int j = 0; j < m; ++j) buf[j] = S.row(lead)[j];
      for (int i = lead + 1; i < k; ++i) {
        std::uint8_t c = coef[i];
        if (!c) continue;
        const std::uint8_t* ri = S.row(i);
        for (int j = 0; j < m; ++j) buf[j] = add[buf[j] * qq + mul[c * qq + ri[j]]];
      }
      fn(buf);
      int i = k - 1;
      for (; i > lead; --i) {
        if (++coef[i] < qq) break;
        coef[i] = 0;
      }
      if (i == lead) break;
    }
  }
}

Subspace PGSpace::subspace_through_point_at(const Row& p, int d, u64 idx) const {
  if (d < 1) throw std::invalid_argument("need d >= 1 for subspaces through a point");
  const int m = n_ + 1;
  Row np = normalized_point(*F_, p);
  int lead = 0;
  while (!np[lead]) ++lead;
  PGSpace quot(*F_, n_ - 1);
  Subspace W = quot.subspace_at(d - 1, idx);
  std::vector<Row> rows;
  rows.push_back(np);
  for (int i = 0; i < W.rows(); ++i) {
    Row r(m, 0);
    for (int j = 0, jj = 0; j < m; ++j) {
      if (j == lead) continue;
      r[j] = W.row(i)[jj++];
    }
    rows.push_back(std::move(r));
  }
  return subspace_from_rows(*F_, rows, n_);
}

// ------------------------------------------------------------ RankAccum ----

RankAccum::RankAccum(const Field& F, int ncols)
    : F_(&F),
      mul_(F.mul_table()),
      neg_(F.neg_table()),
      add_(F.add_table()),
      ncols_(ncols),
      q_(static_cast<int>(F.order())),
      bits_(F.order() == 2) {
  if (ncols > 12) throw std::invalid_argument("RankAccum supports up to 12 columns");
  reset();
}

void RankAccum::reset() {
  rank_ = 0;
  for (auto& r : bitrows_) r = 0;
}

bool RankAccum::add(const std::uint8_t* v) {
  if (bits_) {
    std::uint16_t w = 0;
    for (int j = 0; j < ncols_; ++j) w |= static_cast<std::uint16_t>(v[j] & 1) << j;
    for (int i = 0; i < rank_; ++i)
      if (w & (std::uint16_t(1) << piv_[i])) w ^= bitrows_[i];
    if (!w) return false;
    int pc = 0;
    while (!(w & (std::uint16_t(1) << pc))) ++pc;
    bitrows_[rank_] = w;
    piv_[rank_] = pc;
    ++rank_;
    return true;
  }
  std::uint8_t tmp[12];
  for (int j = 0; j < ncols_; ++j) tmp[j] = v[j];
  for (int i = 0; i < rank_; ++i) {
    std::uint8_t b = tmp[piv_[i]];
    if (!b) continue;
    // inverse-free elimination: tmp <- a*tmp - b*row_i with a = row_i pivot
    std::uint8_t a = rows_[i][piv_[i]];
    std::uint8_t nb = neg_[b];
    for (int j = 0; j < ncols_; ++j)
      tmp[j] = add_[mul_[a * q_ + tmp[j]] * q_ + mul_[nb * q_ + rows_[i][j]]];
  }
  int pc = -1;
  for (int j = 0; j < ncols_; ++j)
    if (tmp[j]) { pc = j; break; }
  if (pc < 0) return false;
  for (int j = 0; j < ncols_; ++j) rows_[rank_][j] = tmp[j];
  piv_[rank_] = pc;
  ++rank_;
  return true;
}

}  // namespace pgq::pg
