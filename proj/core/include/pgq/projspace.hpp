#pragma once

// Points, subspaces and exact linear algebra of PG(n,q), q <= 256.
//
// A point is a length-(n+1) coordinate row over GF(q), normalized so its
// first nonzero entry is 1. A subspace is canonically the reduced
// row-echelon form of any basis, so equality is bytewise comparison.
//
// Subspace enumeration is a fixed bijection index <-> subspace: pivot-column
// combinations in lexicographic order, then the free entries as a base-q
// number (row-major scan, first scanned position most significant). For
// d = 0 this is exactly lexicographic order on normalized coordinate rows.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pgq/gfield.hpp"

namespace pgq::pg {

using gf::Field;

std::uint64_t theta(unsigned m, std::uint64_t q);  // (q^m - 1)/(q - 1)
std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q);

using Row = std::vector<std::uint8_t>;

struct Subspace {
  int n = 0;   // ambient projective dimension
  int d = -1;  // projective dimension (-1 = empty)
  Row b;       // (d+1) x (n+1) RREF basis, row-major

  int rows() const { return d + 1; }
  int cols() const { return n + 1; }
  const std::uint8_t* row(int i) const { return b.data() + static_cast<size_t>(i) * cols(); }
  bool operator==(const Subspace& o) const { return n == o.n && d == o.d && b == o.b; }
  bool operator<(const Subspace& o) const { return b < o.b; }
  std::string str() const;
};

// In-place reduced row echelon form; returns the rank. data is rows x cols.
int rref_in_place(const Field& F, std::uint8_t* data, int nrows, int ncols);

Row normalized_point(const Field& F, Row v);
Subspace subspace_from_rows(const Field& F, const std::vector<Row>& rows, int n);
Subspace span_pair(const Field& F, const Subspace& A, const Subspace& B);
Subspace point_subspace(const Field& F, const Row& p);

// Annihilator: the dual forms vanishing on S, again in RREF.
Subspace dual(const Field& F, const Subspace& S);
Subspace meet(const Field& F, const Subspace& A, const Subspace& B);
bool contains(const Field& F, const Subspace& S, const Row& p);

int rank_of_points(const Field& F, const std::vector<Row>& pts);

// <P,X> intersected with target; requires X != P (projectively) and P not in
// target. When X already lies in target this returns X.
Row project_from_point(const Field& F, const Row& P, const Subspace& target, const Row& X);

class PGSpace {
 public:
  PGSpace(const Field& F, int n);

  const Field& field() const { return *F_; }
  int n() const { return n_; }
  std::uint64_t q() const { return F_->order(); }
  std::uint64_t point_count() const { return theta(n_ + 1, q()); }

  Row point_at(std::uint64_t idx) const;
  std::uint64_t index_of_point(const std::uint8_t* coords) const;  // must be normalized
  std::uint64_t index_of_point(const Row& p) const { return index_of_point(p.data()); }

  std::uint64_t subspace_count(int d) const { return gaussian_binomial(n_ + 1, d + 1, q()); }
  Subspace subspace_at(int d, std::uint64_t idx) const;
  std::uint64_t index_of_subspace(const Subspace& S) const;

  // All theta(d+1) points of S, via normalized coefficient rows.
  std::vector<Row> points_of(const Subspace& S) const;
  void points_of(const Subspace& S, const std::function<void(const std::uint8_t*)>& fn) const;

  // Subspaces of dimension d through a fixed point, one per line of the
  // quotient geometry; count = gaussian_binomial(n, d, q).
  std::uint64_t count_through_point(int d) const { return gaussian_binomial(n_, d, q()); }
  Subspace subspace_through_point_at(const Row& p, int d, std::uint64_t idx) const;

 private:
  const Field* F_;
  int n_;
  std::vector<std::uint64_t> offsets_;  // point-index offsets per leading-zero count
};

// Incremental rank accumulator over GF(q), up to 12 columns. Uses bit-packed
// XOR elimination for q = 2 and inverse-free cross-multiplication otherwise.
class RankAccum {
 public:
  RankAccum(const Field& F, int ncols);
  // feed one coordinate row; returns true if the rank increased
  bool add(const std::uint8_t* v);
  int rank() const { return rank_; }
  void reset();

 private:
  const Field* F_;
  const std::uint8_t* mul_;
  const std::uint8_t* neg_;
  const std::uint8_t* add_;
  int ncols_;
  int q_;
  int rank_ = 0;
  bool bits_;
  std::uint16_t bitrows_[12];
  std::uint8_t rows_[12][12];
  int piv_[12];
};

}  // namespace pgq::pg
