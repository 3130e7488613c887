#include "doctest.h"
#include "pgq/projspace.hpp"

#include <map>
#include <stdexcept>
#include <random>
#include <set>

using namespace pgq;
using namespace pgq::pg;

TEST_CASE("theta and gaussian binomials") {
  CHECK(theta(3, 5) == 31);
  CHECK(theta(1, 7) == 1);
  CHECK(gaussian_binomial(3, 2, 5) == 31);
  CHECK(gaussian_binomial(6, 3, 2) == 1395);
  CHECK(gaussian_binomial(6, 3, 5) == 2558556);
  CHECK(gaussian_binomial(6, 4, 5) == 508431);  // solids of PG(5,5)
  CHECK(gaussian_binomial(6, 2, 5) == 508431);  // = dual count
  CHECK(gaussian_binomial(6, 2, 7) == 6865251);
  for (unsigned n = 0; n < 8; ++n) CHECK(gaussian_binomial(n, 0, 3) == 1);
}

TEST_CASE("gaussian binomial matches brute-force line count of PG(2,5)") {
  gf::Field F = gf::Field::make(5, 1);
  PGSpace pg2(F, 2);
  std::set<Subspace> lines;
  const std::uint64_t np = pg2.point_count();
  for (std::uint64_t i = 0; i < np; ++i)
    for (std::uint64_t j = i + 1; j < np; ++j)
      lines.insert(subspace_from_rows(F, {pg2.point_at(i), pg2.point_at(j)}, 2));
  CHECK(lines.size() == 31);
}

TEST_CASE("point enumeration: PG(1,3) has 4 points, order is lexicographic") {
  gf::Field F = gf::Field::make(3, 1);
  PGSpace pg1(F, 1);
  CHECK(pg1.point_count() == 4);
  std::vector<Row> pts;
  for (std::uint64_t i = 0; i < 4; ++i) {
    pts.push_back(pg1.point_at(i));
    CHECK(pg1.index_of_point(pts.back()) == i);
  }
  CHECK(pts[0] == Row{1, 0});
  CHECK(pts[1] == Row{1, 1});
  CHECK(pts[2] == Row{1, 2});
  CHECK(pts[3] == Row{0, 1});
}

TEST_CASE("span and meet basics") {
  gf::Field F = gf::Field::make(3, 1);

  SUBCASE("span of one point is that point") {
    Row p = {0, 2, 1, 0};
    Subspace S = point_subspace(F, p);
    CHECK(S.d == 0);
    CHECK(contains(F, S, p));
    Row np = normalized_point(F, p);
    CHECK(Row(S.b.begin(), S.b.end()) == np);
  }

  SUBCASE("two distinct hyperplanes of PG(5,q) meet in a solid") {
    PGSpace pg5(F, 5);
    Subspace H1 = pg5.subspace_at(4, 0);
    Subspace H2 = pg5.subspace_at(4, 17);
    CHECK(H1.d == 4);
    CHECK(meet(F, H1, H2).d == 3);
  }

  SUBCASE("span of 4 dependent points is the plane X3=0") {
    Subspace S = subspace_from_rows(
        F, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}}, 3);
    CHECK(S.d == 2);
    Subspace want = subspace_from_rows(F, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 3);
    CHECK(S == want);
  }
}

TEST_CASE("rank of points") {
  gf::Field F = gf::Field::make(7, 1);
  Row p = {1, 3, 2, 6};
  CHECK(rank_of_points(F, {p, p, p}) == 1);
  CHECK(rank_of_points(F, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}) == 4);
  CHECK(rank_of_points(F, {}) == 0);
}

TEST_CASE("subspace enumeration counts match gaussian binomials") {
  for (std::uint64_t q : {2ull, 3ull, 5ull}) {
    gf::Field F = gf::Field::make(q, 1);
    for (int n = 1; n <= 4; ++n) {
      PGSpace sp(F, n);
      for (int d = 0; d < n; ++d) {
        std::uint64_t cnt = sp.subspace_count(d);
        if (cnt > 40000) continue;
        std::set<Subspace> seen;
        for (std::uint64_t i = 0; i < cnt; ++i) {
          Subspace S = sp.subspace_at(d, i);
          CHECK(S.d == d);
          CHECK(sp.index_of_subspace(S) == i);
          seen.insert(std::move(S));
        }
        CHECK(seen.size() == cnt);
      }
    }
  }
}

TEST_CASE("planes of PG(5,2): full enumeration equals 1395 distinct RREFs") {
  gf::Field F = gf::Field::make(2, 1);
  PGSpace sp(F, 5);
  std::set<Subspace> seen;
  for (std::uint64_t i = 0; i < sp.subspace_count(2); ++i) seen.insert(sp.subspace_at(2, i));
  CHECK(seen.size() == 1395);
}

TEST_CASE("canonical form is idempotent") {
  gf::Field F = gf::Field::make(5, 1);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Row> rows(3, Row(5, 0));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<std::uint8_t>(rng() % 5);
    Subspace S = subspace_from_rows(F, rows, 4);
    if (S.d < 0) continue;
    std::vector<Row> again;
    for (int i = 0; i <= S.d; ++i) again.emplace_back(S.row(i), S.row(i) + 5);
    CHECK(subspace_from_rows(F, again, 4) == S);
    // points normalize idempotently too
    Row p(5, 0);
    for (auto& x : p) x = static_cast<std::uint8_t>(rng() % 5);
    bool zero = true;
    for (auto x : p) zero &= !x;
    if (!zero) CHECK(normalized_point(F, normalized_point(F, p)) == normalized_point(F, p));
  }
}

TEST_CASE("grassmann identity dim span + dim meet = dim A + dim B") {
  gf::Field F = gf::Field::make(3, 1);
  PGSpace sp(F, 5);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int dA = static_cast<int>(rng() % 4);
    int dB = static_cast<int>(rng() % 4);
    Subspace A = sp.subspace_at(dA, rng() % sp.subspace_count(dA));
    Subspace B = sp.subspace_at(dB, rng() % sp.subspace_count(dB));
    Subspace S = span_pair(F, A, B);
    Subspace M = meet(F, A, B);
    CHECK(S.d + M.d == A.d + B.d);
  }
}

TEST_CASE("incidence duality, exhaustive on PG(5,2)") {
  gf::Field F = gf::Field::make(2, 1);
  PGSpace sp(F, 5);
  for (std::uint64_t h = 0; h < sp.subspace_count(4); ++h) {
    Subspace H = sp.subspace_at(4, h);
    Subspace form = dual(F, H);
    REQUIRE(form.d == 0);
    for (std::uint64_t i = 0; i < sp.point_count(); ++i) {
      Row p = sp.point_at(i);
      int dot = 0;
      for (int j = 0; j < 6; ++j) dot ^= form.b[j] & p[j];
      CHECK((dot == 0) == contains(F, H, p));
    }
  }
}

TEST_CASE("projection from a point") {
  gf::Field F = gf::Field::make(5, 1);
  Subspace target = subspace_from_rows(F, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 3);

  Row P = {0, 0, 0, 1};
  Row X = {1, 2, 3, 4};
  CHECK(project_from_point(F, P, target, X) == Row{1, 2, 3, 0});

  Row inT = {1, 4, 2, 0};
  CHECK(project_from_point(F, P, target, inT) == normalized_point(F, inT));

  CHECK_THROWS_AS(project_from_point(F, P, target, Row{0, 0, 0, 3}), std::invalid_argument);
}

TEST_CASE("points_of enumerates exactly the subspace") {
  gf::Field F = gf::Field::make(3, 1);
  PGSpace sp(F, 4);
  Subspace S = sp.subspace_at(2, 1234 % sp.subspace_count(2));
  auto pts = sp.points_of(S);
  CHECK(pts.size() == theta(3, 3));
  std::set<Row> uniq(pts.begin(), pts.end());
  CHECK(uniq.size() == pts.size());
  for (const auto& p : pts) {
    CHECK(contains(F, S, p));
    CHECK(p == normalized_point(F, p));
  }
}

TEST_CASE("subspaces through a fixed point") {
  gf::Field F = gf::Field::make(3, 1);
  PGSpace sp(F, 5);
  Row p = {0, 1, 2, 0, 1, 1};
  std::uint64_t cnt = sp.count_through_point(2);
  CHECK(cnt == gaussian_binomial(5, 2, 3));
  std::set<Subspace> seen;
  for (std::uint64_t i = 0; i < cnt; ++i) {
    Subspace S = sp.subspace_through_point_at(p, 2, i);
    CHECK(S.d == 2);
    CHECK(contains(F, S, p));
    seen.insert(std::move(S));
  }
  CHECK(seen.size() == cnt);
}

TEST_CASE("RankAccum agrees with rank_of_points") {
  for (std::uint64_t q : {2ull, 4ull, 7ull}) {
    gf::Field F = q == 4 ? gf::Field::make(2, 2) : gf::Field::make(q, 1);
    std::mt19937_64 rng(41 + q);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Row> pts;
      RankAccum acc(F, 6);
      for (int i = 0; i < 8; ++i) {
        Row v(6);
        for (auto& x : v) x = static_cast<std::uint8_t>(rng() % q);
        int before = acc.rank();
        acc.add(v.data());
        pts.push_back(v);
        int want = rank_of_points(F, pts);
        CHECK(acc.rank() == want);
        CHECK((acc.rank() > before) == (want > before));
      }
    }
  }
}
