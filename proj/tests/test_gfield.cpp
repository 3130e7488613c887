#include "doctest.h"
#include "pgq/gfield.hpp"

#include <random>
#include <set>
#include <stdexcept>

using namespace pgq::gf;

namespace {

// independent brute-force irreducibility oracle over GF(p): trial roots plus
// trial division by every lower-degree monic polynomial
bool brute_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  auto eval = [&](std::uint64_t r) {
    std::uint64_t v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = (v * r + coeffs[i]) % p;
    return v;
  };
  for (std::uint64_t r = 0; r < p; ++r)
    if (eval(r) == 0) return false;
  for (int d = 2; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
      std::vector<std::uint64_t> g(d + 1, 1);
      std::uint64_t mm = m;
      for (int i = 0; i < d; ++i) { g[i] = mm % p; mm /= p; }
      // long division remainder
      std::vector<std::uint64_t> a = coeffs;
      for (int i = n; i >= d; --i) {
        std::uint64_t c = a[i];
        if (!c) continue;
        for (int j = 0; j <= d; ++j) a[i - d + j] = (a[i - d + j] + c * (p - g[j])) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i)
        if (a[i]) { zero = false; break; }
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("make_field: prime field GF(7)") {
  Field F = Field::make(7, 1);
  CHECK(F.order() == 7);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.inv(3) == 5);
}

TEST_CASE("make_field: GF(4) gets the unique irreducible quadratic") {
  Field F = Field::make(2, 2);
  CHECK(F.modulus() == std::vector<std::uint64_t>{1, 1, 1});
  // omega = class of x = code 2; omega * omega^2 = 1 since omega^3 = 1
  elt w = 2, w2 = F.mul(2, 2);
  CHECK(w2 == 3);
  CHECK(F.mul(w, w2) == 1);
}

TEST_CASE("make_field: supplied modulus x^3+2 over GF(7)") {
  CHECK(brute_irreducible(7, {2, 0, 0, 1}));
  Field F = Field::make(7, 3, {2, 0, 0, 1});
  CHECK(F.order() == 343);
  // x * x^2 = x^3 = -2 = 5
  CHECK(F.mul(7, F.mul(7, 7)) == 5);
  CHECK(F.mul(7, 49) == 5);
}

TEST_CASE("make_field: reducible modulus rejected with witness") {
  // x^3 + 6 = (x-1)(x^2+x+6)? 1 + 6 = 0 mod 7, so x=1 is a root
  CHECK_FALSE(brute_irreducible(7, {6, 0, 0, 1}));
  CHECK_THROWS_AS(Field::make(7, 3, {6, 0, 0, 1}), std::invalid_argument);
  try {
    Field::make(7, 3, {6, 0, 0, 1});
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("witness") != std::string::npos);
  }
  CHECK_THROWS_AS(Field::make(7, 3, {2, 0, 0, 3}), std::invalid_argument);  // non-monic
}

TEST_CASE("default modulus choices are deterministic and primitive") {
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {5, 3}, {7, 3}, {2, 9}}) {
    Field F1 = Field::make(p, e);
    Field F2 = Field::make(p, e);
    CHECK(F1.modulus() == F2.modulus());
    CHECK(F1.x_primitive());
    CHECK(brute_irreducible(p, F1.modulus()));
    CHECK(F1.mult_order(F1.generator()) == F1.order() - 1);
  }
  // the conventional least primitive cubic over GF(2) is x^3+x+1
  Field F8 = Field::make(2, 3);
  CHECK(F8.modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});
}

TEST_CASE("field axioms, exhaustive on GF(9) and GF(8)") {
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{3, 2}, {2, 3}}) {
    Field F = Field::make(p, e);
    const elt n = F.order();
    for (elt a = 0; a < n; ++a) {
      for (elt b = 0; b < n; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.sub(F.add(a, b), b) == a);
        if (b) CHECK(F.mul(F.div(a, b), b) == a);
        for (elt c = 0; c < n; ++c)
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST_CASE("pow handles negative exponents; division by zero throws") {
  Field F = Field::make(5, 2);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  CHECK_THROWS_AS(F.div(3, 0), std::domain_error);
  for (elt a = 1; a < F.order(); ++a) {
    CHECK(F.mul(F.pow(a, -1), a) == 1);
    CHECK(F.pow(a, -3) == F.inv(F.pow(a, 3)));
    CHECK(F.pow(a, 0) == 1);
  }
  CHECK(F.pow(0, 0) == 1);
  CHECK(F.pow(0, 5) == 0);
}

TEST_CASE("tower: frobenius fixes exactly the subfield") {
  Tower tw = Tower::make(2, 2, 3);  // GF(4) in GF(64)
  CHECK(tw.q() == 4);
  CHECK(tw.big().order() == 64);
  int fixed = 0;
  for (elt z = 0; z < 64; ++z) {
    bool fix = tw.frob(z, 1) == z;
    CHECK(fix == tw.in_subfield(z));
    if (fix) ++fixed;
  }
  CHECK(fixed == 4);
  // embedding is a field homomorphism
  const Field& S = tw.sub();
  for (elt a = 0; a < 4; ++a)
    for (elt b = 0; b < 4; ++b) {
      CHECK(tw.embed(S.add(a, b)) == tw.big().add(tw.embed(a), tw.embed(b)));
      CHECK(tw.embed(S.mul(a, b)) == tw.big().mul(tw.embed(a), tw.embed(b)));
    }
}

TEST_CASE("tower: frobenius in GF(4) moves omega, order of frobenius") {
  Tower t4 = Tower::make(2, 1, 2);  // GF(2) in GF(4)
  elt w = t4.omega();
  CHECK(t4.frob(w, 1) != w);
  CHECK(t4.frob(w, 2) == w);

  Tower t125 = Tower::make(5, 1, 3);  // GF(5) in GF(125)
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    elt a = rng() % 125;
    CHECK(t125.frob(a, 3) == a);
    if (t125.in_subfield(a)) CHECK(t125.frob(a, 1) == a);
  }
}

TEST_CASE("tower: decompose/recompose round trip and basis vectors") {
  for (auto tw : {Tower::make(3, 1, 3), Tower::make(2, 2, 3), Tower::make(3, 1, 4)}) {
    CHECK(tw.decompose(0) == std::vector<elt>(tw.t(), 0));
    auto vw = tw.decompose(tw.omega());
    std::vector<elt> want(tw.t(), 0);
    want[1] = 1;
    CHECK(vw == want);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      elt a = rng() % tw.big().order();
      CHECK(tw.recompose(tw.decompose(a)) == a);
      CHECK(tw.in_subfield(a) == (tw.frob(a, 1) == a));
    }
  }
}

TEST_CASE("trace and norm land in the subfield and match closed forms") {
  Tower tw = Tower::make(5, 1, 3);
  const Field& S = tw.sub();
  for (elt a = 0; a < 5; ++a) {
    // embedded subfield element: trace = 3a, norm = a^3
    elt big = tw.embed(a);
    CHECK(tw.trace(big) == S.mul(3 % 5, a));
    CHECK(tw.norm(big) == S.mul(a, S.mul(a, a)));
  }
  Tower t4 = Tower::make(2, 1, 2);
  CHECK(t4.trace(t4.omega()) == 1);  // Tr(w) = w + w^2 = 1 in GF(4)
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    elt a = rng() % 125;
    elt tr = tw.trace(a);  // already a subfield code
    CHECK(tr < 5);
    elt nm = tw.norm(a);
    CHECK(nm < 5);
    if (a) CHECK(nm != 0);
  }
}

TEST_CASE("frobenius is additive and multiplicative, exhaustive small towers") {
  for (auto tw : {Tower::make(2, 1, 3), Tower::make(3, 1, 3), Tower::make(2, 2, 2)}) {
    const Field& B = tw.big();
    for (elt a = 0; a < B.order(); ++a)
      for (elt b = 0; b < B.order(); ++b) {
        CHECK(tw.frob(B.add(a, b), 1) == B.add(tw.frob(a, 1), tw.frob(b, 1)));
        CHECK(tw.frob(B.mul(a, b), 1) == B.mul(tw.frob(a, 1), tw.frob(b, 1)));
      }
  }
  // randomized above the exhaustive threshold
  Tower big = Tower::make(3, 2, 3);  // GF(729)
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    elt a = rng() % 729, b = rng() % 729;
    CHECK(big.frob(big.big().add(a, b), 1) ==
          big.big().add(big.frob(a, 1), big.frob(b, 1)));
    CHECK(big.frob(big.big().mul(a, b), 1) ==
          big.big().mul(big.frob(a, 1), big.frob(b, 1)));
  }
}

TEST_CASE("degree over subfield and membership criterion") {
  Tower tw = Tower::make(2, 1, 6);  // GF(64) over GF(2), subfields GF(2),GF(4),GF(8)
  for (elt a = 1; a < 64; ++a) {
    unsigned s = tw.degree_over_sub(a);
    CHECK(6 % s == 0);
    // x in GF(q^s) iff x^(q^s) == x
    for (unsigned k = 1; k <= 6; ++k) {
      bool in_sub = tw.frob(a, k) == a;
      CHECK(in_sub == (k % s == 0));
    }
  }
}

TEST_CASE("minimal polynomial over the subfield") {
  Tower tw = Tower::make(7, 1, 3);
  auto mp = tw.min_poly_over_sub(tw.omega());
  CHECK(mp.size() == 4);
  CHECK(mp[3] == 1);
  // omega satisfies its own minimal polynomial
  elt acc = 0, wp = 1;
  for (size_t i = 0; i < mp.size(); ++i) {
    acc = tw.big().add(acc, tw.big().mul(tw.embed(mp[i]), wp));
    wp = tw.big().mul(wp, tw.omega());
  }
  CHECK(acc == 0);
  // subfield elements have degree-1 minimal polynomials
  CHECK(tw.min_poly_over_sub(tw.embed(3)).size() == 2);
}

TEST_CASE("prescribed minimal polynomial towers (x^3 + lambda)") {
  // over GF(7): -lambda must be a non-cube; cubes mod 7 are {1,6}
  Field g7 = Field::make(7, 1);
  std::set<elt> cubes;
  for (elt a = 1; a < 7; ++a) cubes.insert(g7.mul(a, g7.mul(a, a)));
  CHECK(cubes == std::set<elt>{1, 6});
  for (elt lam = 1; lam < 7; ++lam) {
    bool irr = is_irreducible(g7, {lam, 0, 0, 1});
    CHECK(irr == !cubes.count(g7.neg(lam)));
  }
  Tower tw = Tower::make_with_min_poly(7, 1, 3, {2, 0, 0, 1});
  elt w = tw.omega();
  elt w3 = tw.big().mul(w, tw.big().mul(w, w));
  CHECK(w3 == tw.big().neg(tw.embed(2)));
  auto mp = tw.min_poly_over_sub(w);
  CHECK(mp == std::vector<elt>{2, 0, 0, 1});
}

TEST_CASE("class representatives split GF(q^t)* into (q^t-1)/(q-1) classes") {
  Tower tw = Tower::make(3, 1, 3);
  std::set<elt> reps;
  for (elt z = 1; z < 27; ++z) {
    reps.insert(tw.class_rep(z));
    // same class iff ratio is in GF(q)
    for (elt y = 1; y < 27; ++y) {
      bool same = tw.class_rep(z) == tw.class_rep(y);
      elt ratio = tw.big().div(z, y);
      CHECK(same == tw.in_subfield(ratio));
    }
  }
  CHECK(reps.size() == tw.class_count());
  CHECK(tw.class_count() == 13);
}

TEST_CASE("large field beyond table range uses polynomial arithmetic") {
  Field F = Field::make(2, 17);  // order 131072 > 2^16
  CHECK_FALSE(F.table_backed());
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    elt a = rng() % F.order(), b = rng() % F.order();
    CHECK(F.mul(a, b) == F.mul(b, a));
    if (b) CHECK(F.mul(F.div(a, b), b) == a);
    CHECK(F.frob_p(F.mul(a, b), 1) == F.mul(F.frob_p(a, 1), F.frob_p(b, 1)));
  }
}
