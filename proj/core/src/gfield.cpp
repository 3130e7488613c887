#include "pgq/gfield.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pgq::gf {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod_u64(u64 a, u64 n, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (n) {
    if (n & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    n >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod_u64(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      u64 diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factorize_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) { out.push_back(n); return; }
  u64 d = pollard_rho(n);
  factorize_rec(d, out);
  factorize_rec(n / d, out);
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> f;
  factorize_rec(n, f);
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

// ---- packed-coefficient polynomial arithmetic over GF(p) (prime p) ----
// Codes pack ascending coefficients in base p.

std::vector<u64> unpack_digits(u64 code, u64 p, unsigned len) {
  std::vector<u64> d(len, 0);
  for (unsigned i = 0; i < len && code; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

u64 pack_digits(const std::vector<u64>& d, u64 p) {
  u64 code = 0;
  for (size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// multiply a*b mod (monic modulus of degree e), all over GF(p)
u64 polymulmod(u64 a, u64 b, u64 p, const std::vector<u64>& mod_coeffs) {
  const unsigned e = static_cast<unsigned>(mod_coeffs.size()) - 1;
  auto da = unpack_digits(a, p, e), db = unpack_digits(b, p, e);
  std::vector<u64> t(2 * e - 1, 0);
  for (unsigned i = 0; i < e; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < e; ++j) t[i + j] = (t[i + j] + da[i] * db[j]) % p;
  }
  for (unsigned i = 2 * e - 2; i >= e; --i) {
    u64 c = t[i];
    if (c) {
      t[i] = 0;
      for (unsigned j = 0; j < e; ++j)
        t[i - e + j] = (t[i - e + j] + c * (p - mod_coeffs[j])) % p;
    }
    if (i == e) break;
  }
  t.resize(e);
  return pack_digits(t, p);
}

u64 polypowmod(u64 a, u64 n, u64 p, const std::vector<u64>& mod_coeffs) {
  u64 r = 1;
  while (n) {
    if (n & 1) r = polymulmod(r, a, p, mod_coeffs);
    a = polymulmod(a, a, p, mod_coeffs);
    n >>= 1;
  }
  return r;
}

bool gfp_poly_irreducible(u64 p, const std::vector<u64>& coeffs);

// order of the class of x in GF(p)[x]/(modulus) equals p^e - 1?
bool poly_x_primitive(u64 p, const std::vector<u64>& mod_coeffs, u64 order) {
  const unsigned e = static_cast<unsigned>(mod_coeffs.size()) - 1;
  u64 x = e == 1 ? (p - mod_coeffs[0]) % p : p;  // class of x (its root for e=1)
  if (x == 0) return false;
  if (polypowmod(x, order - 1, p, mod_coeffs) != 1) return false;
  for (u64 r : prime_factors(order - 1))
    if (polypowmod(x, (order - 1) / r, p, mod_coeffs) == 1) return false;
  return true;
}

// Rabin irreducibility over GF(p): x^(p^n) == x mod f, and for each prime
// r | n, gcd(x^(p^(n/r)) - x, f) is constant.
std::vector<u64> gfp_pmod(std::vector<u64> a, const std::vector<u64>& f, u64 p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= n; --i) {
    u64 c = a[i];
    if (!c) continue;
    a[i] = 0;
    for (int j = 0; j < n; ++j) a[i - n + j] = (a[i - n + j] + c * (p - f[j])) % p;
  }
  a.resize(n);
  return a;
}

std::vector<u64> gfp_pmulmod(const std::vector<u64>& a, const std::vector<u64>& b,
                             const std::vector<u64>& f, u64 p) {
  std::vector<u64> t(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p;
  }
  return gfp_pmod(std::move(t), f, p);
}

std::vector<u64> gfp_x_power(u64 exp_base, unsigned exp_iter, const std::vector<u64>& f, u64 p) {
  // x^(exp_base^exp_iter) mod f, via exp_iter successive exponentiations
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<u64> cur(n, 0);
  if (n == 1) {
    cur[0] = (p - f[0]) % p;  // x == -f0
    for (unsigned it = 0; it < exp_iter; ++it) cur[0] = powmod_u64(cur[0], exp_base, p);
    return cur;
  }
  cur[1] = 1;
  for (unsigned it = 0; it < exp_iter; ++it) {
    std::vector<u64> r(n, 0);
    r[0] = 1;
    std::vector<u64> base = cur;
    u64 e = exp_base;
    while (e) {
      if (e & 1) r = gfp_pmulmod(r, base, f, p);
      base = gfp_pmulmod(base, base, f, p);
      e >>= 1;
    }
    cur = std::move(r);
  }
  return cur;
}

int gfp_deg(const std::vector<u64>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

std::vector<u64> gfp_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  auto inv_mod_p = [&](u64 v) { return powmod_u64(v, p - 2, p); };
  while (gfp_deg(b) >= 0) {
    // a mod b
    int db = gfp_deg(b);
    u64 lead_inv = inv_mod_p(b[db]);
    for (int i = gfp_deg(a); i >= db; --i) {
      u64 c = a[i];
      if (!c) continue;
      u64 s = mulmod_u64(c, lead_inv, p);
      for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + s * (p - b[j])) % p;
    }
    std::swap(a, b);
  }
  return a;
}

bool gfp_poly_irreducible(u64 p, const std::vector<u64>& coeffs) {
  const unsigned n = static_cast<unsigned>(coeffs.size()) - 1;
  if (n == 1) return true;
  auto xq = gfp_x_power(p, n, coeffs, p);
  // x^(p^n) - x must vanish
  std::vector<u64> diff = xq;
  diff[1] = (diff[1] + p - 1) % p;
  if (gfp_deg(diff) >= 0) return false;
  for (u64 r : prime_factors(n)) {
    auto xr = gfp_x_power(p, n / static_cast<unsigned>(r), coeffs, p);
    std::vector<u64> d2 = xr;
    d2.resize(std::max<size_t>(d2.size(), 2), 0);
    d2[1] = (d2[1] + p - 1) % p;
    auto g = gfp_gcd(coeffs, d2, p);
    if (gfp_deg(g) > 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) { return miller_rabin(n); }

// ---------------------------------------------------------------- Field ----

Field Field::make(std::uint64_t p, unsigned e) {
  if (!miller_rabin(p)) throw std::invalid_argument("p is not prime");
  if (e < 1) throw std::invalid_argument("degree must be >= 1");
  u64 order = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (order > (u64(1) << 62) / p) throw std::invalid_argument("field order exceeds 2^62");
    order *= p;
  }
  // least primitive monic polynomial: scan packed low-coefficient encodings
  for (u64 m = 0;; ++m) {
    if (m >= order) throw std::logic_error("no primitive polynomial found");
    std::vector<u64> coeffs = unpack_digits(m, p, e);
    coeffs.push_back(1);
    if (!gfp_poly_irreducible(p, coeffs)) continue;
    if (!poly_x_primitive(p, coeffs, order)) continue;
    Field F;
    F.p_ = p;
    F.e_ = e;
    F.order_ = order;
    F.modulus_ = coeffs;
    F.x_primitive_ = true;
    F.init_tables();
    return F;
  }
}

Field Field::make(std::uint64_t p, unsigned e, const std::vector<std::uint64_t>& modulus) {
  if (!miller_rabin(p)) throw std::invalid_argument("p is not prime");
  if (modulus.size() != e + 1) throw std::invalid_argument("modulus must have degree e");
  if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  std::vector<u64> coeffs(modulus);
  for (auto& c : coeffs) c %= p;
  if (!gfp_poly_irreducible(p, coeffs)) {
    // find a witness if cheap: trial roots, then low-degree trial division
    std::ostringstream msg;
    msg << "modulus is reducible over GF(" << p << ")";
    bool found = false;
    for (u64 r = 0; r < p && r < 4096 && !found; ++r) {
      u64 v = 0;
      for (size_t i = coeffs.size(); i-- > 0;) v = (v * r + coeffs[i]) % p;
      if (v == 0) {
        msg << "; factor witness: (x - " << r << ")";
        found = true;
      }
    }
    if (!found && e <= 24 && p <= 64) {
      for (unsigned d = 2; d <= e / 2 && !found; ++d) {
        u64 cand_count = 1;
        for (unsigned i = 0; i < d; ++i) cand_count *= p;
        for (u64 mlow = 0; mlow < cand_count && !found; ++mlow) {
          std::vector<u64> g = unpack_digits(mlow, p, d);
          g.push_back(1);
          auto rem = gfp_gcd(coeffs, g, p);
          if (gfp_deg(rem) == static_cast<int>(d)) {
            msg << "; factor witness of degree " << d;
            found = true;
          }
        }
      }
    }
    throw std::invalid_argument(msg.str());
  }
  u64 order = 1;
  for (unsigned i = 0; i < e; ++i) order *= p;
  Field F;
  F.p_ = p;
  F.e_ = e;
  F.order_ = order;
  F.modulus_ = coeffs;
  F.x_primitive_ = poly_x_primitive(p, coeffs, order);
  F.init_tables();
  return F;
}

void Field::init_tables() {
  // pick the generator: class of x when primitive, else least primitive code
  if (x_primitive_ && e_ > 1) {
    gen_ = p_;
  } else if (e_ == 1) {
    gen_ = 1;
    for (u64 c = 2; c < order_; ++c) {
      bool prim = true;
      for (u64 r : prime_factors(order_ - 1))
        if (powmod_u64(c, (order_ - 1) / r, p_) == 1) { prim = false; break; }
      if (prim) { gen_ = c; break; }
    }
  } else {
    gen_ = 0;
    for (u64 c = p_; c < order_; ++c) {
      bool prim = polypowmod(c, order_ - 1, p_, modulus_) == 1;
      if (prim)
        for (u64 r : prime_factors(order_ - 1))
          if (polypowmod(c, (order_ - 1) / r, p_, modulus_) == 1) { prim = false; break; }
      if (prim) { gen_ = c; break; }
    }
    if (gen_ == 0) throw std::logic_error("no multiplicative generator found");
  }

  if (order_ > kTableLimit) return;

  exp_.resize(order_ - 1);
  log_.assign(order_, 0);
  u64 cur = 1;
  for (u64 i = 0; i < order_ - 1; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = e_ == 1 ? mulmod_u64(cur, gen_, p_) : polymulmod(cur, gen_, p_, modulus_);
  }
  if (cur != 1) throw std::logic_error("generator order mismatch");

  if (order_ <= 256) {
    const unsigned q = static_cast<unsigned>(order_);
    mul8_.resize(q * q);
    add8_.resize(q * q);
    inv8_.assign(q, 0);
    neg8_.resize(q);
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        mul8_[a * q + b] = static_cast<std::uint8_t>(
            (a && b) ? exp_[(log_[a] + log_[b]) % (q - 1)] : 0);
        add8_[a * q + b] = static_cast<std::uint8_t>(add_digits(a, b));
      }
      if (a) inv8_[a] = static_cast<std::uint8_t>(exp_[(q - 1 - log_[a]) % (q - 1)]);
      neg8_[a] = static_cast<std::uint8_t>(neg(a));
    }
  }
}

elt Field::add_digits(elt a, elt b) const {
  if (p_ == 2) return a ^ b;
  u64 out = 0, mult = 1;
  while (a || b) {
    u64 da = a % p_, db = b % p_;
    out += ((da + db) % p_) * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

elt Field::add(elt a, elt b) const { return add_digits(a, b); }

elt Field::neg(elt a) const {
  if (p_ == 2) return a;
  u64 out = 0, mult = 1;
  while (a) {
    u64 d = a % p_;
    out += (d ? p_ - d : 0) * mult;
    mult *= p_;
    a /= p_;
  }
  return out;
}

elt Field::sub(elt a, elt b) const { return add_digits(a, neg(b)); }

elt Field::mul_poly(elt a, elt b) const {
  if (e_ == 1) return mulmod_u64(a, b, p_);
  return polymulmod(a, b, p_, modulus_);
}

elt Field::mul(elt a, elt b) const {
  if (!a || !b) return 0;
  if (!exp_.empty()) return exp_[(static_cast<u64>(log_[a]) + log_[b]) % (order_ - 1)];
  return mul_poly(a, b);
}

elt Field::inv(elt a) const {
  if (!a) throw std::domain_error("division by zero in GF(" + std::to_string(order_) + ")");
  if (!exp_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return pow(a, static_cast<long long>(order_) - 2);
}

elt Field::div(elt a, elt b) const { return mul(a, inv(b)); }

elt Field::pow(elt a, long long n) const {
  if (a == 0) {
    if (n == 0) return 1;
    if (n < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  u64 m = order_ - 1;
  u64 r = static_cast<u64>(((n % static_cast<long long>(m)) + static_cast<long long>(m)) % static_cast<long long>(m));
  if (!exp_.empty()) return exp_[mulmod_u64(log_[a], r, m) % m];
  elt acc = 1, base = a;
  while (r) {
    if (r & 1) acc = mul_poly(acc, base);
    base = mul_poly(base, base);
    r >>= 1;
  }
  return acc;
}

elt Field::frob_p(elt a, unsigned i) const {
  if (a == 0 || a == 1) return a;
  u64 m = order_ - 1;
  u64 ex = 1 % m;
  for (unsigned k = 0; k < i; ++k) ex = mulmod_u64(ex, p_ % m, m);
  if (!exp_.empty()) return exp_[mulmod_u64(log_[a], ex, m)];
  elt acc = 1, base = a;
  u64 r = ex;
  while (r) {
    if (r & 1) acc = mul_poly(acc, base);
    base = mul_poly(base, base);
    r >>= 1;
  }
  return acc;
}

std::vector<std::uint64_t> Field::coeffs(elt a) const { return unpack_digits(a, p_, e_); }

elt Field::from_coeffs(const std::vector<std::uint64_t>& c) const {
  if (c.size() > e_) throw std::invalid_argument("too many coefficients");
  u64 code = 0;
  for (size_t i = c.size(); i-- > 0;) code = code * p_ + (c[i] % p_);
  return code;
}

std::uint64_t Field::mult_order(elt a) const {
  if (!a) return 0;
  u64 ord = order_ - 1;
  for (u64 r : prime_factors(order_ - 1))
    while (ord % r == 0 && pow(a, static_cast<long long>(ord / r)) == 1) ord /= r;
  return ord;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << order_ << ") = GF(" << p_ << "^" << e_ << "), modulus [";
  for (size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- Tower ----

Tower Tower::make(std::uint64_t p, unsigned e, unsigned t) {
  if (t < 2) throw std::invalid_argument("tower needs t >= 2");
  Tower tw;
  tw.big_ = Field::make(p, e * t);
  tw.sub_ = Field::make(p, e);
  tw.t_ = t;
  tw.omega_ = p;  // class of x, primitive by construction
  tw.finish_init();
  return tw;
}

Tower Tower::make_with_min_poly(std::uint64_t p, unsigned e, unsigned t,
                                const std::vector<elt>& sub_min_poly) {
  if (t < 2) throw std::invalid_argument("tower needs t >= 2");
  if (sub_min_poly.size() != t + 1 || sub_min_poly.back() != 1)
    throw std::invalid_argument("minimal polynomial must be monic of degree t");
  Tower tw;
  tw.big_ = Field::make(p, e * t);
  tw.sub_ = Field::make(p, e);
  tw.t_ = t;
  if (!is_irreducible(tw.sub_, sub_min_poly))
    throw std::invalid_argument("prescribed minimal polynomial is reducible over GF(q)");

  // embedding of GF(q) must exist before we can evaluate the polynomial
  std::vector<elt> emb(tw.sub_.order());
  {
    elt root = 0;
    bool found = false;
    for (u64 z = 0; z < tw.big_.order() && !found; ++z) {
      elt v = 0;
      const auto& m = tw.sub_.modulus();
      for (size_t i = m.size(); i-- > 0;) v = tw.big_.add(tw.big_.mul(v, z), m[i] % p);
      if (v == 0) { root = z; found = true; }
    }
    if (!found) throw std::logic_error("subfield modulus has no root in the big field");
    for (u64 c = 0; c < tw.sub_.order(); ++c) {
      elt v = 0;
      auto d = tw.sub_.coeffs(c);
      for (size_t i = d.size(); i-- > 0;) v = tw.big_.add(tw.big_.mul(v, root), d[i]);
      emb[c] = v;
    }
  }
  for (u64 z = 0; z < tw.big_.order(); ++z) {
    elt v = 0;
    for (size_t i = sub_min_poly.size(); i-- > 0;)
      v = tw.big_.add(tw.big_.mul(v, z), emb[sub_min_poly[i]]);
    if (v == 0) { tw.omega_ = z; break; }
  }
  if (tw.omega_ == 0) throw std::logic_error("prescribed polynomial has no root in the big field");
  tw.finish_init();
  return tw;
}

void Tower::finish_init() {
  const Field& B = big_;
  const u64 Q = B.order(), q = sub_.order();
  if (q > 256 || t_ > 8) throw std::invalid_argument("tower limited to q <= 256, t <= 8");
  if (Q > (u64(1) << 24)) throw std::invalid_argument("tower limited to big order <= 2^24");

  // embedding: least root of the subfield modulus
  emb_.assign(q, 0);
  {
    elt root = 0;
    bool found = false;
    for (u64 z = 0; z < Q && !found; ++z) {
      elt v = 0;
      const auto& m = sub_.modulus();
      for (size_t i = m.size(); i-- > 0;) v = B.add(B.mul(v, z), m[i]);
      if (v == 0) { root = z; found = true; }
    }
    if (!found) throw std::logic_error("subfield modulus has no root in the big field");
    for (u64 c = 0; c < q; ++c) {
      elt v = 0;
      auto d = sub_.coeffs(c);
      for (size_t i = d.size(); i-- > 0;) v = B.add(B.mul(v, root), d[i]);
      emb_[c] = v;
    }
  }
  sub_of_.assign(Q, -1);
  for (u64 c = 0; c < q; ++c) sub_of_[emb_[c]] = static_cast<std::int32_t>(c);

  // frobenius x -> x^q table
  frob1_.assign(Q, 0);
  for (u64 z = 0; z < Q; ++z) frob1_[z] = B.pow(z, static_cast<long long>(q));

  // omega must have degree t over GF(q)
  {
    elt w = omega_;
    for (unsigned s = 1; s < t_; ++s) {
      w = frob1_[w];
      if (w == omega_) throw std::invalid_argument("omega generates a proper subfield");
    }
  }

  // decomposition table: enumerate all coordinate tuples
  dec_.assign(Q, 0);
  std::vector<char> seen(Q, 0);
  std::vector<elt> wpow(t_);
  wpow[0] = 1;
  for (unsigned j = 1; j < t_; ++j) wpow[j] = B.mul(wpow[j - 1], omega_);
  std::vector<u64> digit(t_, 0);
  for (u64 idx = 0;; ++idx) {
    elt v = 0;
    for (unsigned j = 0; j < t_; ++j)
      if (digit[j]) v = B.add(v, B.mul(emb_[digit[j]], wpow[j]));
    if (seen[v]) throw std::logic_error("basis powers of omega are dependent over GF(q)");
    seen[v] = 1;
    u64 packed64 = 0;
    for (unsigned j = 0; j < t_; ++j) packed64 |= static_cast<u64>(digit[j]) << (8 * j);
    dec_[v] = static_cast<std::uint32_t>(packed64 & 0xffffffffu);
    if (t_ > 4) {
      if (dec_hi_.empty()) dec_hi_.assign(Q, 0);
      dec_hi_[v] = static_cast<std::uint32_t>(packed64 >> 32);
    }
    unsigned j = 0;
    for (; j < t_; ++j) {
      if (++digit[j] < q) break;
      digit[j] = 0;
    }
    if (j == t_) break;
  }

  // canonical class representatives under GF(q)^* scaling
  rep_.assign(Q, 0);
  for (u64 z = 1; z < Q; ++z) {
    if (rep_[z]) continue;
    elt best = z;
    std::vector<elt> orbit;
    for (u64 c = 1; c < q; ++c) {
      elt m = B.mul(emb_[c], z);
      orbit.push_back(m);
      if (m < best) best = m;
    }
    for (elt m : orbit) rep_[m] = static_cast<std::uint32_t>(best);
  }
}

elt Tower::to_subfield(elt big_code) const {
  auto s = sub_of_[big_code];
  if (s < 0) throw std::domain_error("element is not in the subfield");
  return static_cast<elt>(s);
}

elt Tower::frob(elt a, unsigned i) const {
  i %= t_;
  for (unsigned k = 0; k < i; ++k) a = frob1_[a];
  return a;
}

unsigned Tower::degree_over_sub(elt a) const {
  elt w = a;
  for (unsigned s = 1; s <= t_; ++s) {
    w = frob1_[w];
    if (w == a) return s;
  }
  throw std::logic_error("frobenius orbit did not close");
}

std::vector<elt> Tower::decompose(elt a) const {
  std::vector<elt> v(t_);
  u64 packed = dec_[a];
  if (!dec_hi_.empty()) packed |= static_cast<u64>(dec_hi_[a]) << 32;
  for (unsigned j = 0; j < t_; ++j) v[j] = (packed >> (8 * j)) & 0xff;
  return v;
}

elt Tower::recompose(const std::vector<elt>& vec) const {
  elt v = 0, wp = 1;
  for (unsigned j = 0; j < t_; ++j) {
    if (vec[j]) v = big_.add(v, big_.mul(emb_[vec[j]], wp));
    wp = big_.mul(wp, omega_);
  }
  return v;
}

elt Tower::trace(elt a) const {
  elt s = 0, w = a;
  for (unsigned i = 0; i < t_; ++i) {
    s = big_.add(s, w);
    w = frob1_[w];
  }
  return to_subfield(s);
}

elt Tower::norm(elt a) const {
  elt s = 1, w = a;
  for (unsigned i = 0; i < t_; ++i) {
    s = big_.mul(s, w);
    w = frob1_[w];
  }
  return to_subfield(s);
}

std::vector<elt> Tower::min_poly_over_sub(elt a) const {
  unsigned s = degree_over_sub(a);
  // product of (X - a^(q^i)) over the orbit
  std::vector<elt> poly{1};
  elt w = a;
  for (unsigned i = 0; i < s; ++i) {
    std::vector<elt> next(poly.size() + 1, 0);
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = big_.add(next[j + 1], poly[j]);
      next[j] = big_.add(next[j], big_.mul(big_.neg(w), poly[j]));
    }
    poly = std::move(next);
    w = frob1_[w];
  }
  std::vector<elt> out(poly.size());
  for (size_t j = 0; j < poly.size(); ++j) out[j] = to_subfield(poly[j]);
  return out;
}

// -------------------------------------------- generic irreducibility ----

namespace {

int deg_of(const std::vector<elt>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

std::vector<elt> f_pmod(const Field& F, std::vector<elt> a, const std::vector<elt>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= n; --i) {
    elt c = a[i];
    if (!c) continue;
    a[i] = 0;
    for (int j = 0; j < n; ++j) a[i - n + j] = F.add(a[i - n + j], F.mul(F.neg(c), f[j]));
  }
  a.resize(n);
  return a;
}

std::vector<elt> f_pmulmod(const Field& F, const std::vector<elt>& a, const std::vector<elt>& b,
                           const std::vector<elt>& f) {
  std::vector<elt> t(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) t[i + j] = F.add(t[i + j], F.mul(a[i], b[j]));
  }
  return f_pmod(F, std::move(t), f);
}

std::vector<elt> f_gcd(const Field& F, std::vector<elt> a, std::vector<elt> b) {
  while (deg_of(b) >= 0) {
    int db = deg_of(b);
    elt li = F.inv(b[db]);
    for (int i = deg_of(a); i >= db; --i) {
      elt c = a[i];
      if (!c) continue;
      elt s = F.mul(c, li);
      for (int j = 0; j <= db; ++j) a[i - db + j] = F.add(a[i - db + j], F.mul(F.neg(s), b[j]));
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace

std::optional<std::vector<elt>> find_factor(const Field& F, const std::vector<elt>& poly) {
  const int n = deg_of(poly);
  if (n <= 1) return std::nullopt;
  // trial roots give degree-1 witnesses
  for (u64 r = 0; r < F.order() && r < (1u << 20); ++r) {
    elt v = 0;
    for (size_t i = poly.size(); i-- > 0;) v = F.add(F.mul(v, r), poly[i]);
    if (v == 0) return std::vector<elt>{F.neg(r), 1};
  }
  // bounded trial division for higher-degree factors
  for (int d = 2; d <= n / 2; ++d) {
    u128 count = 1;
    for (int i = 0; i < d; ++i) count *= F.order();
    if (count > (1u << 22)) break;
    std::vector<elt> g(d + 1, 0);
    g[d] = 1;
    for (u64 m = 0; m < static_cast<u64>(count); ++m) {
      u64 mm = m;
      for (int i = 0; i < d; ++i) { g[i] = mm % F.order(); mm /= F.order(); }
      auto rem = f_pmod(F, poly, g);
      if (deg_of(rem) < 0) return g;
    }
  }
  return std::nullopt;
}

bool is_irreducible(const Field& F, const std::vector<elt>& poly) {
  const int n = deg_of(poly);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (poly[0] == 0) return false;  // divisible by x
  const u64 s = F.order();
  // x^(s^n) mod poly via n successive s-th powers in the quotient ring
  std::vector<elt> cur(n, 0);
  cur[1] = 1;
  for (int it = 0; it < n; ++it) {
    std::vector<elt> r(n, 0);
    r[0] = 1;
    std::vector<elt> base = cur;
    u64 e = s;
    while (e) {
      if (e & 1) r = f_pmulmod(F, r, base, poly);
      base = f_pmulmod(F, base, base, poly);
      e >>= 1;
    }
    cur = std::move(r);
  }
  std::vector<elt> diff = cur;
  diff[1] = F.sub(diff[1], 1);
  if (deg_of(diff) >= 0) return false;
  for (u64 rfac : prime_factors(static_cast<u64>(n))) {
    int k = n / static_cast<int>(rfac);
    std::vector<elt> c2(n, 0);
    c2[1] = 1;
    for (int it = 0; it < k; ++it) {
      std::vector<elt> r(n, 0);
      r[0] = 1;
      std::vector<elt> base = c2;
      u64 e = s;
      while (e) {
        if (e & 1) r = f_pmulmod(F, r, base, poly);
        base = f_pmulmod(F, base, base, poly);
        e >>= 1;
      }
      c2 = std::move(r);
    }
    std::vector<elt> d2 = c2;
    d2[1] = F.sub(d2[1], 1);
    auto g = f_gcd(F, poly, d2);
    if (deg_of(g) > 0) return false;
  }
  return true;
}

}  // namespace pgq::gf
