#pragma once

// Exact arithmetic in GF(p^e) and in towers GF(q) <= GF(q^t).
//
// Elements are integer codes packing the coefficient vector of the element
// over the prime field in base p (ascending powers of the class of x).
// Fields of order <= 2^16 get exp/log (Zech-style) tables; larger fields
// fall back to polynomial reduction. All operations are pure.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pgq::gf {

using elt = std::uint64_t;

inline constexpr std::uint64_t kTableLimit = 1u << 16;

bool is_prime(std::uint64_t n);

// Monic polynomial over GF(p) as ascending coefficient list (length deg+1,
// last entry 1). Used for moduli.
struct PolyGFp {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

class Field {
 public:
  // Deterministic field: the modulus is the lexicographically least primitive
  // monic polynomial of degree e over GF(p) ("least" = ascending-coefficient
  // vector packed in base p, smallest integer).
  static Field make(std::uint64_t p, unsigned e);
  // Field with a supplied modulus (ascending coefficients, length e+1, monic).
  // Throws std::invalid_argument for non-monic or reducible moduli; the
  // message carries a factor witness when trial division finds one.
  static Field make(std::uint64_t p, unsigned e, const std::vector<std::uint64_t>& modulus);

  std::uint64_t p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  // Whether the class of x is a primitive element.
  bool x_primitive() const { return x_primitive_; }
  // A fixed generator of the multiplicative group (least code).
  elt generator() const { return gen_; }

  elt zero() const { return 0; }
  elt one() const { return 1; }

  elt add(elt a, elt b) const;
  elt sub(elt a, elt b) const;
  elt neg(elt a) const;
  elt mul(elt a, elt b) const;
  elt inv(elt a) const;           // throws on a == 0
  elt div(elt a, elt b) const;    // throws on b == 0
  elt pow(elt a, long long n) const;  // negative n allowed for a != 0

  // a^(p^i): the i-fold prime-field Frobenius.
  elt frob_p(elt a, unsigned i) const;

  // Coefficient vector over GF(p), ascending, length e.
  std::vector<std::uint64_t> coeffs(elt a) const;
  elt from_coeffs(const std::vector<std::uint64_t>& c) const;

  // Multiplicative order (0 undefined for a == 0).
  std::uint64_t mult_order(elt a) const;

  bool table_backed() const { return !exp_.empty(); }
  // Raw q x q operation tables for orders <= 256 (hot loops index these
  // directly as table[a * order + b]). Null otherwise.
  const std::uint8_t* mul_table() const { return mul8_.empty() ? nullptr : mul8_.data(); }
  const std::uint8_t* add_table() const { return add8_.empty() ? nullptr : add8_.data(); }
  const std::uint8_t* inv_table() const { return inv8_.empty() ? nullptr : inv8_.data(); }
  const std::uint8_t* neg_table() const { return neg8_.empty() ? nullptr : neg8_.data(); }

  std::string describe() const;

 private:
  friend class Tower;
  Field() = default;
  void init_tables();

  std::uint64_t p_ = 0;
  unsigned e_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::uint64_t> modulus_;
  bool x_primitive_ = false;
  elt gen_ = 0;

  // exp/log tables for order <= kTableLimit
  std::vector<std::uint32_t> exp_;   // exp_[i] = gen^i, i in [0, order-1)
  std::vector<std::uint32_t> log_;   // log_[code], code != 0
  // dense small-op tables for order <= 256
  std::vector<std::uint8_t> mul8_, add8_, inv8_, neg8_;

  elt mul_poly(elt a, elt b) const;  // polynomial multiplication + reduction
  elt add_digits(elt a, elt b) const;
};

// Extension tower GF(q) <= GF(q^t): a single big field GF(p^{e*t}) with
// GF(q) realized inside it as the fixed field of x -> x^q. The subfield is
// named by the canonical standalone GF(p^e); the embedding is the one sending
// the class of x in GF(q) to the least root of its modulus in the big field.
class Tower {
 public:
  // Default tower: deterministic big field, omega = class of x (primitive).
  static Tower make(std::uint64_t p, unsigned e, unsigned t);
  // Tower whose omega has the prescribed minimal polynomial over GF(q)
  // (ascending coefficients over GF(q) as subfield codes, length t+1, monic).
  // omega is the least big-field root. Throws if the polynomial is reducible
  // over GF(q).
  static Tower make_with_min_poly(std::uint64_t p, unsigned e, unsigned t,
                                  const std::vector<elt>& sub_min_poly);

  const Field& big() const { return big_; }
  const Field& sub() const { return sub_; }
  std::uint64_t q() const { return sub_.order(); }
  unsigned t() const { return t_; }
  elt omega() const { return omega_; }

  // Embedding GF(q) -> GF(q^t) and its partial inverse.
  elt embed(elt sub_code) const { return emb_[sub_code]; }
  bool in_subfield(elt big_code) const { return sub_of_[big_code] >= 0; }
  elt to_subfield(elt big_code) const;  // throws if not in the subfield

  // x -> x^{q^i}
  elt frob(elt a, unsigned i = 1) const;
  // least s >= 1, s | t, with a in GF(q^s); a = 0 gives 1.
  unsigned degree_over_sub(elt a) const;

  // a = sum_j vec[j] * omega^j with vec[j] in GF(q) (subfield codes).
  std::vector<elt> decompose(elt a) const;
  elt recompose(const std::vector<elt>& vec) const;

  // Trace and norm from GF(q^t) down to GF(q), as subfield codes.
  elt trace(elt a) const;
  elt norm(elt a) const;

  // Minimal polynomial of a over GF(q), ascending subfield codes, monic.
  std::vector<elt> min_poly_over_sub(elt a) const;

  std::uint64_t class_count() const { return (big_.order() - 1) / (q() - 1); }
  // Canonical representative (least big-field code) of a * GF(q)^*.
  elt class_rep(elt a) const { return a ? rep_[a] : 0; }

 private:
  Tower() = default;
  void finish_init();

  Field big_, sub_;
  unsigned t_ = 0;
  elt omega_ = 0;
  std::vector<elt> emb_;            // subfield code -> big code
  std::vector<std::int32_t> sub_of_;  // big code -> subfield code or -1
  std::vector<std::uint32_t> dec_;  // big code -> packed t subfield codes (8 bits each)
  std::vector<std::uint32_t> dec_hi_;  // high halves when t > 4
  std::vector<std::uint32_t> rep_;  // big code -> class representative
  std::vector<elt> frob1_;          // big code -> code^q
};

// Irreducibility test over an arbitrary small field; returns a nontrivial
// monic factor when one exists (poly given as ascending monic coeff codes).
std::optional<std::vector<elt>> find_factor(const Field& F, const std::vector<elt>& poly);
bool is_irreducible(const Field& F, const std::vector<elt>& poly);

}  // namespace pgq::gf
