#ifndef GFSIEVE_HEIGHTS_HPP
#define GFSIEVE_HEIGHTS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gfsieve/field.hpp"

namespace gfsieve {

/// Exact multiplicative height H_K. Over Q a nonnegative rational; over
/// F_q(T) the pair (q, k) meaning q^k. All products and comparisons are
/// exact; log() exists only for comparison boundaries.
class HeightValue {
 public:
  HeightValue() : v_(Rat(1)) {}
  static HeightValue rational(Rat r);
  static HeightValue qpow(uint32_t q, int64_t k);
  static HeightValue one() { return HeightValue(); }

  bool is_qpow() const { return std::holds_alternative<QPow>(v_); }
  int64_t exponent() const { return std::get<QPow>(v_).k; }
  uint32_t base() const { return std::get<QPow>(v_).q; }

  /// Exact value as a rational (materializes q^k when needed).
  Rat as_rational() const;

  HeightValue operator*(const HeightValue& o) const;
  HeightValue pow(uint64_t e) const;

  bool operator==(const HeightValue& o) const;
  bool operator<(const HeightValue& o) const;
  bool operator<=(const HeightValue& o) const { return *this < o || *this == o; }

  bool leq_rational(const Rat& bound) const;
  bool lt_rational(const Rat& bound) const;

  double log() const;
  double to_double() const;
  std::string to_string() const;

 private:
  struct QPow {
    uint32_t q;
    int64_t k;
    bool operator==(const QPow& o) const { return q == o.q && k == o.k; }
  };
  std::variant<Rat, QPow> v_;
};

// ---- scalar and projective heights ----

/// H_K(x) = H_K(1:x) for a field element given in fractional form; the pair
/// is reduced to lowest terms internally. H_K(0) = 1.
HeightValue height_fraction(const RingElement& num, const RingElement& den);

/// H_K of a ring element (denominator 1): max(1,|x|) over Z, q^{max(0,deg)}
/// over F_q[T].
HeightValue height_scalar(const RingElement& x);
HeightValue height_scalar_q(const Rat& x);

/// H_K of a projective tuple over O_K; throws ZeroPoint on the zero tuple.
/// For the implemented fields this is the max coordinate size after gcd
/// clearing and is invariant under scaling.
HeightValue height_projective(const std::vector<RingElement>& x);

/// H_K(1 : x_1 : ... : x_d) for an affine tuple over O_K.
HeightValue height_affine_one(const std::vector<RingElement>& x);

/// Canonical projective representative: divide by the gcd, then make the
/// first nonzero coordinate positive (Q) or monic (F_q(T)).
std::vector<RingElement> projective_canonical(std::vector<RingElement> x);

// ---- bounded boxes ----

enum class BoxKind { Scalar, Affine, Projective };

/// [N]-style box: scalar box [N]_{O_K}, affine box [N]^d, or projective box
/// [N]_{P^d}. N is an arbitrary positive rational bound.
struct BoundedBox {
  GlobalFieldDesc field;
  Rat N;
  int dim = 1;  // number of affine coordinates, or projective dimension
  BoxKind kind = BoxKind::Scalar;
};

inline constexpr int64_t kDefaultBoxBudget = 100000000;  // 1e8 points

/// Exact cardinality of the box.
Int box_count(const BoundedBox& box);

/// Membership test against the defining height inequality.
bool box_contains(const BoundedBox& box, const std::vector<RingElement>& pt);

/// All members, canonically ordered (lexicographic on canonical
/// coordinates); throws BoxTooLarge past the budget. The returned count of
/// elements always equals box_count.
std::vector<std::vector<RingElement>> enumerate_bounded(const BoundedBox& box,
                                                        int64_t budget = kDefaultBoxBudget);

/// Scalar-box members as a standalone stream (ascending canonical order).
std::vector<RingElement> enumerate_scalar(const GlobalFieldDesc& field, const Rat& N,
                                          int64_t budget = kDefaultBoxBudget);

}  // namespace gfsieve

#endif
