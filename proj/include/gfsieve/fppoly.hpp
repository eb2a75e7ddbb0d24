#ifndef GFSIEVE_FPPOLY_HPP
#define GFSIEVE_FPPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gfsieve {

/// Dense univariate polynomial over Z/q, q a small prime. This is the ring
/// element type of F_q(T)'s ring of integers F_q[T].
///
/// Representation: coefficient vector low-to-high with no trailing zeros;
/// the zero polynomial is the empty vector. All operations keep the
/// representation canonical.
class FpPoly {
 public:
  FpPoly() : q_(0) {}
  FpPoly(uint32_t q, std::vector<uint32_t> coeffs);

  static FpPoly zero(uint32_t q) { return FpPoly(q, {}); }
  static FpPoly one(uint32_t q) { return FpPoly(q, {1}); }
  static FpPoly constant(uint32_t q, uint32_t c);
  static FpPoly variable(uint32_t q) { return FpPoly(q, {0, 1}); }
  /// Decode from the integer sum c_0 + c_1 q + c_2 q^2 + ...; inverse of
  /// encode(). Gives the canonical enumeration order of F_q[T].
  static FpPoly decode(uint32_t q, uint64_t index);

  uint32_t q() const { return q_; }
  bool is_zero() const { return c_.empty(); }
  bool is_unit() const { return c_.size() == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint32_t leading() const { return c_.back(); }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  uint64_t encode() const;

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator-() const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(uint32_t c) const;
  FpPoly shifted(int k) const;  // * T^k

  bool operator==(const FpPoly& o) const { return q_ == o.q_ && c_ == o.c_; }
  bool operator!=(const FpPoly& o) const { return !(*this == o); }
  /// Canonical total order: by degree, then by coefficients from the top.
  /// Coincides with numeric order of encode().
  bool operator<(const FpPoly& o) const;

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const FpPoly& a, const FpPoly& b, FpPoly& quo, FpPoly& rem);
  FpPoly mod(const FpPoly& m) const;
  bool divides(const FpPoly& a) const;  // *this | a

  /// Monic gcd; gcd(0,0) = 0.
  static FpPoly gcd(FpPoly a, FpPoly b);
  /// g = gcd(a,b) monic with g = u*a + v*b.
  static FpPoly gcd_ext(const FpPoly& a, const FpPoly& b, FpPoly& u, FpPoly& v);

  /// this^e mod m.
  FpPoly pow_mod(uint64_t e, const FpPoly& m) const;
  FpPoly make_monic() const;

  /// Rabin's test: a monic polynomial of degree >= 1 is irreducible iff
  /// T^{q^n} == T (mod f) and gcd(T^{q^{n/l}} - T, f) = 1 for every prime l|n.
  bool is_irreducible() const;

  /// Evaluate at a scalar in Z/q.
  uint32_t eval(uint32_t x) const;

  std::string to_string() const;  // e.g. "T^3+T+1"

 private:
  void trim();
  uint32_t q_;
  std::vector<uint32_t> c_;
};

/// Inverse of a nonzero element of Z/q.
uint32_t fp_inv(uint32_t a, uint32_t q);

}  // namespace gfsieve

#endif
