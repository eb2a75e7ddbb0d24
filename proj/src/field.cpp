#include "gfsieve/field.hpp"

#include <algorithm>
#include <cmath>

namespace gfsieve {

GlobalFieldDesc GlobalFieldDesc::function_field(uint32_t q) {
  for (uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) throw KindMismatch("constant field cardinality must be prime");
  }
  if (q < 2) throw KindMismatch("constant field cardinality must be prime");
  return {FieldKind::RationalFunctionField, q, 1};
}

RingElement RingElement::from_int(const GlobalFieldDesc& f, int64_t v) {
  if (f.is_rational()) return RingElement(Int(v));
  int64_t r = v % f.q;
  if (r < 0) r += f.q;
  return RingElement(FpPoly::constant(f.q, static_cast<uint32_t>(r)));
}

RingElement RingElement::zero(const GlobalFieldDesc& f) { return from_int(f, 0); }
RingElement RingElement::one(const GlobalFieldDesc& f) { return from_int(f, 1); }

bool RingElement::is_zero() const {
  return is_integer() ? as_int() == 0 : as_poly().is_zero();
}

bool RingElement::is_unit() const {
  return is_integer() ? (as_int() == 1 || as_int() == -1) : as_poly().is_unit();
}

bool RingElement::is_one() const {
  if (is_integer()) return as_int() == 1;
  return as_poly().degree() == 0 && as_poly().coeff(0) == 1;
}

namespace {
void check_kinds(const RingElement& a, const RingElement& b) {
  if (a.is_integer() != b.is_integer()) throw KindMismatch("mixed ring element kinds");
  if (!a.is_integer() && a.as_poly().q() != b.as_poly().q()) {
    throw KindMismatch("mixed constant fields");
  }
}
}  // namespace

RingElement RingElement::operator+(const RingElement& o) const {
  check_kinds(*this, o);
  if (is_integer()) return RingElement(as_int() + o.as_int());
  return RingElement(as_poly() + o.as_poly());
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_kinds(*this, o);
  if (is_integer()) return RingElement(as_int() - o.as_int());
  return RingElement(as_poly() - o.as_poly());
}

RingElement RingElement::operator-() const {
  if (is_integer()) return RingElement(-as_int());
  return RingElement(-as_poly());
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_kinds(*this, o);
  if (is_integer()) return RingElement(as_int() * o.as_int());
  return RingElement(as_poly() * o.as_poly());
}

bool RingElement::operator<(const RingElement& o) const {
  check_kinds(*this, o);
  if (is_integer()) return as_int() < o.as_int();
  return as_poly() < o.as_poly();
}

RingElement RingElement::divide_exact(const RingElement& d) const {
  check_kinds(*this, d);
  if (d.is_zero()) throw ZeroElement("division by zero");
  if (is_integer()) {
    Int quo = as_int() / d.as_int();
    if (quo * d.as_int() != as_int()) throw KindMismatch("inexact division");
    return RingElement(quo);
  }
  FpPoly quo, rem;
  FpPoly::divmod(as_poly(), d.as_poly(), quo, rem);
  if (!rem.is_zero()) throw KindMismatch("inexact division");
  return RingElement(quo);
}

bool RingElement::divisible_by(const RingElement& d) const {
  check_kinds(*this, d);
  if (d.is_zero()) return is_zero();
  if (is_integer()) return as_int() % d.as_int() == 0;
  return d.as_poly().divides(as_poly());
}

RingElement RingElement::gcd(const RingElement& a, const RingElement& b) {
  check_kinds(a, b);
  if (a.is_integer()) return RingElement(boost::multiprecision::gcd(a.as_int(), b.as_int()));
  return RingElement(FpPoly::gcd(a.as_poly(), b.as_poly()));
}

RingElement RingElement::unit_normalized() const {
  if (is_integer()) return RingElement(boost::multiprecision::abs(as_int()));
  return RingElement(as_poly().make_monic());
}

Int RingElement::norm() const {
  if (is_zero()) throw ZeroElement("norm of zero");
  if (is_integer()) return boost::multiprecision::abs(as_int());
  Int n = 1;
  for (int i = 0; i < as_poly().degree(); ++i) n *= as_poly().q();
  return n;
}

std::string RingElement::to_string() const {
  return is_integer() ? as_int().str() : as_poly().to_string();
}

PrimeOfK PrimeOfK::of_int(int64_t p) {
  if (p < 2) throw KindMismatch("prime generator must be >= 2");
  return {RingElement(Int(p)), Int(p)};
}

PrimeOfK PrimeOfK::of_poly(const FpPoly& g) {
  if (!g.is_monic() || g.degree() < 1) throw KindMismatch("prime generator must be monic of degree >= 1");
  Int n = 1;
  for (int i = 0; i < g.degree(); ++i) n *= g.q();
  return {RingElement(g), n};
}

FieldConstants::FieldConstants(double c1_, double c2_, double c3_, double c4_, double c6_,
                               double cCount_)
    : c1(c1_), c2(c2_), c3(c3_), c4(c4_), c5(2.0 * (c4_ + 3.0) / c1_), c6(c6_), cCount(cCount_) {
  if (!(c1 > 0 && c2 > 0 && c3 > 0 && c4 > 0 && c6 > 0 && cCount > 0)) {
    throw KindMismatch("field constants must be positive");
  }
  if (c1 > c2 || c3 > c4) throw KindMismatch("need c1 <= c2 and c3 <= c4");
}

FieldConstants FieldConstants::defaults(const GlobalFieldDesc& f) {
  if (f.is_rational()) return FieldConstants(0.5, 1.5, 0.5, 1.5, 1.0, 2.0);
  return FieldConstants(0.5, 1.5, 0.5, 1.5, 1.0, 2.0 * f.q);
}

Int prime_norm(const PrimeOfK& p) { return p.norm; }

int ord_at(const RingElement& x, const PrimeOfK& p) {
  if (x.is_zero()) throw ZeroElement("ord of zero element");
  int e = 0;
  RingElement cur = x;
  while (cur.divisible_by(p.generator)) {
    cur = cur.divide_exact(p.generator);
    ++e;
  }
  return e;
}

namespace {

std::vector<int64_t> sieve_upto(int64_t limit) {
  // segmented Eratosthenes; segments keep the working set cache-sized
  std::vector<int64_t> primes;
  if (limit < 2) return primes;
  int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<bool> small(root + 1, true);
  std::vector<int64_t> base;
  for (int64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (int64_t j = i * i; j <= root; j += i) small[j] = false;
  }
  const int64_t seg = 1 << 16;
  std::vector<bool> mark;
  for (int64_t lo = 2; lo <= limit; lo += seg) {
    int64_t hi = std::min(lo + seg - 1, limit);
    mark.assign(hi - lo + 1, true);
    for (int64_t p : base) {
      if (p * p > hi) break;
      int64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (int64_t j = start; j <= hi; j += p) mark[j - lo] = false;
    }
    for (int64_t v = lo; v <= hi; ++v) {
      if (mark[v - lo]) primes.push_back(v);
    }
  }
  return primes;
}

}  // namespace

PrimeSet primes_up_to(const GlobalFieldDesc& field, const Int& Q) {
  if (Q < 2) return {field, {}, Q};
  PrimeSet out{field, {}, Q};
  if (field.is_rational()) {
    int64_t limit = static_cast<int64_t>(Q);
    for (int64_t p : sieve_upto(limit)) out.primes.push_back(PrimeOfK::of_int(p));
    return out;
  }
  // all monic irreducibles with q^deg <= Q
  Int qpow = field.q;
  for (int deg = 1; qpow <= Q; ++deg, qpow *= field.q) {
    uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= field.q;
    for (uint64_t tail = 0; tail < count; ++tail) {
      FpPoly f = FpPoly::decode(field.q, tail + count);  // monic: leading term T^deg
      if (f.is_irreducible()) out.primes.push_back(PrimeOfK::of_poly(f));
    }
  }
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

double weight_w(const PrimeSet& P) {
  // Kahan compensated summation
  double sum = 0.0, comp = 0.0;
  for (const auto& p : P.primes) {
    double n = static_cast<double>(p.norm);
    double term = std::log(n) / n;
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

ResidueField::ResidueField(const PrimeOfK& p) {
  rational_ = p.generator.is_integer();
  norm_ = static_cast<uint64_t>(p.norm);
  if (rational_) {
    gen_int_ = p.generator.as_int();
  } else {
    gen_ = p.generator.as_poly();
    q_ = gen_.q();
  }
}

uint64_t ResidueField::reduce(const RingElement& x) const {
  if (rational_ != x.is_integer()) throw KindMismatch("element kind does not match prime");
  if (rational_) {
    Int r = x.as_int() % gen_int_;
    if (r < 0) r += gen_int_;
    return static_cast<uint64_t>(r);
  }
  return x.as_poly().mod(gen_).encode();
}

uint64_t ResidueField::mul(uint64_t a, uint64_t b) const {
  if (rational_) return (a % norm_) * (b % norm_) % norm_;
  return (FpPoly::decode(q_, a) * FpPoly::decode(q_, b)).mod(gen_).encode();
}

uint64_t ResidueField::inv(uint64_t a) const {
  if (a == 0) throw ZeroElement("inverse of zero residue");
  if (rational_) {
    int64_t t = 0, nt = 1, r = static_cast<int64_t>(norm_), nr = static_cast<int64_t>(a % norm_);
    while (nr != 0) {
      int64_t quo = r / nr;
      std::swap(t -= quo * nt, nt);
      std::swap(r -= quo * nr, nr);
    }
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(norm_) : t);
  }
  FpPoly u, v;
  FpPoly g = FpPoly::gcd_ext(FpPoly::decode(q_, a), gen_, u, v);
  if (!g.is_unit()) throw ZeroElement("residue not invertible");
  return u.mod(gen_).encode();
}

std::vector<uint64_t> reduce_affine(const std::vector<RingElement>& x, const PrimeOfK& p) {
  ResidueField F(p);
  std::vector<uint64_t> out;
  out.reserve(x.size());
  for (const auto& c : x) out.push_back(F.reduce(c));
  return out;
}

std::vector<uint64_t> reduce_projective(const std::vector<RingElement>& x, const PrimeOfK& p) {
  ResidueField F(p);
  std::vector<uint64_t> out;
  out.reserve(x.size());
  for (const auto& c : x) out.push_back(F.reduce(c));
  size_t lead = out.size();
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead == out.size()) throw AllCoordinatesVanish("projective point reduces to zero");
  uint64_t scale = F.inv(out[lead]);
  for (auto& r : out) r = F.mul(r, scale);
  return out;
}

std::string field_to_string(const GlobalFieldDesc& f) {
  if (f.is_rational()) return "Q";
  return "F" + std::to_string(f.q) + "(T)";
}

}  // namespace gfsieve
