#include "gfsieve/heights.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gfsieve {

HeightValue HeightValue::rational(Rat r) {
  if (r < 0) throw KindMismatch("height must be nonnegative");
  HeightValue h;
  h.v_ = std::move(r);
  return h;
}

HeightValue HeightValue::qpow(uint32_t q, int64_t k) {
  HeightValue h;
  h.v_ = QPow{q, k};
  return h;
}

Rat HeightValue::as_rational() const {
  if (!is_qpow()) return std::get<Rat>(v_);
  const auto& p = std::get<QPow>(v_);
  Int num = 1;
  for (int64_t i = 0; i < p.k; ++i) num *= p.q;
  return Rat(num);
}

HeightValue HeightValue::operator*(const HeightValue& o) const {
  if (is_qpow() && o.is_qpow() && base() == o.base()) {
    return qpow(base(), exponent() + o.exponent());
  }
  return rational(as_rational() * o.as_rational());
}

HeightValue HeightValue::pow(uint64_t e) const {
  if (is_qpow()) return qpow(base(), exponent() * static_cast<int64_t>(e));
  Rat r = as_rational(), acc = 1;
  for (uint64_t i = 0; i < e; ++i) acc *= r;
  return rational(acc);
}

bool HeightValue::operator==(const HeightValue& o) const {
  if (is_qpow() && o.is_qpow() && base() == o.base()) return exponent() == o.exponent();
  return as_rational() == o.as_rational();
}

bool HeightValue::operator<(const HeightValue& o) const {
  if (is_qpow() && o.is_qpow() && base() == o.base()) return exponent() < o.exponent();
  return as_rational() < o.as_rational();
}

bool HeightValue::leq_rational(const Rat& bound) const { return as_rational() <= bound; }
bool HeightValue::lt_rational(const Rat& bound) const { return as_rational() < bound; }

double HeightValue::log() const {
  if (is_qpow()) return exponent() * std::log(static_cast<double>(base()));
  const Rat& r = std::get<Rat>(v_);
  return std::log(static_cast<double>(boost::multiprecision::numerator(r))) -
         std::log(static_cast<double>(boost::multiprecision::denominator(r)));
}

double HeightValue::to_double() const { return std::exp(log()); }

std::string HeightValue::to_string() const {
  if (is_qpow()) return std::to_string(base()) + "^" + std::to_string(exponent());
  const Rat& r = std::get<Rat>(v_);
  return r.str();
}

HeightValue height_fraction(const RingElement& num, const RingElement& den) {
  if (den.is_zero()) throw ZeroElement("zero denominator");
  if (num.is_zero()) return HeightValue::one();
  RingElement g = RingElement::gcd(num, den);
  RingElement a = num.divide_exact(g);
  RingElement b = den.divide_exact(g);
  if (a.is_integer()) {
    Int ha = boost::multiprecision::abs(a.as_int());
    Int hb = boost::multiprecision::abs(b.as_int());
    return HeightValue::rational(Rat(std::max(ha, hb)));
  }
  int da = a.as_poly().degree(), db = b.as_poly().degree();
  return HeightValue::qpow(a.as_poly().q(), std::max(da, db));
}

HeightValue height_scalar(const RingElement& x) {
  if (x.is_zero()) {
    return x.is_integer() ? HeightValue::rational(Rat(1)) : HeightValue::qpow(x.as_poly().q(), 0);
  }
  if (x.is_integer()) {
    Int a = boost::multiprecision::abs(x.as_int());
    return HeightValue::rational(Rat(std::max(a, Int(1))));
  }
  return HeightValue::qpow(x.as_poly().q(), std::max(0, x.as_poly().degree()));
}

HeightValue height_scalar_q(const Rat& x) {
  if (x == 0) return HeightValue::rational(Rat(1));
  Int a = boost::multiprecision::abs(boost::multiprecision::numerator(x));
  Int b = boost::multiprecision::abs(boost::multiprecision::denominator(x));
  return HeightValue::rational(Rat(std::max(a, b)));
}

namespace {
RingElement tuple_gcd(const std::vector<RingElement>& x) {
  RingElement g = x[0];
  for (size_t i = 1; i < x.size(); ++i) g = RingElement::gcd(g, x[i]);
  return g;
}
}  // namespace

HeightValue height_projective(const std::vector<RingElement>& x) {
  bool all_zero = std::all_of(x.begin(), x.end(), [](const auto& c) { return c.is_zero(); });
  if (x.empty() || all_zero) throw ZeroPoint("projective height of the zero tuple");
  RingElement g = tuple_gcd(x).unit_normalized();
  HeightValue best = HeightValue::one();
  bool first = true;
  for (const auto& c : x) {
    if (c.is_zero()) continue;
    HeightValue h = height_scalar(c.divide_exact(g));
    if (first || best < h) best = h, first = false;
  }
  return best;
}

HeightValue height_affine_one(const std::vector<RingElement>& x) {
  // gcd(1, x_i) = 1, so no clearing is needed: the height is max(1, |x_i|).
  HeightValue best = x.empty() || x[0].is_integer() ? HeightValue::rational(Rat(1))
                                                    : HeightValue::qpow(x[0].as_poly().q(), 0);
  for (const auto& c : x) {
    if (c.is_zero()) continue;
    HeightValue h = height_scalar(c);
    if (best < h) best = h;
  }
  return best;
}

std::vector<RingElement> projective_canonical(std::vector<RingElement> x) {
  bool all_zero = std::all_of(x.begin(), x.end(), [](const auto& c) { return c.is_zero(); });
  if (x.empty() || all_zero) throw ZeroPoint("canonical form of the zero tuple");
  RingElement g = tuple_gcd(x).unit_normalized();
  for (auto& c : x) c = c.divide_exact(g);
  for (const auto& c : x) {
    if (c.is_zero()) continue;
    if (c.is_integer()) {
      if (c.as_int() < 0) {
        for (auto& d : x) d = -d;
      }
    } else {
      uint32_t lead = c.as_poly().leading();
      if (lead != 1) {
        uint32_t inv = fp_inv(lead, c.as_poly().q());
        for (auto& d : x) d = RingElement(d.as_poly().scaled(inv));
      }
    }
    break;
  }
  return x;
}

namespace {

/// Largest M with M <= N, the integer radius of a rational scalar box.
Int rational_radius(const Rat& N) {
  Int num = boost::multiprecision::numerator(N);
  Int den = boost::multiprecision::denominator(N);
  return num / den;  // floor for positive N
}

/// Largest D with q^D <= N (-1 when even q^0 > N, impossible for N >= 1).
int qpow_radius(uint32_t q, const Rat& N) {
  int d = -1;
  Int p = 1;
  while (Rat(p) <= N) {
    ++d;
    p *= q;
  }
  return d;
}

Int scalar_count(const GlobalFieldDesc& f, const Rat& N) {
  if (N < 1) return 0;
  if (f.is_rational()) return 2 * rational_radius(N) + 1;
  int D = qpow_radius(f.q, N);
  Int c = 1;
  for (int i = 0; i <= D; ++i) c *= f.q;
  return c;
}

Int int_pow(Int b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Int box_count(const BoundedBox& box) {
  switch (box.kind) {
    case BoxKind::Scalar:
      return scalar_count(box.field, box.N);
    case BoxKind::Affine:
      return int_pow(scalar_count(box.field, box.N), box.dim);
    case BoxKind::Projective: {
      // counted by enumeration of canonical representatives
      BoundedBox b = box;
      auto pts = enumerate_bounded(b);
      return Int(pts.size());
    }
  }
  return 0;
}

bool box_contains(const BoundedBox& box, const std::vector<RingElement>& pt) {
  switch (box.kind) {
    case BoxKind::Scalar:
      return pt.size() == 1 && height_scalar(pt[0]).leq_rational(box.N);
    case BoxKind::Affine: {
      if (static_cast<int>(pt.size()) != box.dim) return false;
      for (const auto& c : pt) {
        if (!height_scalar(c).leq_rational(box.N)) return false;
      }
      return true;
    }
    case BoxKind::Projective:
      if (static_cast<int>(pt.size()) != box.dim + 1) return false;
      return height_projective(pt).leq_rational(box.N);
  }
  return false;
}

std::vector<RingElement> enumerate_scalar(const GlobalFieldDesc& field, const Rat& N,
                                          int64_t budget) {
  Int count = scalar_count(field, N);
  if (count > budget) throw BoxTooLarge("scalar box of size " + count.str());
  std::vector<RingElement> out;
  out.reserve(static_cast<size_t>(count));
  if (field.is_rational()) {
    Int M = rational_radius(N);
    for (Int v = -M; v <= M; ++v) out.emplace_back(v);
  } else {
    int D = qpow_radius(field.q, N);
    uint64_t total = 1;
    for (int i = 0; i <= D; ++i) total *= field.q;
    for (uint64_t idx = 0; idx < total; ++idx) out.emplace_back(FpPoly::decode(field.q, idx));
  }
  return out;
}

std::vector<std::vector<RingElement>> enumerate_bounded(const BoundedBox& box, int64_t budget) {
  if (box.N < 1) return {};
  if (box.kind == BoxKind::Scalar) {
    std::vector<std::vector<RingElement>> out;
    for (auto& v : enumerate_scalar(box.field, box.N, budget)) out.push_back({std::move(v)});
    return out;
  }
  int ncoords = box.kind == BoxKind::Affine ? box.dim : box.dim + 1;
  Int total = int_pow(scalar_count(box.field, box.N), ncoords);
  if (total > budget) throw BoxTooLarge("box of size " + total.str());
  std::vector<RingElement> axis = enumerate_scalar(box.field, box.N, budget);
  std::vector<std::vector<RingElement>> out;
  std::vector<size_t> idx(ncoords, 0);
  std::set<std::vector<RingElement>> seen;  // projective dedup
  while (true) {
    std::vector<RingElement> pt;
    pt.reserve(ncoords);
    for (int i = 0; i < ncoords; ++i) pt.push_back(axis[idx[i]]);
    if (box.kind == BoxKind::Affine) {
      out.push_back(std::move(pt));
    } else {
      bool all_zero = std::all_of(pt.begin(), pt.end(), [](const auto& c) { return c.is_zero(); });
      if (!all_zero) {
        auto canon = projective_canonical(std::move(pt));
        if (height_projective(canon).leq_rational(box.N)) seen.insert(std::move(canon));
      }
    }
    int i = ncoords - 1;
    while (i >= 0 && ++idx[i] == axis.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  if (box.kind == BoxKind::Projective) {
    out.assign(seen.begin(), seen.end());
  }
  return out;
}

}  // namespace gfsieve
