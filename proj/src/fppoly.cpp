#include "gfsieve/fppoly.hpp"

#include <algorithm>
#include <cassert>

#include "gfsieve/errors.hpp"

namespace gfsieve {

uint32_t fp_inv(uint32_t a, uint32_t q) {
  // extended Euclid on int64
  int64_t t = 0, nt = 1, r = q, nr = a % q;
  while (nr != 0) {
    int64_t quo = r / nr;
    std::swap(t -= quo * nt, nt);
    std::swap(r -= quo * nr, nr);
  }
  if (r != 1) throw ZeroElement("no inverse mod q");
  return static_cast<uint32_t>(t < 0 ? t + q : t);
}

FpPoly::FpPoly(uint32_t q, std::vector<uint32_t> coeffs) : q_(q), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= q_;
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::constant(uint32_t q, uint32_t c) {
  c %= q;
  return c == 0 ? zero(q) : FpPoly(q, {c});
}

FpPoly FpPoly::decode(uint32_t q, uint64_t index) {
  std::vector<uint32_t> c;
  while (index > 0) {
    c.push_back(static_cast<uint32_t>(index % q));
    index /= q;
  }
  return FpPoly(q, std::move(c));
}

uint64_t FpPoly::encode() const {
  uint64_t v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = v * q_ + c_[i];
  return v;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  assert(q_ == o.q_);
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = (coeff(i) + o.coeff(i)) % q_;
  return FpPoly(q_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  assert(q_ == o.q_);
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = (coeff(i) + q_ - o.coeff(i) % q_) % q_;
  return FpPoly(q_, std::move(r));
}

FpPoly FpPoly::operator-() const { return zero(q_) - *this; }

FpPoly FpPoly::operator*(const FpPoly& o) const {
  assert(q_ == o.q_);
  if (is_zero() || o.is_zero()) return zero(q_);
  std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(c_[i]) * o.c_[j]) % q_);
    }
  }
  return FpPoly(q_, std::move(r));
}

FpPoly FpPoly::scaled(uint32_t c) const {
  c %= q_;
  if (c == 0) return zero(q_);
  std::vector<uint32_t> r(c_);
  for (auto& x : r) x = static_cast<uint32_t>(static_cast<uint64_t>(x) * c % q_);
  return FpPoly(q_, std::move(r));
}

FpPoly FpPoly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<uint32_t> r(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + k);
  return FpPoly(q_, std::move(r));
}

bool FpPoly::operator<(const FpPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

void FpPoly::divmod(const FpPoly& a, const FpPoly& b, FpPoly& quo, FpPoly& rem) {
  if (b.is_zero()) throw ZeroElement("division by zero polynomial");
  uint32_t q = a.q_;
  if (a.degree() < b.degree()) {
    quo = zero(q);
    rem = a;
    return;
  }
  std::vector<uint32_t> r(a.c_);
  std::vector<uint32_t> qc(a.c_.size() - b.c_.size() + 1, 0);
  uint32_t inv_lead = fp_inv(b.leading(), q);
  for (size_t ii = r.size(); ii >= b.c_.size(); --ii) {
    size_t i = ii - 1;
    if (r[i] == 0) continue;
    uint32_t f = static_cast<uint32_t>(static_cast<uint64_t>(r[i]) * inv_lead % q);
    size_t shift = i - (b.c_.size() - 1);
    qc[shift] = f;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      uint64_t sub = static_cast<uint64_t>(f) * b.c_[j] % q;
      r[shift + j] = static_cast<uint32_t>((r[shift + j] + q - sub) % q);
    }
  }
  quo = FpPoly(q, std::move(qc));
  rem = FpPoly(q, std::move(r));
}

FpPoly FpPoly::mod(const FpPoly& m) const {
  FpPoly quo, rem;
  divmod(*this, m, quo, rem);
  return rem;
}

bool FpPoly::divides(const FpPoly& a) const {
  if (is_zero()) return a.is_zero();
  return a.mod(*this).is_zero();
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.make_monic();
}

FpPoly FpPoly::gcd_ext(const FpPoly& a, const FpPoly& b, FpPoly& u, FpPoly& v) {
  uint32_t q = a.q();
  FpPoly r0 = a, r1 = b;
  FpPoly u0 = one(q), u1 = zero(q), v0 = zero(q), v1 = one(q);
  while (!r1.is_zero()) {
    FpPoly quo, rem;
    divmod(r0, r1, quo, rem);
    FpPoly nu = u0 - quo * u1;
    FpPoly nv = v0 - quo * v1;
    r0 = std::move(r1); r1 = std::move(rem);
    u0 = std::move(u1); u1 = std::move(nu);
    v0 = std::move(v1); v1 = std::move(nv);
  }
  if (!r0.is_zero()) {
    uint32_t inv = fp_inv(r0.leading(), q);
    r0 = r0.scaled(inv);
    u0 = u0.scaled(inv);
    v0 = v0.scaled(inv);
  }
  u = u0;
  v = v0;
  return r0;
}

FpPoly FpPoly::pow_mod(uint64_t e, const FpPoly& m) const {
  FpPoly base = this->mod(m);
  FpPoly acc = one(q_).mod(m);
  while (e > 0) {
    if (e & 1) acc = (acc * base).mod(m);
    base = (base * base).mod(m);
    e >>= 1;
  }
  return acc;
}

FpPoly FpPoly::make_monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(fp_inv(leading(), q_));
}

bool FpPoly::is_irreducible() const {
  int n = degree();
  if (n < 1) return false;
  if (n == 1) return true;
  FpPoly f = make_monic();
  FpPoly t = variable(q_);
  // q^n can overflow 64 bits for large degrees; compute T^{q^k} mod f by
  // iterated q-th powers instead of one big exponent.
  auto frobenius_iterate = [&](int k) {
    FpPoly r = t.mod(f);
    for (int i = 0; i < k; ++i) r = r.pow_mod(q_, f);
    return r;
  };
  if (frobenius_iterate(n) != t.mod(f)) return false;
  // distinct prime divisors of n
  auto coprime_check = [&](int ell) {
    FpPoly h = frobenius_iterate(n / ell) - t.mod(f);
    return FpPoly::gcd(h, f).is_unit();
  };
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      if (!coprime_check(p)) return false;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1 && !coprime_check(m)) return false;
  return true;
}

uint32_t FpPoly::eval(uint32_t x) const {
  x %= q_;
  uint64_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = (acc * x + c_[i]) % q_;
  return static_cast<uint32_t>(acc);
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
      s += i == 1 ? "T" : "T^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace gfsieve
