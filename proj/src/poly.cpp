#include "gfsieve/poly.hpp"

#include <algorithm>

namespace gfsieve {

namespace {
void gen_monomials(int nvars, int pos, int remaining, bool exact, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (pos == nvars) {
    if (!exact || remaining == 0) out.push_back(cur);
    return;
  }
  // descending exponent on the current variable gives descending lex order
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = static_cast<uint32_t>(e);
    gen_monomials(nvars, pos + 1, remaining - e, exact, cur, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int r) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  gen_monomials(nvars, 0, r, true, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int r) {
  std::vector<Monomial> out;
  for (int d = 0; d <= r; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

MultiPoly MultiPoly::from_terms(GlobalFieldDesc field, int nvars,
                                std::vector<std::pair<Monomial, RingElement>> terms) {
  MultiPoly p(field, nvars);
  for (auto& [m, c] : terms) p.set_coeff(m, std::move(c));
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(monomial_degree(m)));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  uint32_t d = monomial_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (monomial_degree(m) != d) return false;
  }
  return true;
}

void MultiPoly::set_coeff(const Monomial& m, RingElement c) {
  if (c.is_zero()) {
    terms_.erase(m);
  } else {
    terms_[m] = std::move(c);
  }
}

RingElement MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RingElement::zero(field_) : it->second;
}

RingElement MultiPoly::eval(const std::vector<RingElement>& x) const {
  RingElement acc = RingElement::zero(field_);
  // memoized coordinate powers
  std::vector<std::vector<RingElement>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(RingElement::one(field_));
  for (const auto& [m, c] : terms_) {
    RingElement term = c;
    for (int i = 0; i < nvars_; ++i) {
      while (powers[i].size() <= m[i]) powers[i].push_back(powers[i].back() * x[i]);
      if (m[i] > 0) term = term * powers[i][m[i]];
    }
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.set_coeff(m, r.coeff(m) + c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(field_, nvars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      r.set_coeff(m, r.coeff(m) + c1 * c2);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const RingElement& c) const {
  MultiPoly r(field_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.set_coeff(m, v * c);
  return r;
}

HeightValue MultiPoly::coeff_height() const {
  HeightValue best = field_.is_rational() ? HeightValue::rational(Rat(1))
                                          : HeightValue::qpow(field_.q, 0);
  for (const auto& [m, c] : terms_) {
    HeightValue h = height_scalar(c);
    if (best < h) best = h;
  }
  return best;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  RingElement g = terms_.begin()->second;
  for (const auto& [m, c] : terms_) g = RingElement::gcd(g, c);
  g = g.unit_normalized();
  MultiPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_[m] = c.divide_exact(g);
  const RingElement& lead = r.terms_.rbegin()->second;
  bool flip = lead.is_integer() ? lead.as_int() < 0 : !lead.as_poly().is_monic();
  if (flip) {
    if (lead.is_integer()) {
      for (auto& [m, c] : r.terms_) c = -c;
    } else {
      uint32_t inv = fp_inv(lead.as_poly().leading(), field_.q);
      for (auto& [m, c] : r.terms_) c = RingElement(c.as_poly().scaled(inv));
    }
  }
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var = [&](int i) {
    return i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1);
  };
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var(i);
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    if (mono.empty()) {
      s += it->second.to_string();
    } else if (it->second.is_one()) {
      s += mono;
    } else {
      s += "(" + it->second.to_string() + ")*" + mono;
    }
  }
  return s;
}

}  // namespace gfsieve
