#ifndef GFSIEVE_POLY_HPP
#define GFSIEVE_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "gfsieve/field.hpp"
#include "gfsieve/heights.hpp"

namespace gfsieve {

/// Exponent vector of a monomial; size = number of variables.
using Monomial = std::vector<uint32_t>;

inline uint32_t monomial_degree(const Monomial& m) {
  uint32_t d = 0;
  for (uint32_t e : m) d += e;
  return d;
}

/// Monomial basis of total degree exactly r (resp. at most r) in nvars
/// variables, ordered by ascending total degree, then descending
/// lexicographic order of exponents. The ordering fixes coefficient-vector
/// layouts everywhere (Siegel systems, tie-breaking).
std::vector<Monomial> monomials_of_degree(int nvars, int r);
std::vector<Monomial> monomials_up_to_degree(int nvars, int r);

/// Sparse multivariate polynomial over O_K.
class MultiPoly {
 public:
  MultiPoly(GlobalFieldDesc field, int nvars) : field_(field), nvars_(nvars) {}
  static MultiPoly from_terms(GlobalFieldDesc field, int nvars,
                              std::vector<std::pair<Monomial, RingElement>> terms);

  const GlobalFieldDesc& field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }
  int degree() const;
  bool is_homogeneous() const;
  const std::map<Monomial, RingElement>& terms() const { return terms_; }

  void set_coeff(const Monomial& m, RingElement c);
  RingElement coeff(const Monomial& m) const;

  RingElement eval(const std::vector<RingElement>& x) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const RingElement& c) const;

  /// Max H_K over coefficients (1 for the zero polynomial).
  HeightValue coeff_height() const;

  /// Divide all coefficients by their gcd and normalize the leading one
  /// (positive / monic). Leading = the coefficient of the largest monomial
  /// in the map order.
  MultiPoly primitive_part() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  GlobalFieldDesc field_;
  int nvars_;
  std::map<Monomial, RingElement> terms_;  // nonzero coefficients only
};

}  // namespace gfsieve

#endif
