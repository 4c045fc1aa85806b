#pragma once

#include "coxl2/poly.hpp"

namespace coxl2 {

/// Quotient of integer polynomials in lowest terms.
/// Canonical: gcd(num, den) = 1 in Z[x], and the lowest graded-lex term of den is positive.
class RationalFn {
 public:
  explicit RationalFn(std::size_t nvars = 0) : num_(nvars), den_(MultiPoly::constant(nvars, 1)) {}
  RationalFn(MultiPoly num, MultiPoly den);
  static RationalFn from_poly(MultiPoly p);
  static RationalFn constant(std::size_t nvars, const mpq_class& c);
  /// Caller guarantees lowest terms; only the sign is normalized.
  static RationalFn from_reduced(MultiPoly num, MultiPoly den);

  std::size_t nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn inverse() const;

  /// Throws PoleAtQ when the denominator vanishes.
  mpq_class evaluate(const std::vector<mpq_class>& x) const;
  RationalFn substitute_monomials(const std::vector<Exponents>& images, std::size_t new_nvars) const;

  std::string to_string(const std::vector<std::string>& names) const;
  bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  void normalize_sign();
  MultiPoly num_, den_;
};

}  // namespace coxl2
