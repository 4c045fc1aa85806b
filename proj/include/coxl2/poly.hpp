#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coxl2 {

using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e);

/// Graded lexicographic: lower total degree first, ties broken lexicographically.
struct GrLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with integer coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, mpz_class, GrLex>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const mpz_class& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  static MultiPoly monomial(const Exponents& e, const mpz_class& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpz_class constant_term() const;
  mpz_class coefficient(const Exponents& e) const;
  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t v) const;
  /// Componentwise maximum exponent.
  Exponents degree_vector() const;
  /// Largest term in graded-lex order.
  const std::pair<const Exponents, mpz_class>& leading_term() const;

  void add_term(const Exponents& e, const mpz_class& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const mpz_class& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const mpz_class& c) { return a *= c; }
  MultiPoly pow(unsigned k) const;
  MultiPoly times_monomial(const Exponents& e) const;

  mpq_class evaluate(const std::vector<mpq_class>& x) const;
  /// Replaces variable i by the monomial images[i] in `new_nvars` variables.
  MultiPoly substitute_monomials(const std::vector<Exponents>& images, std::size_t new_nvars) const;
  /// t^d * P(1/t). Requires d >= degree_vector().
  MultiPoly reversed(const Exponents& d) const;

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  MultiPoly primitive_part() const;

  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator<(const MultiPoly& o) const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);
/// Quotient that is known to be exact; throws otherwise.
MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b);

/// Greatest common divisor in Z[x1..xn], normalized with positive leading coefficient.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Dense univariate polynomial with rational coefficients; c[i] multiplies x^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<mpq_class> c);
  static UPoly constant(const mpq_class& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({0, 1}); }
  /// Requires a polynomial in at most one variable (the given one).
  static UPoly from_multi(const MultiPoly& p, std::size_t var = 0);
  MultiPoly to_multi() const;  // requires integer coefficients

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class operator[](std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  const mpq_class& leading() const { return c_.back(); }

  mpq_class evaluate(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const mpq_class& k) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Quotient and remainder.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  bool operator==(const UPoly&) const = default;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic

/// Number of distinct real roots in the half-open interval (a, b].
std::size_t count_roots(const UPoly& p, const mpq_class& a, const mpq_class& b);
/// Number of distinct real roots in (a, +inf).
std::size_t count_roots_above(const UPoly& p, const mpq_class& a);
/// Cauchy bound: every real root has absolute value below it.
mpq_class root_bound(const UPoly& p);
/// Isolating intervals (lo, hi] of the distinct real roots in (a, b], refined to width <= eps.
std::vector<std::pair<mpq_class, mpq_class>> isolate_roots(const UPoly& p, const mpq_class& a, const mpq_class& b,
                                                           const mpq_class& eps);

std::string rational_to_string(const mpq_class& q);
/// Parses "a", "a/b" or a decimal "0.25".
mpq_class parse_rational(const std::string& s);

}  // namespace coxl2
