#include "coxl2/rational.hpp"

#include "coxl2/error.hpp"

namespace coxl2 {

RationalFn::RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.nvars() != den_.nvars()) throw std::logic_error("variable count mismatch");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.nvars(), 1);
    return;
  }
  MultiPoly g = gcd(num_, den_);
  if (!(g.is_constant() && g.constant_term() == 1)) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  normalize_sign();
}

RationalFn RationalFn::from_poly(MultiPoly p) {
  std::size_t n = p.nvars();
  return from_reduced(std::move(p), MultiPoly::constant(n, 1));
}

RationalFn RationalFn::constant(std::size_t nvars, const mpq_class& c) {
  return RationalFn(MultiPoly::constant(nvars, c.get_num()), MultiPoly::constant(nvars, c.get_den()));
}

RationalFn RationalFn::from_reduced(MultiPoly num, MultiPoly den) {
  RationalFn r(num.nvars());
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.num_.is_zero()) r.den_ = MultiPoly::constant(r.num_.nvars(), 1);
  r.normalize_sign();
  return r;
}

void RationalFn::normalize_sign() {
  if (den_.terms().begin()->second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFn RationalFn::operator-() const { return from_reduced(-num_, den_); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn RationalFn::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero");
  return from_reduced(den_, num_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

mpq_class RationalFn::evaluate(const std::vector<mpq_class>& x) const {
  mpq_class d = den_.evaluate(x);
  if (d == 0) throw Error(ErrorCode::PoleAtQ, "denominator vanishes");
  mpq_class r = num_.evaluate(x) / d;
  r.canonicalize();
  return r;
}

RationalFn RationalFn::substitute_monomials(const std::vector<Exponents>& images, std::size_t new_nvars) const {
  return RationalFn(num_.substitute_monomials(images, new_nvars), den_.substitute_monomials(images, new_nvars));
}

std::string RationalFn::to_string(const std::vector<std::string>& names) const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace coxl2
