#include "coxl2/poly.hpp"

#include <algorithm>
#include <sstream>

#include "coxl2/error.hpp"

namespace coxl2 {

std::uint64_t total_degree(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrLex::operator()(const Exponents& a, const Exponents& b) const {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const mpz_class& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const mpz_class& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && coxl2::total_degree(terms_.begin()->first) == 0);
}

mpz_class MultiPoly::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

mpz_class MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::uint64_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : coxl2::total_degree(terms_.rbegin()->first);
}

std::uint32_t MultiPoly::degree_in(std::size_t v) const {
  std::uint32_t d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

Exponents MultiPoly::degree_vector() const {
  Exponents d(nvars_, 0);
  for (auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) d[i] = std::max(d[i], e[i]);
  return d;
}

const std::pair<const Exponents, mpz_class>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (e.size() != nvars_) throw std::logic_error("exponent vector of wrong size");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::logic_error("variable count mismatch");
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::logic_error("variable count mismatch");
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const mpz_class& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::logic_error("variable count mismatch");
  MultiPoly r(a.nvars_);
  Exponents e(a.nvars_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(nvars_, 1), base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::times_monomial(const Exponents& m) const {
  MultiPoly r(nvars_);
  for (auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < nvars_; ++i) f[i] += m[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

mpq_class MultiPoly::evaluate(const std::vector<mpq_class>& x) const {
  if (x.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong size");
  mpq_class sum = 0;
  for (auto& [e, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute_monomials(const std::vector<Exponents>& images, std::size_t new_nvars) const {
  if (images.size() != nvars_) throw std::logic_error("substitution of wrong size");
  MultiPoly r(new_nvars);
  Exponents f(new_nvars);
  for (auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::size_t j = 0; j < new_nvars; ++j) f[j] += e[i] * images[i][j];
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::reversed(const Exponents& d) const {
  MultiPoly r(nvars_);
  for (auto& [e, c] : terms_) {
    Exponents f(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] > d[i]) throw std::logic_error("reversal degree too small");
      f[i] = d[i] - e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

mpz_class MultiPoly::content() const {
  mpz_class g = 0;
  for (auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MultiPoly MultiPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (leading_term().second < 0) g = -g;
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    bool unit_monomial = coxl2::total_degree(e) == 0;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || unit_monomial) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (wrote) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

bool MultiPoly::operator<(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
  return std::lexicographical_compare(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return GrLex{}(x.first, y.first);
                                        return x.second < y.second;
                                      });
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.nvars() != b.nvars()) throw std::logic_error("variable count mismatch");
  MultiPoly q(a.nvars()), r = a;
  const auto& [eb, cb] = b.leading_term();
  const std::size_t n = a.nvars();
  Exponents t(n);
  while (!r.is_zero()) {
    const auto& [er, cr] = r.leading_term();
    for (std::size_t i = 0; i < n; ++i) {
      if (er[i] < eb[i]) return std::nullopt;
      t[i] = er[i] - eb[i];
    }
    if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    mpz_class k = cr / cb;
    q.add_term(t, k);
    Exponents f(n);
    for (auto& [e, c] : b.terms()) {
      for (std::size_t i = 0; i < n; ++i) f[i] = e[i] + t[i];
      r.add_term(f, -k * c);
    }
  }
  return q;
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("expected exact polynomial division");
  return *q;
}

namespace {

// Coefficient of v^d, as a polynomial free of v.
MultiPoly coeff_in(const MultiPoly& p, std::size_t v, std::uint32_t d) {
  MultiPoly r(p.nvars());
  for (auto& [e, c] : p.terms())
    if (e[v] == d) {
      Exponents f = e;
      f[v] = 0;
      r.add_term(f, c);
    }
  return r;
}

MultiPoly normalize_sign(MultiPoly p) {
  if (!p.is_zero() && p.leading_term().second < 0) p = -p;
  return p;
}

MultiPoly content_in(const MultiPoly& p, std::size_t v) {
  MultiPoly g(p.nvars());
  std::uint32_t d = p.degree_in(v);
  for (std::uint32_t k = 0; k <= d; ++k) {
    MultiPoly c = coeff_in(p, v, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.constant_term() == 1) break;
  }
  return g;
}

MultiPoly prem(MultiPoly r, const MultiPoly& b, std::size_t v) {
  std::uint32_t db = b.degree_in(v);
  MultiPoly lcb = coeff_in(b, v, db);
  while (!r.is_zero()) {
    std::uint32_t dr = r.degree_in(v);
    if (dr < db) break;
    MultiPoly lcr = coeff_in(r, v, dr);
    Exponents shift(r.nvars(), 0);
    shift[v] = dr - db;
    r = r * lcb - (lcr * b).times_monomial(shift);
  }
  return r;
}

// `small` uses a strict subset of the variables of `big`. A common factor lives in those
// variables, so it divides every coefficient of `big` taken over the remaining ones.
MultiPoly gcd_within_support(const MultiPoly& small, const MultiPoly& big) {
  const std::size_t n = big.nvars();
  auto inside = small.degree_vector();
  std::map<Exponents, MultiPoly> groups;
  for (auto& [e, c] : big.terms()) {
    Exponents outer(n, 0), inner(n, 0);
    for (std::size_t i = 0; i < n; ++i) (inside[i] ? inner : outer)[i] = e[i];
    groups.try_emplace(outer, n).first->second.add_term(inner, c);
  }
  MultiPoly g = small;
  for (auto& [outer, coeff] : groups) {
    g = gcd(g, coeff);
    if (g.is_constant() && g.constant_term() == 1) break;
  }
  return normalize_sign(g);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::logic_error("variable count mismatch");
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const std::size_t n = a.nvars();
  if (a.is_constant() && b.is_constant()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.constant_term().get_mpz_t(), b.constant_term().get_mpz_t());
    return MultiPoly::constant(n, g);
  }
  auto sa = a.degree_vector(), sb = b.degree_vector();
  bool a_in_b = true, b_in_a = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (sa[i] && !sb[i]) a_in_b = false;
    if (sb[i] && !sa[i]) b_in_a = false;
  }
  if (b_in_a && !a_in_b) return gcd_within_support(b, a);
  if (a_in_b && !b_in_a) return gcd_within_support(a, b);

  std::size_t v = 0;
  while (a.degree_in(v) == 0 && b.degree_in(v) == 0) ++v;

  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly c = gcd(ca, cb);
  MultiPoly pa = exact_quotient(a, ca), pb = exact_quotient(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree_in(v) == 0) return normalize_sign(c);
    MultiPoly r = prem(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? MultiPoly(n) : exact_quotient(r, content_in(r, v));
  }
  MultiPoly g = exact_quotient(pa, content_in(pa, v));
  return normalize_sign(c * g);
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<mpq_class> c) : c_(std::move(c)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_multi(const MultiPoly& p, std::size_t var) {
  std::vector<mpq_class> c;
  for (auto& [e, k] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::logic_error("polynomial is not univariate");
    std::size_t d = p.nvars() ? e[var] : 0;
    if (c.size() <= d) c.resize(d + 1, 0);
    c[d] += mpq_class(k);
  }
  return UPoly(std::move(c));
}

MultiPoly UPoly::to_multi() const {
  MultiPoly p(1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].get_den() != 1) throw std::logic_error("non-integer coefficient");
    p.add_term({static_cast<std::uint32_t>(i)}, c_[i].get_num());
  }
  return p;
}

mpq_class UPoly::evaluate(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

int UPoly::sign_at(const mpq_class& x) const { return sgn(evaluate(x)); }

UPoly UPoly::operator-() const { return scaled(-1); }

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::scaled(const mpq_class& k) const {
  std::vector<mpq_class> c = c_;
  for (auto& x : c) x *= k;
  return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const { return is_zero() ? *this : scaled(1 / leading()); }

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<mpq_class> r = c_;
  if (c_.size() < d.c_.size()) return {UPoly(), *this};
  std::vector<mpq_class> q(c_.size() - d.c_.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class f = r[k + d.c_.size() - 1] / d.leading();
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
  }
  r.resize(d.c_.size() - 1);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
  UPoly sq = p;
  UPoly g = gcd(p, p.derivative());
  if (g.degree() > 0) sq = p.divmod(g).first;
  std::vector<UPoly> chain{sq, sq.derivative()};
  while (!chain.back().is_zero()) {
    UPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t variations_at(const std::vector<UPoly>& chain, const mpq_class& x) {
  std::vector<int> s;
  for (auto& p : chain) s.push_back(p.sign_at(x));
  return variations(s);
}

std::size_t variations_at_inf(const std::vector<UPoly>& chain) {
  std::vector<int> s;
  for (auto& p : chain) s.push_back(p.is_zero() ? 0 : sgn(p.leading()));
  return variations(s);
}

}  // namespace

std::size_t count_roots(const UPoly& p, const mpq_class& a, const mpq_class& b) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  if (p.degree() == 0 || !(a < b)) return 0;
  auto chain = sturm_chain(p);
  return variations_at(chain, a) - variations_at(chain, b);
}

std::size_t count_roots_above(const UPoly& p, const mpq_class& a) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return variations_at(chain, a) - variations_at_inf(chain);
}

mpq_class root_bound(const UPoly& p) {
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, mpq_class(abs(p[i] / p.leading())));
  return m + 1;
}

std::vector<std::pair<mpq_class, mpq_class>> isolate_roots(const UPoly& p, const mpq_class& a, const mpq_class& b,
                                                           const mpq_class& eps) {
  std::vector<std::pair<mpq_class, mpq_class>> out;
  if (p.degree() <= 0) return out;
  auto chain = sturm_chain(p);
  struct Job {
    mpq_class lo, hi;
    std::size_t vlo, vhi;
  };
  std::vector<Job> stack{{a, b, variations_at(chain, a), variations_at(chain, b)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    std::size_t n = j.vlo - j.vhi;
    if (n == 0) continue;
    if (n == 1 && j.hi - j.lo <= eps) {
      out.emplace_back(j.lo, j.hi);
      continue;
    }
    mpq_class mid = (j.lo + j.hi) / 2;
    std::size_t vm = variations_at(chain, mid);
    stack.push_back({mid, j.hi, vm, j.vhi});
    stack.push_back({j.lo, mid, j.vlo, vm});
  }
  return out;
}

std::string rational_to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  auto bad = [&] { return Error(ErrorCode::ParseError, "bad rational '" + s + "'"); };
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !std::all_of(whole.begin(), whole.end(), ::isdigit) ||
        !std::all_of(frac.begin(), frac.end(), ::isdigit))
      throw bad();
    mpz_class num(whole + frac, 10), den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    mpq_class q(num, den);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }
  auto slash = s.find('/');
  auto digits = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    return t.size() > i && std::all_of(t.begin() + i, t.end(), ::isdigit);
  };
  if (slash == std::string::npos) {
    if (!digits(s)) throw bad();
    return mpq_class(mpz_class(s, 10));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  if (!digits(n) || !digits(d) || d[0] == '-') throw bad();
  mpz_class den(d, 10);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  mpq_class q(mpz_class(n, 10), den);
  q.canonicalize();
  return q;
}

}  // namespace coxl2
