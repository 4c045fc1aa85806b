#include "coxl2/growth.hpp"

#include <map>
#include <mutex>

#include "coxl2/classifier.hpp"

namespace coxl2 {

namespace {

// Groups larger than this are handled by the subset recursion instead of enumeration.
constexpr std::size_t kEnumerationLimit = 200'000;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Growth polynomial of a finite system in its own class variables, keyed by matrix.
std::map<std::string, MultiPoly>& local_cache() {
  static std::map<std::string, MultiPoly> c;
  return c;
}

std::map<std::string, RationalFn>& series_cache() {
  static std::map<std::string, RationalFn> c;
  return c;
}

std::vector<Exponents> class_images(const CoxeterSystem& sub, const CoxeterSystem& sys, GenSet T) {
  // sub = restrict(sys, T); each class of sub lies inside one class of sys
  std::vector<Exponents> images(sub.num_classes(), Exponents(sys.num_classes(), 0));
  auto mem = T.members();
  for (std::size_t i = 0; i < mem.size(); ++i) images[sub.class_of(static_cast<int>(i))][sys.class_of(mem[i])] = 1;
  return images;
}

MultiPoly enumerate_poly(const CoxeterSystem& sys, std::size_t L) {
  BallOptions opts;
  opts.cap = kEnumerationLimit;
  opts.by_class = true;
  auto census = enumerate_ball(sys, L, opts);
  MultiPoly p(sys.num_classes());
  for (auto& level : census.by_class)
    for (auto& [e, n] : level) p.add_term(e, mpz_class(static_cast<unsigned long>(n)));
  return p;
}

struct Parts {
  MultiPoly num, den;
  std::vector<MultiPoly> atoms;
};

MultiPoly local_growth_poly(const CoxeterSystem& sys);

// Growth polynomial of W_C for an irreducible spherical C, in the class variables of sys.
MultiPoly component_poly(const CoxeterSystem& sys, GenSet C) {
  auto sub = restrict(sys, C);
  return local_growth_poly(sub).substitute_monomials(class_images(sub, sys, C), sys.num_classes());
}

// sum over the given spherical subsets of (-1)^|T| / W_T(1/t), over a common denominator
// built from the component polynomials.
Parts alternating_sum(const CoxeterSystem& sys, const std::vector<GenSet>& subsets) {
  const std::size_t nv = sys.num_classes();
  std::map<MultiPoly, unsigned> max_mult;
  std::map<GenSet::Bits, MultiPoly> comp_cache;
  struct Term {
    int sign;
    Exponents shift;
    std::map<MultiPoly, unsigned> mult;
  };
  std::vector<Term> terms;
  for (GenSet T : subsets) {
    Term t{T.size() % 2 ? -1 : 1, Exponents(nv, 0), {}};
    for (GenSet C : irreducible_components(sys, T)) {
      auto it = comp_cache.find(C.bits());
      if (it == comp_cache.end()) it = comp_cache.emplace(C.bits(), component_poly(sys, C)).first;
      Exponents d = it->second.degree_vector();
      // 1/W_C(1/t) = t^d / (t^d W_C(1/t))
      MultiPoly rev = it->second.reversed(d);
      for (std::size_t i = 0; i < nv; ++i) t.shift[i] += d[i];
      ++t.mult[rev];
    }
    for (auto& [a, k] : t.mult) max_mult[a] = std::max(max_mult[a], k);
    terms.push_back(std::move(t));
  }
  Parts parts{MultiPoly(nv), MultiPoly::constant(nv, 1), {}};
  std::map<std::pair<MultiPoly, unsigned>, MultiPoly> powers;
  auto power = [&](const MultiPoly& a, unsigned k) -> const MultiPoly& {
    auto key = std::make_pair(a, k);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, a.pow(k)).first;
    return it->second;
  };
  for (auto& [a, k] : max_mult) {
    parts.den = parts.den * power(a, k);
    parts.atoms.push_back(a);
  }
  for (auto& t : terms) {
    MultiPoly p = MultiPoly::monomial(t.shift, t.sign);
    for (auto& [a, k] : max_mult) {
      unsigned have = t.mult.count(a) ? t.mult.at(a) : 0;
      if (k > have) p = p * power(a, k - have);
    }
    parts.num += p;
  }
  return parts;
}

bool is_one(const MultiPoly& p) { return p.is_constant() && p.constant_term() == 1; }

// Removes common factors of num and den; every factor of den divides some atom.
void reduce(Parts& parts) {
  if (parts.num.is_zero()) return;
  for (auto& a : parts.atoms) {
    for (;;) {
      MultiPoly g = gcd(gcd(parts.num, a), parts.den);
      if (is_one(g)) break;
      parts.num = exact_quotient(parts.num, g);
      parts.den = exact_quotient(parts.den, g);
    }
  }
}

MultiPoly subset_recursion_poly(const CoxeterSystem& sys) {
  // For finite W the sum over all T (including S) gives 1/W, and W(1/t) = t^{-d} W(t).
  std::vector<GenSet> proper;
  for (GenSet::Bits b = 0; b < sys.all().bits(); ++b) proper.push_back(GenSet(b));
  Parts parts = alternating_sum(sys, proper);
  auto w0 = longest_element(sys);
  Exponents d(sys.num_classes(), 0);
  for (int s : w0.word.letters) ++d[sys.class_of(s)];
  MultiPoly top = MultiPoly::constant(sys.num_classes(), 1);
  top.add_term(d, sys.rank() % 2 ? 1 : -1);
  return exact_quotient(top * parts.den, parts.num);
}

MultiPoly local_growth_poly(const CoxeterSystem& sys) {
  auto key = sys.matrix_key();
  {
    std::lock_guard lock(cache_mutex());
    auto it = local_cache().find(key);
    if (it != local_cache().end()) return it->second;
  }
  MultiPoly p(sys.num_classes());
  if (sys.rank() == 0) {
    p = MultiPoly::constant(0, 1);
  } else {
    std::size_t L = longest_element(sys).length();
    try {
      p = enumerate_poly(sys, L);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      p = subset_recursion_poly(sys);
    }
  }
  std::lock_guard lock(cache_mutex());
  local_cache().emplace(key, p);
  return p;
}

}  // namespace

std::vector<std::string> class_variable_names(const CoxeterSystem& sys) {
  if (sys.num_classes() == 1) return {"q"};
  std::vector<std::string> out;
  for (auto& c : sys.classes()) out.push_back("q_" + sys.name(c.first()));
  return out;
}

std::vector<GenSet> spherical_subsets(const CoxeterSystem& sys) {
  std::vector<GenSet> out{GenSet()};
  // Spherical sets are closed under subsets: grow each by larger generators only.
  for (std::size_t i = 0; i < out.size(); ++i) {
    GenSet T = out[i];
    int start = T.empty() ? 0 : 64 - std::countl_zero(T.bits());
    for (int s = start; s < static_cast<int>(sys.rank()); ++s) {
      GenSet U = T.with(s);
      if (is_spherical(sys, U)) out.push_back(U);
    }
  }
  std::sort(out.begin(), out.end(), [](GenSet a, GenSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  return out;
}

MultiPoly finite_growth_poly(const CoxeterSystem& sys) {
  if (!is_finite(sys)) throw Error(ErrorCode::NotFinite, "growth polynomial of an infinite group");
  MultiPoly p = MultiPoly::constant(sys.num_classes(), 1);
  for (GenSet C : irreducible_components(sys)) p = p * component_poly(sys, C);
  return p;
}

RationalFn growth_series(const CoxeterSystem& sys) {
  auto key = sys.matrix_key();
  {
    std::lock_guard lock(cache_mutex());
    auto it = series_cache().find(key);
    if (it != series_cache().end()) return it->second;
  }
  Parts parts = alternating_sum(sys, spherical_subsets(sys));
  reduce(parts);
  RationalFn w = RationalFn::from_reduced(parts.den, parts.num);
  std::lock_guard lock(cache_mutex());
  series_cache().emplace(key, w);
  return w;
}

RationalFn inverse_growth_series(const CoxeterSystem& sys) { return growth_series(sys).inverse(); }

std::vector<mpq_class> taylor_coeffs(const RationalFn& f, std::size_t L) {
  std::vector<Exponents> images(f.nvars(), Exponents{1});
  UPoly num = UPoly::from_multi(f.num().substitute_monomials(images, 1));
  UPoly den = UPoly::from_multi(f.den().substitute_monomials(images, 1));
  if (den[0] == 0) throw Error(ErrorCode::SingularAtZero, "denominator vanishes at the origin");
  std::vector<mpq_class> a(L + 1);
  for (std::size_t k = 0; k <= L; ++k) {
    mpq_class s = num[k];
    for (std::size_t j = 1; j <= k && static_cast<int>(j) <= den.degree(); ++j) s -= den[j] * a[k - j];
    a[k] = s / den[0];
  }
  return a;
}

mpq_class euler_characteristic(const CoxeterSystem& sys, const WeightVector& q) {
  auto w = growth_series(sys);
  mpq_class top = w.num().evaluate(q.class_values());
  if (top == 0) throw Error(ErrorCode::PoleAtQ, "1/W has a pole at q");
  mpq_class chi = w.den().evaluate(q.class_values()) / top;
  chi.canonicalize();
  return chi;
}

RationalFn euler_characteristic(const CoxeterSystem& sys, const SymbolicRay& ray) {
  return growth_on_ray(sys, ray.exponents).inverse();
}

mpq_class euler_characteristic_direct(const CoxeterSystem& sys, const WeightVector& q) {
  mpq_class chi = 0;
  for (GenSet T : spherical_subsets(sys)) {
    auto sub = restrict(sys, T);
    auto wq = q.restricted(sys, T);
    std::vector<mpq_class> inv;
    for (auto& v : wq.class_values()) inv.push_back(1 / v);
    mpq_class wt = finite_growth_poly(sub).evaluate(inv);
    chi += (T.size() % 2 ? -1 : 1) / wt;
  }
  chi.canonicalize();
  return chi;
}

RationalFn growth_on_ray(const CoxeterSystem& sys, const std::vector<std::uint32_t>& exponents) {
  if (exponents.size() != sys.num_classes()) throw Error(ErrorCode::InvalidWeight, "ray exponents per class");
  std::vector<Exponents> images;
  for (auto k : exponents) images.push_back(Exponents{k});
  return growth_series(sys).substitute_monomials(images, 1);
}

std::string_view membership_name(Membership m) {
  switch (m) {
    case Membership::In: return "in";
    case Membership::Out: return "out";
    case Membership::Unknown: return "unknown";
  }
  return "?";
}

RegionResult region_membership(const CoxeterSystem& sys, const WeightVector& q, const RegionOptions& opts) {
  if (is_finite(sys)) return {Membership::In, false, "finite group"};
  Regime r = q.regime();
  if (r == Regime::EqualOne || r == Regime::AtLeastOne)
    return {Membership::Out, false, "infinite group with every weight >= 1"};
  auto ray = detect_ray(q);
  if (!ray) throw Error(ErrorCode::UnsupportedWeightShape, "weights are not powers of a common base below 1");
  RationalFn f = growth_on_ray(sys, ray->exponents);
  UPoly den = UPoly::from_multi(f.den());
  if (den[0] == 0)
    return {Membership::Out, false, "infinitely many elements have weight 1 along this ray"};
  const mpq_class& x = ray->base;
  if (count_roots(den, 0, x) == 0) return {Membership::In, false, "below the least positive pole"};
  if (den.evaluate(x) != 0) return {Membership::Out, false, "beyond the least positive pole"};

  // At the radius: the pole forces divergence; confirm with partial sums.
  auto coeffs = taylor_coeffs(f, opts.boundary_terms);
  mpq_class sum = 0, xp = 1;
  std::size_t used = 0;
  for (auto& a : coeffs) {
    sum += a * xp;
    xp *= x;
    ++used;
    if (sum > opts.boundary_bound) break;
  }
  RegionResult res{Membership::Out, true, ""};
  if (sum > opts.boundary_bound)
    res.annotation = "on the boundary; partial sums exceed " + rational_to_string(opts.boundary_bound) + " after " +
                     std::to_string(used) + " terms";
  else
    res.annotation = "boundary-convention: on the boundary, counted as out";
  return res;
}

RegionResult region_membership(const CoxeterSystem& sys, const SymbolicRay& ray) {
  if (is_finite(sys)) return {Membership::In, false, "finite group"};
  if (ray.regime == Regime::AtLeastOne) return {Membership::Out, false, "infinite group with every weight >= 1"};
  return {Membership::Unknown, false, "depends on q"};
}

}  // namespace coxl2
