#include "coxl2/weights.hpp"

#include <numeric>

namespace coxl2 {

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::EqualOne: return "q=1";
    case Regime::AtMostOne: return "q<=1";
    case Regime::AtLeastOne: return "q>=1";
    case Regime::Mixed: return "mixed";
  }
  return "?";
}

namespace {
std::vector<int> class_map(const CoxeterSystem& sys) {
  std::vector<int> m(sys.rank());
  for (std::size_t g = 0; g < sys.rank(); ++g) m[g] = sys.class_of(static_cast<int>(g));
  return m;
}
}  // namespace

WeightVector WeightVector::uniform(const CoxeterSystem& sys, const mpq_class& q) {
  return per_class(sys, std::vector<mpq_class>(sys.num_classes(), q));
}

WeightVector WeightVector::per_class(const CoxeterSystem& sys, std::vector<mpq_class> values) {
  if (values.size() != sys.num_classes())
    throw Error(ErrorCode::InvalidWeight, "expected " + std::to_string(sys.num_classes()) + " class weights");
  for (auto& v : values) {
    v.canonicalize();
    if (v <= 0) throw Error(ErrorCode::InvalidWeight, "weights must be positive");
  }
  WeightVector w;
  w.values_ = std::move(values);
  w.class_of_ = class_map(sys);
  return w;
}

WeightVector WeightVector::per_generator(const CoxeterSystem& sys, const std::vector<mpq_class>& values) {
  if (values.size() != sys.rank())
    throw Error(ErrorCode::InvalidWeight, "expected " + std::to_string(sys.rank()) + " generator weights");
  std::vector<mpq_class> cls(sys.num_classes());
  std::vector<bool> set(sys.num_classes(), false);
  for (std::size_t g = 0; g < sys.rank(); ++g) {
    int c = sys.class_of(static_cast<int>(g));
    if (set[c] && cls[c] != values[g])
      throw Error(ErrorCode::InvalidWeight, "conjugate generators need equal weights (" + sys.name(g) + ")");
    cls[c] = values[g];
    set[c] = true;
  }
  return per_class(sys, std::move(cls));
}

Regime WeightVector::regime() const {
  bool le = true, ge = true;
  for (auto& v : values_) {
    if (v > 1) le = false;
    if (v < 1) ge = false;
  }
  if (le && ge) return Regime::EqualOne;
  if (le) return Regime::AtMostOne;
  if (ge) return Regime::AtLeastOne;
  return Regime::Mixed;
}

bool WeightVector::uniform_value(mpq_class* out) const {
  for (auto& v : values_)
    if (v != values_.front()) return false;
  if (out && !values_.empty()) *out = values_.front();
  return true;
}

WeightVector WeightVector::restricted(const CoxeterSystem& sys, GenSet T) const {
  auto sub = restrict(sys, T);
  std::vector<mpq_class> v(sub.num_classes());
  auto mem = T.members();
  for (std::size_t i = 0; i < mem.size(); ++i) v[sub.class_of(static_cast<int>(i))] = of_generator(mem[i]);
  return per_class(sub, std::move(v));
}

std::string WeightVector::to_string(const CoxeterSystem& sys) const {
  mpq_class u;
  if (uniform_value(&u)) return rational_to_string(u);
  std::string out;
  for (std::size_t c = 0; c < values_.size(); ++c) {
    if (c) out += ",";
    out += sys.name(sys.classes()[c].first()) + "=" + rational_to_string(values_[c]);
  }
  return out;
}

SymbolicRay SymbolicRay::uniform(const CoxeterSystem& sys, Regime r) {
  if (r != Regime::AtLeastOne && r != Regime::AtMostOne)
    throw Error(ErrorCode::InvalidWeight, "symbolic weights need q<=1 or q>=1");
  return SymbolicRay{r, std::vector<std::uint32_t>(sys.num_classes(), 1)};
}

SymbolicRay SymbolicRay::restricted(const CoxeterSystem& sys, GenSet T) const {
  auto sub = restrict(sys, T);
  SymbolicRay r{regime, std::vector<std::uint32_t>(sub.num_classes(), 1)};
  auto mem = T.members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    r.exponents[sub.class_of(static_cast<int>(i))] = exponents[sys.class_of(mem[i])];
  return r;
}

namespace {

// r = y^e with e maximal; returns (y, e). Requires r > 0, r != 1.
std::pair<mpq_class, unsigned long> primitive_power(const mpq_class& r) {
  mpz_class a = r.get_num(), b = r.get_den();
  std::size_t bits = std::max(mpz_sizeinbase(a.get_mpz_t(), 2), mpz_sizeinbase(b.get_mpz_t(), 2));
  for (unsigned long e = bits; e >= 2; --e) {
    mpz_class ra, rb;
    if (mpz_root(ra.get_mpz_t(), a.get_mpz_t(), e) && mpz_root(rb.get_mpz_t(), b.get_mpz_t(), e))
      return {mpq_class(ra, rb), e};
  }
  return {r, 1};
}

}  // namespace

std::optional<WeightRay> detect_ray(const WeightVector& q) {
  auto& v = q.class_values();
  mpq_class base = 0;
  std::vector<unsigned long> e(v.size(), 0);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] > 1) return std::nullopt;
    if (v[c] == 1) continue;
    auto [y, k] = primitive_power(v[c]);
    if (base == 0) base = y;
    if (y != base) return std::nullopt;
    e[c] = k;
  }
  if (base == 0) return std::nullopt;
  unsigned long g = 0;
  for (auto k : e) g = std::gcd(g, k);
  WeightRay ray;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), g);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), g);
  ray.base = mpq_class(num, den);
  for (auto k : e) ray.exponents.push_back(static_cast<std::uint32_t>(k / g));
  return ray;
}

Regime Weight::regime() const { return is_symbolic() ? symbolic_->regime : concrete_->regime(); }

Weight Weight::restricted(const CoxeterSystem& sys, GenSet T) const {
  if (is_symbolic()) return Weight(symbolic_->restricted(sys, T));
  return Weight(concrete_->restricted(sys, T));
}

std::string Weight::to_string(const CoxeterSystem& sys) const {
  if (!is_symbolic()) return concrete_->to_string(sys);
  std::string out = symbolic_->regime == Regime::AtLeastOne ? "symbolic:ge1" : "symbolic:le1";
  bool plain = std::all_of(symbolic_->exponents.begin(), symbolic_->exponents.end(), [](auto k) { return k == 1; });
  if (!plain) {
    out += "[";
    for (std::size_t c = 0; c < symbolic_->exponents.size(); ++c)
      out += (c ? "," : "") + std::to_string(symbolic_->exponents[c]);
    out += "]";
  }
  return out;
}

}  // namespace coxl2
