#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxl2/coxeter_system.hpp"
#include "coxl2/poly.hpp"

namespace coxl2 {

/// Componentwise position of q relative to 1.
enum class Regime { EqualOne, AtMostOne, AtLeastOne, Mixed };

std::string_view regime_name(Regime r);  // "q=1", "q<=1", "q>=1", "mixed"

/// One positive rational per conjugacy class of generators.
class WeightVector {
 public:
  WeightVector() = default;
  static WeightVector uniform(const CoxeterSystem& sys, const mpq_class& q);
  static WeightVector per_class(const CoxeterSystem& sys, std::vector<mpq_class> values);
  /// Throws InvalidWeight unless the values are constant on classes.
  static WeightVector per_generator(const CoxeterSystem& sys, const std::vector<mpq_class>& values);

  const std::vector<mpq_class>& class_values() const { return values_; }
  const mpq_class& of_generator(int g) const { return values_[class_of_[g]]; }
  std::size_t size() const { return values_.size(); }
  Regime regime() const;
  bool uniform_value(mpq_class* out = nullptr) const;

  /// Weights seen by the special subsystem restrict(sys, T).
  WeightVector restricted(const CoxeterSystem& sys, GenSet T) const;

  std::string to_string(const CoxeterSystem& sys) const;

 private:
  std::vector<mpq_class> values_;
  std::vector<int> class_of_;
};

/// q_c = q^{k_c} for one formal parameter q constrained to q <= 1 or q >= 1.
struct SymbolicRay {
  Regime regime = Regime::AtLeastOne;  // AtLeastOne or AtMostOne
  std::vector<std::uint32_t> exponents;  // per class, >= 1

  static SymbolicRay uniform(const CoxeterSystem& sys, Regime r);
  SymbolicRay restricted(const CoxeterSystem& sys, GenSet T) const;
};

/// q_c = x^{k_c} with 0 < x < 1 and k_c >= 0 (at least one k_c > 0).
struct WeightRay {
  mpq_class base;
  std::vector<std::uint32_t> exponents;
};

/// Detects a ray for weights with every value <= 1 and some value < 1; nullopt otherwise.
std::optional<WeightRay> detect_ray(const WeightVector& q);

/// Either concrete weights or a symbolic ray.
class Weight {
 public:
  Weight() = default;
  Weight(WeightVector w) : concrete_(std::move(w)) {}
  Weight(SymbolicRay r) : symbolic_(std::move(r)) {}

  bool is_symbolic() const { return symbolic_.has_value(); }
  const WeightVector& concrete() const { return *concrete_; }
  const SymbolicRay& symbolic() const { return *symbolic_; }
  Regime regime() const;
  Weight restricted(const CoxeterSystem& sys, GenSet T) const;
  std::string to_string(const CoxeterSystem& sys) const;

 private:
  std::optional<WeightVector> concrete_;
  std::optional<SymbolicRay> symbolic_;
};

}  // namespace coxl2
