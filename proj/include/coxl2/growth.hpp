#pragma once

#include <string>
#include <vector>

#include "coxl2/coxeter_system.hpp"
#include "coxl2/rational.hpp"
#include "coxl2/weights.hpp"
#include "coxl2/words.hpp"

namespace coxl2 {

/// One variable per conjugacy class: "q" for a single class, else "q_<first member>".
std::vector<std::string> class_variable_names(const CoxeterSystem& sys);

/// All spherical subsets, ordered by size then bits.
std::vector<GenSet> spherical_subsets(const CoxeterSystem& sys);

/// Sum of t_w over a finite group, in the class variables of `sys`. Throws NotFinite.
MultiPoly finite_growth_poly(const CoxeterSystem& sys);

/// W(t) from 1/W(t) = sum over spherical T of (-1)^|T| / W_T(1/t).
RationalFn growth_series(const CoxeterSystem& sys);
/// 1/W(t), canonical.
RationalFn inverse_growth_series(const CoxeterSystem& sys);

/// Power-series coefficients grouped by total degree, 0..L. Throws SingularAtZero.
std::vector<mpq_class> taylor_coeffs(const RationalFn& f, std::size_t L);

/// chi_q = 1/W(q), evaluated exactly.
mpq_class euler_characteristic(const CoxeterSystem& sys, const WeightVector& q);
/// 1/W along a symbolic ray, as a function of the single variable q.
RationalFn euler_characteristic(const CoxeterSystem& sys, const SymbolicRay& ray);

/// The recursion evaluated term by term at q, without forming W(t).
mpq_class euler_characteristic_direct(const CoxeterSystem& sys, const WeightVector& q);

/// W restricted to the line q_c = x^{k_c}, as a reduced function of x.
RationalFn growth_on_ray(const CoxeterSystem& sys, const std::vector<std::uint32_t>& exponents);

enum class Membership { In, Out, Unknown };
std::string_view membership_name(Membership m);

struct RegionOptions {
  std::size_t boundary_terms = 400;  // partial sums checked at the radius
  mpq_class boundary_bound = 50;
};

struct RegionResult {
  Membership membership = Membership::Unknown;
  bool on_boundary = false;
  std::string annotation;
};

/// Decides whether sum_w q_w converges. Throws UnsupportedWeightShape for weights not on a ray.
RegionResult region_membership(const CoxeterSystem& sys, const WeightVector& q, const RegionOptions& opts = {});
/// Symbolic version: Unknown when the answer depends on q.
RegionResult region_membership(const CoxeterSystem& sys, const SymbolicRay& ray);

}  // namespace coxl2
