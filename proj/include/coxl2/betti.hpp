#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxl2/complex.hpp"
#include "coxl2/coxeter_system.hpp"
#include "coxl2/growth.hpp"
#include "coxl2/nerve.hpp"
#include "coxl2/rational.hpp"
#include "coxl2/weights.hpp"

namespace coxl2 {

/// An exact rational, or a rational function of the single ray variable q.
class Quantity {
 public:
  Quantity() = default;
  explicit Quantity(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  explicit Quantity(RationalFn f) : fn_(std::move(f)), symbolic_(true) {}

  bool symbolic() const { return symbolic_; }
  const mpq_class& value() const { return value_; }
  const RationalFn& fn() const { return fn_; }
  bool is_zero() const { return symbolic_ ? fn_.is_zero() : value_ == 0; }
  RationalFn as_fn() const;

  friend Quantity operator+(const Quantity& a, const Quantity& b);
  friend Quantity operator-(const Quantity& a, const Quantity& b);
  friend Quantity operator*(const Quantity& a, const Quantity& b);
  friend Quantity operator/(const Quantity& a, const Quantity& b);
  Quantity operator-() const { return Quantity() - *this; }
  bool operator==(const Quantity& o) const;

  std::string to_string() const;

 private:
  mpq_class value_ = 0;
  RationalFn fn_{1};
  bool symbolic_ = false;
};

/// Nonnegative everywhere on the regime interval: (0,1] for q <= 1, [1,inf) for q >= 1.
bool nonnegative_on_regime(const RationalFn& f, Regime r);

enum class BettiStatus { Unknown, Zero, Value, Symbolic };
std::string_view betti_status_name(BettiStatus s);

struct BettiDegree {
  int k = 0;
  BettiStatus status = BettiStatus::Unknown;
  Quantity value;
  std::vector<std::string> sources;  // rules that determined this degree
  bool nonzero = false;              // known nonzero without a value yet
};

struct Hypothesis {
  std::string name;
  HypothesisState state = HypothesisState::Unknown;
};

struct TrailEntry {
  std::string rule;
  std::vector<Hypothesis> hypotheses;
  std::string citation;
  std::string determined;  // e.g. "b_1 = 0, b_2 = 1/6"
};

struct BettiReport {
  Weight weight;
  std::string weights;  // printable form of `weight`
  Regime regime = Regime::Mixed;
  Membership region = Membership::Unknown;
  std::vector<BettiDegree> degrees;  // 0..dim Sigma
  std::vector<TrailEntry> trail;     // sorted by rule id

  bool fully_determined() const;
  std::size_t unknown_count() const;
  /// Alternating sum; requires a fully determined report.
  Quantity alternating_sum() const;
  nlohmann::json to_json() const;
};

/// User-certified facts. Each is checked as far as the library can; a failed check raises
/// InconsistencyError.
struct Assertions {
  std::optional<int> ghs;                  // nerve graph is the 1-skeleton of a GHS^n, Euclidean 2-cells
  std::optional<CellComplex> cellulation;  // explicit such complex; vertex ids are generator names
  bool disk = false;                       // nerve is a disk
  std::optional<int> vcd;
  bool coned = false;                      // nerve was built by right-angled coning of a sphere cellulation
};

struct BettiOptions {
  std::vector<std::string> rule_order;  // permutation of betti_rule_ids(); empty means the default order
  std::set<std::string> disabled;
};

/// "R1" .. "R15".
const std::vector<std::string>& betti_rule_ids();

BettiReport deduce_betti(const CoxeterSystem& sys, const Weight& q, const Assertions& assertions = {},
                         const BettiOptions& opts = {});

/// Report for W x Z/2 where the new generator has weight q_c. Throws InputNotDetermined.
BettiReport apply_cone_rule(const BettiReport& report, const mpq_class& q_c);

struct ConsistencyResult {
  bool pass = false;
  Quantity chi;
  Quantity alternating_sum;
  Quantity discrepancy;  // alternating_sum - chi
  std::string detail;
};

/// Recomputes chi independently and compares with the report's alternating sum.
ConsistencyResult consistency_check(const BettiReport& report, const CoxeterSystem& sys);

/// 1 - sum_s q_s/(1+q_s) + sum over edges {s,t} of 1/W_st(1/q), for a graph nerve.
Quantity graph_nerve_formula(const CoxeterSystem& sys, const Weight& q);

/// Closed forms in a single weight q (a number or the ray variable).
Quantity complete_three_formula(unsigned n, const Quantity& q);             // K_n(3)
Quantity octahedron_formula(unsigned n, const Quantity& q);                 // octahedron skeleton, labels 3
Quantity cube_formula(unsigned n, const Quantity& q);                       // C_n(2)
Quantity complete_minus_formula(unsigned n, unsigned l, const Quantity& q);  // K_n^l(3)

struct GraphFamily {
  enum class Kind { None, CompleteThree, Octahedron, Cube, CompleteMinus } kind = Kind::None;
  unsigned n = 0;
  unsigned l = 0;  // removed edges for CompleteMinus
};

/// Recognizes K_n(3), octahedron skeletons with labels 3, C_n(2) and K_n^l(3) from the nerve.
GraphFamily recognize_graph_family(const CoxeterSystem& sys);

}  // namespace coxl2
