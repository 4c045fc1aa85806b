#include "coxl2/betti.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "coxl2/classifier.hpp"
#include "coxl2/error.hpp"

namespace coxl2 {

// ---------------------------------------------------------------- Quantity

RationalFn Quantity::as_fn() const { return symbolic_ ? fn_ : RationalFn::constant(1, value_); }

namespace {
template <typename Op>
Quantity combine(const Quantity& a, const Quantity& b, Op op) {
  if (!a.symbolic() && !b.symbolic()) return Quantity(mpq_class(op(a.value(), b.value())));
  return Quantity(op(a.as_fn(), b.as_fn()));
}
}  // namespace

Quantity operator+(const Quantity& a, const Quantity& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Quantity operator-(const Quantity& a, const Quantity& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Quantity operator*(const Quantity& a, const Quantity& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Quantity operator/(const Quantity& a, const Quantity& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool Quantity::operator==(const Quantity& o) const {
  if (!symbolic_ && !o.symbolic_) return value_ == o.value_;
  return as_fn() == o.as_fn();
}

std::string Quantity::to_string() const { return symbolic_ ? fn_.to_string({"q"}) : rational_to_string(value_); }

bool nonnegative_on_regime(const RationalFn& f, Regime r) {
  if (f.is_zero()) return true;
  UPoly num = UPoly::from_multi(f.num()), den = UPoly::from_multi(f.den());
  UPoly p = num * den;
  std::vector<mpq_class> samples{1};
  mpq_class lo = 0, hi = 1;
  if (r == Regime::AtLeastOne) {
    lo = 1;
    hi = root_bound(p) + 2;
    samples.push_back(hi);
  } else if (r != Regime::AtMostOne) {
    throw std::logic_error("nonnegativity needs q <= 1 or q >= 1");
  }
  auto roots = isolate_roots(p, lo, hi, mpq_class(1, 1 << 20));
  mpq_class prev = lo;
  for (auto& [a, b] : roots) {
    samples.push_back((prev + a) / 2);
    samples.push_back(a);
    samples.push_back((a + b) / 2);
    samples.push_back(b);
    prev = b;
  }
  samples.push_back((prev + hi) / 2);
  for (auto& x : samples) {
    if (x <= 0 || (r == Regime::AtMostOne && x > 1) || (r == Regime::AtLeastOne && x < 1)) continue;
    mpq_class d = den.evaluate(x);
    if (d == 0) continue;
    if (num.evaluate(x) / d < 0) return false;
  }
  return true;
}

std::string_view betti_status_name(BettiStatus s) {
  switch (s) {
    case BettiStatus::Unknown: return "unknown";
    case BettiStatus::Zero: return "zero";
    case BettiStatus::Value: return "value";
    case BettiStatus::Symbolic: return "symbolic";
  }
  return "?";
}

// ---------------------------------------------------------------- report

bool BettiReport::fully_determined() const { return unknown_count() == 0; }

std::size_t BettiReport::unknown_count() const {
  return static_cast<std::size_t>(std::count_if(degrees.begin(), degrees.end(),
                                                [](const BettiDegree& d) { return d.status == BettiStatus::Unknown; }));
}

Quantity BettiReport::alternating_sum() const {
  if (!fully_determined()) throw Error(ErrorCode::InputNotDetermined, "report has unknown degrees");
  Quantity s;
  for (auto& d : degrees) s = d.k % 2 ? s - d.value : s + d.value;
  return s;
}

nlohmann::json BettiReport::to_json() const {
  nlohmann::json ds = nlohmann::json::array();
  for (auto& d : degrees) {
    nlohmann::json j{{"k", d.k}, {"status", betti_status_name(d.status)}, {"sources", d.sources}};
    if (d.status == BettiStatus::Value || d.status == BettiStatus::Symbolic) j["value"] = d.value.to_string();
    if (d.status == BettiStatus::Unknown && d.nonzero) j["nonzero"] = true;
    ds.push_back(j);
  }
  nlohmann::json tr = nlohmann::json::array();
  for (auto& t : trail) {
    nlohmann::json hs = nlohmann::json::array();
    for (auto& h : t.hypotheses) hs.push_back({{"name", h.name}, {"state", hypothesis_state_name(h.state)}});
    tr.push_back({{"rule", t.rule}, {"hypotheses", hs}, {"citation", t.citation}, {"determined", t.determined}});
  }
  return {{"weights", weights},
          {"regime", regime_name(regime)},
          {"region", membership_name(region)},
          {"degrees", ds},
          {"trail", tr}};
}

// ---------------------------------------------------------------- formulas

namespace {

Quantity one() { return Quantity(mpq_class(1)); }
Quantity num(long v) { return Quantity(mpq_class(v)); }

// q^3 / (1 + 2q + 2q^2 + q^3) = 1 / W_{I2(3)}(1/q)
Quantity three_edge(const Quantity& q) { return q * q * q / (one() + num(2) * q + num(2) * q * q + q * q * q); }
Quantity vertex_term(const Quantity& q) { return q / (one() + q); }

}  // namespace

Quantity complete_three_formula(unsigned n, const Quantity& q) {
  return one() - num(n) * vertex_term(q) + Quantity(mpq_class(n * (n - 1), 2)) * three_edge(q);
}

Quantity octahedron_formula(unsigned n, const Quantity& q) {
  return one() - num(2 * n) * vertex_term(q) + num(2 * n * (n - 1)) * three_edge(q);
}

Quantity cube_formula(unsigned n, const Quantity& q) {
  long v = 1L << n;
  return one() - num(v) * vertex_term(q) + num(n * (v / 2)) * q * q / ((one() + q) * (one() + q));
}

Quantity complete_minus_formula(unsigned n, unsigned l, const Quantity& q) {
  return complete_three_formula(n, q) - num(l) * three_edge(q);
}

namespace {

// Weight of generator g as a Quantity.
Quantity generator_weight(const CoxeterSystem& sys, const Weight& q, int g) {
  if (!q.is_symbolic()) return Quantity(q.concrete().of_generator(g));
  auto k = q.symbolic().exponents[sys.class_of(g)];
  Exponents e{k};
  return Quantity(RationalFn::from_poly(MultiPoly::monomial(e)));
}

// 1 / W_T(1/q) for spherical T.
Quantity inverse_growth_at_inverse(const CoxeterSystem& sys, const Weight& q, GenSet T) {
  auto sub = restrict(sys, T);
  MultiPoly p = finite_growth_poly(sub);
  if (!q.is_symbolic()) {
    std::vector<mpq_class> inv;
    auto sub_q = q.concrete().restricted(sys, T);
    for (auto& v : sub_q.class_values()) inv.push_back(1 / v);
    return Quantity(mpq_class(1 / p.evaluate(inv)));
  }
  std::vector<Exponents> images;
  auto sub_ray = q.symbolic().restricted(sys, T);
  for (auto k : sub_ray.exponents) images.push_back(Exponents{k});
  MultiPoly one_var = p.substitute_monomials(images, 1);
  auto d = one_var.total_degree();
  MultiPoly rev = one_var.reversed(Exponents{static_cast<std::uint32_t>(d)});
  return Quantity(RationalFn(MultiPoly::monomial(Exponents{static_cast<std::uint32_t>(d)}), rev));
}

}  // namespace

Quantity graph_nerve_formula(const CoxeterSystem& sys, const Weight& q) {
  if (!build_nerve(sys).is_graph()) throw Error(ErrorCode::ValidationError, "nerve is not a graph");
  Quantity out = one();
  for (std::size_t s = 0; s < sys.rank(); ++s) out = out - vertex_term(generator_weight(sys, q, static_cast<int>(s)));
  for (std::size_t s = 0; s < sys.rank(); ++s)
    for (std::size_t t = s + 1; t < sys.rank(); ++t)
      if (sys.label(s, t).is_finite())
        out = out + inverse_growth_at_inverse(sys, q, GenSet::single(static_cast<int>(s)).with(static_cast<int>(t)));
  return out;
}

// ---------------------------------------------------------------- family recognition

namespace {

bool is_hypercube(std::size_t nv, const std::vector<std::vector<int>>& adj, unsigned* dim) {
  unsigned n = 0;
  while ((std::size_t{1} << n) < nv) ++n;
  if ((std::size_t{1} << n) != nv || n < 1) return false;
  for (auto& a : adj)
    if (a.size() != n) return false;
  std::vector<long> label(nv, -1), dist(nv, -1);
  label[0] = 0;
  dist[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    label[adj[0][i]] = 1L << i;
    dist[adj[0][i]] = 1;
  }
  std::vector<int> frontier(adj[0].begin(), adj[0].end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (int w : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          next.push_back(w);
        }
    for (int w : next) {
      long l = 0;
      for (int u : adj[w])
        if (dist[u] == dist[w] - 1) l |= label[u];
      label[w] = l;
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = next;
  }
  std::vector<bool> seen(nv, false);
  for (std::size_t v = 0; v < nv; ++v) {
    if (label[v] < 0 || label[v] >= static_cast<long>(nv) || seen[label[v]]) return false;
    seen[label[v]] = true;
    for (int w : adj[v])
      if (std::popcount(static_cast<unsigned long>(label[v] ^ label[w])) != 1) return false;
  }
  *dim = n;
  return true;
}

}  // namespace

GraphFamily recognize_graph_family(const CoxeterSystem& sys) {
  GraphFamily none;
  auto nerve = build_nerve(sys);
  if (!nerve.is_graph()) return none;
  std::size_t n = sys.rank();
  std::vector<std::vector<int>> adj(n);
  std::set<std::uint32_t> labels;
  for (auto& [e, l] : nerve.edge_labels) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
    labels.insert(l.value());
  }
  std::size_t edges = nerve.edge_labels.size();
  std::size_t complete = n * (n - 1) / 2;
  bool all3 = labels == std::set<std::uint32_t>{3};
  bool all2 = labels == std::set<std::uint32_t>{2};
  if (all3 && edges == complete && n >= 3) return {GraphFamily::Kind::CompleteThree, static_cast<unsigned>(n), 0};
  if (all3 && n >= 6 && n % 2 == 0 && edges == complete - n / 2 &&
      std::all_of(adj.begin(), adj.end(), [&](auto& a) { return a.size() == n - 2; }))
    return {GraphFamily::Kind::Octahedron, static_cast<unsigned>(n / 2), 0};
  unsigned dim = 0;
  if (all2 && n >= 4 && is_hypercube(n, adj, &dim)) return {GraphFamily::Kind::Cube, dim, 0};
  if (all3 && n >= 5 && edges < complete && complete - edges <= n - 4)
    return {GraphFamily::Kind::CompleteMinus, static_cast<unsigned>(n), static_cast<unsigned>(complete - edges)};
  return none;
}

// ---------------------------------------------------------------- engine

namespace {

enum class FactKind { Zero, NonZero, Value };

struct Fact {
  int k;
  FactKind kind;
  Quantity value;
};

struct RuleOutput {
  bool fired = false;
  std::vector<Hypothesis> hyps;
  std::vector<Fact> facts;
};

struct Entry {
  std::optional<Quantity> value;
  std::set<std::string> sources;
  std::string nonzero_by;
};

using State = std::vector<Entry>;

std::string bname(int k) { return "b_" + std::to_string(k); }

bool holds(HypothesisState s) { return s == HypothesisState::Verified || s == HypothesisState::UserAsserted; }

HypothesisState combine_states(std::initializer_list<HypothesisState> xs) {
  HypothesisState out = HypothesisState::Verified;
  for (auto s : xs) {
    if (s == HypothesisState::Failed) return HypothesisState::Failed;
    if (s == HypothesisState::Unknown) out = HypothesisState::Unknown;
    if (s == HypothesisState::UserAsserted && out == HypothesisState::Verified) out = HypothesisState::UserAsserted;
  }
  return out;
}

struct GhsInfo {
  HypothesisState sphere = HypothesisState::Unknown;
  HypothesisState euclidean = HypothesisState::Unknown;
  int n = 0;
  std::string how;
};

class Engine {
 public:
  Engine(const CoxeterSystem& sys, const Weight& q, const Assertions& a, const BettiOptions& opts)
      : sys_(sys), q_(q), a_(a), opts_(opts), nerve_(build_nerve(sys)) {
    top_ = 0;
    for (GenSet T : spherical_subsets(sys)) top_ = std::max(top_, static_cast<int>(T.size()));
    regime_ = q.regime();
    le1_ = regime_ == Regime::AtMostOne || regime_ == Regime::EqualOne;
    ge1_ = regime_ == Regime::AtLeastOne || regime_ == Regime::EqualOne;
    finite_ = is_finite(sys);
    compute_region();
  }

  BettiReport run();

 private:
  using Rule = std::function<RuleOutput()>;

  void compute_region();
  const VcdBounds& vcd();
  const GhsInfo& ghs();
  std::optional<Quantity> chi();
  void concentrated(RuleOutput& out, int d) const {
    for (int k = 0; k <= top_; ++k)
      if (k != d) out.facts.push_back({k, FactKind::Zero, {}});
  }
  void zero_from(RuleOutput& out, int from) const {
    for (int k = std::max(from, 0); k <= top_; ++k) out.facts.push_back({k, FactKind::Zero, {}});
  }
  void zero_upto(RuleOutput& out, int upto) const {
    for (int k = 0; k <= std::min(upto, top_); ++k) out.facts.push_back({k, FactKind::Zero, {}});
  }
  Quantity uniform_q() const;
  bool uniform_weights() const;
  void trichotomy(RuleOutput& out);

  RuleOutput r1();
  RuleOutput r2();
  RuleOutput r3();
  RuleOutput r4();
  RuleOutput r5();
  RuleOutput r6();
  RuleOutput r7();
  RuleOutput r8();
  RuleOutput r9();
  RuleOutput r10();
  RuleOutput r11();
  RuleOutput r12();
  RuleOutput r13();
  RuleOutput r14();
  RuleOutput r15(const State& st);

  void merge(State& st, const std::string& rule, const Fact& f, bool* changed);

  const CoxeterSystem& sys_;
  Weight q_;
  Assertions a_;
  BettiOptions opts_;
  LabeledNerve nerve_;
  int top_ = 0;
  Regime regime_;
  bool le1_ = false, ge1_ = false, finite_ = false;
  RegionResult region_;
  bool in_closure_ = false;  // q in the closure of the region, verified
  std::optional<VcdBounds> vcd_;
  std::optional<GhsInfo> ghs_;
  std::optional<std::optional<Quantity>> chi_;
};

void Engine::compute_region() {
  if (q_.is_symbolic()) {
    region_ = region_membership(sys_, q_.symbolic());
  } else {
    try {
      region_ = region_membership(sys_, q_.concrete());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedWeightShape) throw;
      region_ = {Membership::Unknown, false, "weights not on a supported ray"};
    }
  }
  in_closure_ = region_.membership == Membership::In || region_.on_boundary;
  if (!finite_ && regime_ == Regime::EqualOne) {
    // 1 is in the closure exactly when the uniform growth series has no pole in (0,1)
    std::vector<std::uint32_t> ones(sys_.num_classes(), 1);
    UPoly den = UPoly::from_multi(growth_on_ray(sys_, ones).den());
    std::size_t inside = count_roots(den, 0, 1) - (den.evaluate(1) == 0 ? 1 : 0);
    in_closure_ = inside == 0;
  }
}

const VcdBounds& Engine::vcd() {
  if (!vcd_) vcd_ = vcd_bounds(sys_, a_.vcd);
  return *vcd_;
}

std::optional<Quantity> Engine::chi() {
  if (!chi_) {
    try {
      if (q_.is_symbolic())
        chi_ = Quantity(euler_characteristic(sys_, q_.symbolic()));
      else
        chi_ = Quantity(euler_characteristic(sys_, q_.concrete()));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleAtQ) throw;
      chi_ = std::optional<Quantity>();
    }
  }
  return *chi_;
}

bool Engine::uniform_weights() const {
  if (!q_.is_symbolic()) return q_.concrete().uniform_value();
  auto& e = q_.symbolic().exponents;
  return std::all_of(e.begin(), e.end(), [&](auto k) { return k == e[0]; });
}

Quantity Engine::uniform_q() const { return generator_weight(sys_, q_, 0); }

const GhsInfo& Engine::ghs() {
  if (ghs_) return *ghs_;
  GhsInfo g;
  auto euclidean_faces = [&](const std::vector<GenSet>& faces) {
    for (GenSet T : faces) {
      auto d = euclidean_dimension(sys_, T);
      if (!d || *d != 2 || !is_parabolic(sys_, T)) return HypothesisState::Failed;
    }
    return HypothesisState::Verified;
  };
  if (!nerve_.is_graph()) {
    g.sphere = HypothesisState::Failed;
  } else if (a_.cellulation) {
    const auto& c = *a_.cellulation;
    // vertex ids must be generator names and the 1-skeleton must be the nerve graph
    std::set<std::pair<std::string, std::string>> want, have;
    for (auto [s, t] : nerve_.edges()) want.insert(std::minmax(sys_.name(s), sys_.name(t)));
    for (auto& [x, y] : c.edges()) have.insert(std::minmax(x, y));
    auto ids = c.vertex_ids();
    std::set<std::string> names(sys_.names().begin(), sys_.names().end());
    if (std::set<std::string>(ids.begin(), ids.end()) != names || want != have)
      throw Error(ErrorCode::Inconsistency, "asserted cellulation does not have the nerve as its 1-skeleton");
    g.n = c.dimension();
    auto check = ghs_check(c, g.n);
    if (!check.verified) throw Error(ErrorCode::Inconsistency, "asserted cellulation is not a GHS: " + check.reason);
    g.sphere = HypothesisState::Verified;
    std::vector<GenSet> faces;
    for (int i : c.cells_of_dim(2)) {
      GenSet T;
      for (int v : c.vertices_of(i)) T = T.with(sys_.index_of(c.cell(v).id));
      faces.push_back(T);
    }
    g.euclidean = euclidean_faces(faces);
    g.how = "supplied cellulation";
  } else if (a_.ghs) {
    g.n = *a_.ghs;
    g.sphere = HypothesisState::UserAsserted;
    g.euclidean = HypothesisState::UserAsserted;
    g.how = "assertion";
  } else {
    auto edges = nerve_.edges();
    if (sys_.rank() >= 4 && is_three_connected(sys_.rank(), edges)) {
      if (auto faces = planar_faces(sys_.rank(), edges)) {
        // Steinitz: a 3-connected planar graph is a polytope skeleton, the faces are its 2-cells
        std::vector<std::vector<int>> cycles = *faces;
        std::vector<GenSet> sets;
        for (auto& f : cycles) {
          GenSet T;
          for (int v : f) T = T.with(v);
          sets.push_back(T);
        }
        g.n = 2;
        g.sphere = HypothesisState::Verified;
        g.euclidean = euclidean_faces(sets);
        g.how = "3-connected planar graph";
      }
    }
  }
  ghs_ = g;
  return *ghs_;
}

void Engine::trichotomy(RuleOutput& out) {
  if (region_.membership == Membership::In || in_closure_) concentrated(out, 0);
  if (region_.membership == Membership::Out && !in_closure_ && le1_) concentrated(out, 1);
  if (ge1_) concentrated(out, 2);
}

RuleOutput Engine::r1() {
  RuleOutput out;
  if (region_.membership == Membership::Unknown) return out;
  bool in = region_.membership == Membership::In;
  out.fired = true;
  out.hyps.push_back({in ? "q in the region of convergence" : "q outside the region of convergence",
                      HypothesisState::Verified});
  if (in) {
    out.facts.push_back({0, FactKind::NonZero, {}});
    zero_from(out, 1);
  } else {
    out.facts.push_back({0, FactKind::Zero, {}});
  }
  return out;
}

RuleOutput Engine::r2() {
  RuleOutput out;
  auto d = euclidean_dimension(sys_, sys_.all());
  if (!d || !(le1_ || ge1_)) return out;
  out.fired = true;
  out.hyps.push_back({"W is a Euclidean reflection group of dimension " + std::to_string(*d), HypothesisState::Verified});
  if (le1_) concentrated(out, 0);
  if (ge1_) concentrated(out, *d);
  return out;
}

RuleOutput Engine::r3() {
  RuleOutput out;
  const auto& b = vcd();
  if (b.hi >= top_) return out;
  out.fired = true;
  out.hyps.push_back({"vcd W <= " + std::to_string(b.hi), b.state});
  zero_from(out, b.hi + 1);
  return out;
}

RuleOutput Engine::r4() {
  RuleOutput out;
  if (!le1_ || regime_ == Regime::EqualOne) return out;
  const auto& b = vcd();
  if (!b.exact) return out;
  int n = b.lo;
  if (n > top_) return out;
  BettiOptions sub = opts_;
  sub.disabled.insert("R4");
  auto at_one = deduce_betti(sys_, Weight(WeightVector::uniform(sys_, 1)), a_, sub);
  if (n >= static_cast<int>(at_one.degrees.size()) || at_one.degrees[n].status != BettiStatus::Zero) return out;
  out.fired = true;
  out.hyps.push_back({"vcd W = " + std::to_string(n), b.state});
  out.hyps.push_back({bname(n) + " vanishes at q = 1", HypothesisState::Verified});
  zero_from(out, n);
  return out;
}

RuleOutput Engine::r5() {
  RuleOutput out;
  if (!ge1_) return out;
  const auto& g = ghs();
  if (!holds(g.sphere) || !holds(g.euclidean) || g.n < 2) return out;
  out.fired = true;
  out.hyps.push_back({"nerve is the 1-skeleton of a GHS^" + std::to_string(g.n) + " (" + g.how + ")", g.sphere});
  out.hyps.push_back({"all 2-cells are Euclidean", g.euclidean});
  concentrated(out, 2);
  out.facts.push_back({2, FactKind::Value, graph_nerve_formula(sys_, q_)});
  return out;
}

RuleOutput Engine::r6() {
  RuleOutput out;
  const auto& g = ghs();
  if (!holds(g.sphere) || !holds(g.euclidean) || g.n != 2) return out;
  trichotomy(out);
  if (out.facts.empty()) return out;
  out.fired = true;
  out.hyps.push_back({"nerve is the 1-skeleton of a GHS^2 (" + g.how + ")", g.sphere});
  out.hyps.push_back({"all 2-cells are Euclidean", g.euclidean});
  out.hyps.push_back({std::string("region: ") + std::string(membership_name(region_.membership)) +
                          (in_closure_ ? ", in the closure" : ""),
                      HypothesisState::Verified});
  return out;
}

RuleOutput Engine::r7() {
  RuleOutput out;
  if (!ge1_ || !uniform_weights()) return out;
  auto fam = recognize_graph_family(sys_);
  Quantity q = uniform_q();
  std::string name;
  Quantity value;
  switch (fam.kind) {
    case GraphFamily::Kind::None: return out;
    case GraphFamily::Kind::CompleteThree:
      name = "K_" + std::to_string(fam.n) + "(3)";
      value = complete_three_formula(fam.n, q);
      break;
    case GraphFamily::Kind::Octahedron:
      name = "octahedron skeleton of dimension " + std::to_string(fam.n) + ", labels 3";
      value = octahedron_formula(fam.n, q);
      break;
    case GraphFamily::Kind::Cube:
      name = "C_" + std::to_string(fam.n) + "(2)";
      value = cube_formula(fam.n, q);
      break;
    case GraphFamily::Kind::CompleteMinus:
      name = "K_" + std::to_string(fam.n) + "^" + std::to_string(fam.l) + "(3)";
      value = complete_minus_formula(fam.n, fam.l, q);
      break;
  }
  out.fired = true;
  out.hyps.push_back({"nerve is " + name, HypothesisState::Verified});
  out.hyps.push_back({"uniform weight", HypothesisState::Verified});
  concentrated(out, 2);
  out.facts.push_back({2, FactKind::Value, value});
  return out;
}

RuleOutput Engine::r8() {
  RuleOutput out;
  std::size_t n = sys_.rank();
  if (!ge1_ || n < 5 || !nerve_.is_graph() || nerve_.edge_labels.size() != n * (n - 1) / 2) return out;
  std::size_t relabeled = 0;
  for (auto& [e, l] : nerve_.edge_labels) relabeled += l != Label(3);
  if (relabeled > n - 4) return out;
  out.fired = true;
  out.hyps.push_back({"nerve is K_" + std::to_string(n) + " with " + std::to_string(relabeled) + " labels other than 3",
                      HypothesisState::Verified});
  concentrated(out, 2);
  return out;
}

RuleOutput Engine::r9() {
  RuleOutput out;
  auto comps = classify_system(sys_);
  if (comps.size() != 1 || comps[0].second.kind != TypeKind::QuasiLanner) return out;
  int n = comps[0].second.n;
  if (le1_) zero_from(out, n - 1);
  if (ge1_) zero_upto(out, 1);
  if (n == 3) trichotomy(out);
  if (out.facts.empty()) return out;
  out.fired = true;
  out.hyps.push_back({"W is quasi-Lanner of dimension " + std::to_string(n), HypothesisState::Verified});
  return out;
}

RuleOutput Engine::r10() {
  RuleOutput out;
  std::size_t n = sys_.rank();
  if (!ge1_ || finite_ || n < 5 || !is_two_spherical(sys_)) return out;
  HypothesisState cond1 = HypothesisState::Verified;
  for (std::uint64_t bits = 1; bits <= sys_.all().bits(); ++bits) {
    GenSet T(bits);
    if (T.size() < 5 || is_spherical(sys_, T)) continue;
    int limit = static_cast<int>(T.size()) - 2;
    VcdBounds b = T == sys_.all() ? vcd() : vcd_bounds(restrict(sys_, T));
    HypothesisState s = b.hi <= limit ? b.state : (b.lo > limit ? HypothesisState::Failed : HypothesisState::Unknown);
    cond1 = combine_states({cond1, s});
  }
  HypothesisState cond3 = HypothesisState::Verified;
  for (std::uint64_t bits = 1; bits <= sys_.all().bits(); ++bits) {
    GenSet T(bits);
    if ((T.size() != 3 && T.size() != 4) || is_spherical(sys_, T)) continue;
    // Euclidean here allows finite factors next to the affine ones
    bool ok = euclidean_dimension(sys_, T).has_value();
    if (!ok && T.size() == 4 && irreducible_components(sys_, T).size() == 1) {
      auto tag = classify_component(restrict(sys_, T));
      ok = tag.kind == TypeKind::QuasiLanner && tag.n == 3;
    }
    if (!ok) cond3 = HypothesisState::Failed;
  }
  if (!holds(cond1) || !holds(cond3)) return out;
  out.fired = true;
  out.hyps.push_back({"W infinite and 2-spherical with |S| >= 5", HypothesisState::Verified});
  out.hyps.push_back({"vcd W_T <= |T| - 2 for |T| >= 5", cond1});
  out.hyps.push_back({"infinite W_T with |T| = 3, 4 are Euclidean or quasi-Lanner of dimension 3", cond3});
  zero_upto(out, 1);
  return out;
}

RuleOutput Engine::r11() {
  RuleOutput out;
  int d = nerve_.dimension();
  if (!le1_ || finite_ || d < 2) return out;
  HypothesisState state = HypothesisState::Unknown;
  auto check = disk_check(nerve_.complex(), d);
  if (a_.disk && !check.verified)
    throw Error(ErrorCode::Inconsistency, "asserted disk nerve fails the disk check: " + check.reason);
  if (check.verified && d == 2)
    state = HypothesisState::Verified;  // a homology 2-manifold is a 2-manifold
  else if (a_.disk)
    state = HypothesisState::UserAsserted;
  if (!holds(state)) return out;
  out.fired = true;
  out.hyps.push_back({"nerve is a " + std::to_string(d) + "-disk", state});
  zero_from(out, d);
  return out;
}

RuleOutput Engine::r12() {
  RuleOutput out;
  if (!le1_ || !planar_nerve(nerve_)) return out;
  out.fired = true;
  out.hyps.push_back({"nerve is a planar graph", HypothesisState::Verified});
  zero_from(out, 2);
  return out;
}

RuleOutput Engine::r13() {
  RuleOutput out;
  if (!le1_ || !nerve_.is_graph()) return out;
  const auto& g = ghs();
  if (!holds(g.sphere) || g.n != 2) return out;
  out.fired = true;
  out.hyps.push_back({"nerve is the 1-skeleton of a cellulation of S^2 (" + g.how + ")", g.sphere});
  if (top_ >= 2) out.facts.push_back({2, FactKind::Zero, {}});
  return out;
}

RuleOutput Engine::r14() {
  RuleOutput out;
  int d = nerve_.dimension();
  if (!a_.coned) return out;
  auto check = ghs_check(nerve_.complex(), d);
  if (!check.verified) throw Error(ErrorCode::Inconsistency, "asserted coned nerve is not a GHS: " + check.reason);
  if (!ge1_ || d < 2) return out;
  out.fired = true;
  out.hyps.push_back({"nerve is a GHS^" + std::to_string(d) + " built by right-angled coning", HypothesisState::UserAsserted});
  zero_upto(out, 1);
  return out;
}

RuleOutput Engine::r15(const State& st) {
  RuleOutput out;
  auto c = chi();
  if (!c) return out;
  for (int k = 0; k <= top_; ++k) {
    bool others = true;
    Quantity rest;
    for (int j = 0; j <= top_; ++j) {
      if (j == k) continue;
      if (!st[j].value) {
        others = false;
        break;
      }
      rest = j % 2 ? rest - *st[j].value : rest + *st[j].value;
    }
    if (!others) continue;
    Quantity v = *c - rest;
    if (k % 2) v = -v;
    out.facts.push_back({k, FactKind::Value, v});
  }
  if (!out.facts.empty()) {
    out.fired = true;
    out.hyps.push_back({"chi_q = 1/W(q)", HypothesisState::Verified});
  }
  return out;
}

void Engine::merge(State& st, const std::string& rule, const Fact& f, bool* changed) {
  if (f.k < 0 || f.k > top_) return;
  Entry& e = st[f.k];
  auto conflict = [&](const std::string& what) {
    std::string others;
    for (auto& s : e.sources) others += (others.empty() ? "" : ",") + s;
    if (!e.nonzero_by.empty()) others += (others.empty() ? "" : ",") + e.nonzero_by;
    throw Error(ErrorCode::Inconsistency, rule + " and " + others + " disagree on " + bname(f.k) + ": " + what);
  };
  if (f.kind == FactKind::NonZero) {
    if (e.value && e.value->is_zero()) conflict("nonzero vs 0");
    if (e.nonzero_by.empty()) {
      e.nonzero_by = rule;
      *changed = true;
    }
    return;
  }
  Quantity v = f.kind == FactKind::Zero ? Quantity() : f.value;
  if (!v.is_zero()) {
    bool negative = v.symbolic() ? !nonnegative_on_regime(v.fn(), regime_) : v.value() < 0;
    if (negative)
      throw Error(ErrorCode::Inconsistency, rule + " forces a negative value " + v.to_string() + " for " + bname(f.k));
  }
  if (e.value) {
    if (!(*e.value == v)) conflict(e.value->to_string() + " vs " + v.to_string());
  } else {
    if (v.is_zero() && !e.nonzero_by.empty()) conflict("0 vs nonzero");
    e.value = v;
    *changed = true;
  }
  if (e.sources.insert(rule).second) *changed = true;
}

BettiReport Engine::run() {
  std::map<std::string, std::function<RuleOutput(const State&)>> rules{
      {"R1", [this](const State&) { return r1(); }},   {"R2", [this](const State&) { return r2(); }},
      {"R3", [this](const State&) { return r3(); }},   {"R4", [this](const State&) { return r4(); }},
      {"R5", [this](const State&) { return r5(); }},   {"R6", [this](const State&) { return r6(); }},
      {"R7", [this](const State&) { return r7(); }},   {"R8", [this](const State&) { return r8(); }},
      {"R9", [this](const State&) { return r9(); }},   {"R10", [this](const State&) { return r10(); }},
      {"R11", [this](const State&) { return r11(); }}, {"R12", [this](const State&) { return r12(); }},
      {"R13", [this](const State&) { return r13(); }}, {"R14", [this](const State&) { return r14(); }},
      {"R15", [this](const State& s) { return r15(s); }},
  };
  std::vector<std::string> order = opts_.rule_order.empty() ? betti_rule_ids() : opts_.rule_order;
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    auto ids = betti_rule_ids();
    std::sort(ids.begin(), ids.end());
    if (sorted != ids) throw Error(ErrorCode::ValidationError, "rule order must be a permutation of R1..R15");
  }
  std::map<std::string, RuleOutput> cache;
  std::map<std::string, RuleOutput> last;
  State st(top_ + 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& id : order) {
      if (opts_.disabled.count(id)) continue;
      if (regime_ == Regime::Mixed && id != "R1" && id != "R3" && id != "R15") continue;
      RuleOutput out;
      if (id == "R15") {
        out = rules[id](st);
      } else {
        auto it = cache.find(id);
        if (it == cache.end()) it = cache.emplace(id, rules[id](st)).first;
        out = it->second;
      }
      if (!out.fired) continue;
      for (const auto& f : out.facts) merge(st, id, f, &changed);
      last[id] = out;
    }
  }

  BettiReport rep;
  rep.weight = q_;
  rep.weights = q_.to_string(sys_);
  rep.regime = regime_;
  rep.region = region_.membership;
  for (int k = 0; k <= top_; ++k) {
    BettiDegree d;
    d.k = k;
    const Entry& e = st[k];
    d.sources.assign(e.sources.begin(), e.sources.end());
    std::sort(d.sources.begin(), d.sources.end(), [](const std::string& a, const std::string& b) {
      return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
    });
    d.nonzero = !e.nonzero_by.empty();
    if (!e.value) {
      d.status = BettiStatus::Unknown;
    } else if (e.value->is_zero()) {
      d.status = BettiStatus::Zero;
    } else {
      d.value = *e.value;
      d.status = e.value->symbolic() ? BettiStatus::Symbolic : BettiStatus::Value;
    }
    rep.degrees.push_back(d);
  }
  for (const auto& id : betti_rule_ids()) {
    auto it = last.find(id);
    if (it == last.end()) continue;
    TrailEntry t;
    t.rule = id;
    t.hypotheses = it->second.hyps;
    static const std::map<std::string, std::string> citations{
        {"R1", "b_0 is nonzero exactly on the region of convergence, where all higher b_k vanish"},
        {"R2", "Euclidean reflection group: degree 0 for q <= 1, the top degree for q >= 1"},
        {"R3", "b_k = 0 above the virtual cohomological dimension"},
        {"R4", "vanishing of b_n at q = 1, n = vcd W, persists for q <= 1"},
        {"R5", "graph nerve spanning a GHS^n with Euclidean 2-cells: degree 2 for q >= 1"},
        {"R6", "graph nerve spanning a GHS^2 with Euclidean 2-cells: degree 0, 1 or 2 by region"},
        {"R7", "closed form for a recognized nerve family, degree 2 for q >= 1"},
        {"R8", "complete graph nerve with at most n-4 labels other than 3: degree 2 for q >= 1"},
        {"R9", "quasi-Lanner group of dimension n: b_k = 0 for k >= n-1 (q <= 1) and k <= 1 (q >= 1)"},
        {"R10", "2-spherical with controlled special subgroups: b_0 = b_1 = 0 for q >= 1"},
        {"R11", "disk nerve of dimension n-1: b_k = 0 for k >= n-1 and q <= 1"},
        {"R12", "planar graph nerve: b_k = 0 for k >= 2 and q <= 1"},
        {"R13", "one-skeleton of a cellulation of S^2: b_2 = 0 for q <= 1"},
        {"R14", "right-angled coning of a sphere cellulation: b_0 = b_1 = 0 for q >= 1"},
        {"R15", "the alternating sum of the b_k is the weighted Euler characteristic"},
    };
    t.citation = citations.at(id);
    std::string det;
    for (auto& d : rep.degrees)
      if (std::find(d.sources.begin(), d.sources.end(), id) != d.sources.end())
        det += (det.empty() ? "" : ", ") + bname(d.k) + " = " + (d.status == BettiStatus::Zero ? "0" : d.value.to_string());
    if (st[0].nonzero_by == id) det += std::string(det.empty() ? "" : ", ") + "b_0 != 0";
    t.determined = det;
    rep.trail.push_back(std::move(t));
  }
  return rep;
}

}  // namespace

const std::vector<std::string>& betti_rule_ids() {
  static const std::vector<std::string> ids{"R1", "R2", "R3",  "R4",  "R5",  "R6",  "R7", "R8",
                                            "R9", "R10", "R11", "R12", "R13", "R14", "R15"};
  return ids;
}

BettiReport deduce_betti(const CoxeterSystem& sys, const Weight& q, const Assertions& assertions,
                         const BettiOptions& opts) {
  if (q.is_symbolic() && q.symbolic().exponents.size() != sys.num_classes())
    throw Error(ErrorCode::UnsupportedWeightShape, "symbolic ray needs one exponent per class");
  if (!q.is_symbolic() && q.concrete().size() != sys.num_classes())
    throw Error(ErrorCode::UnsupportedWeightShape, "weight vector needs one value per class");
  Engine e(sys, q, assertions, opts);
  return e.run();
}

BettiReport apply_cone_rule(const BettiReport& report, const mpq_class& q_c) {
  if (!report.fully_determined()) throw Error(ErrorCode::InputNotDetermined, "cone rule needs a fully determined report");
  if (q_c <= 0) throw Error(ErrorCode::InvalidWeight, "cone weight must be positive");
  BettiReport out = report;
  Quantity factor(mpq_class(1 / (1 + q_c)));
  for (auto& d : out.degrees)
    if (d.status == BettiStatus::Value || d.status == BettiStatus::Symbolic) d.value = d.value * factor;
  // the cone has one more dimension, and nothing new in the top degree
  BettiDegree top;
  top.k = static_cast<int>(out.degrees.size());
  top.status = BettiStatus::Zero;
  top.sources = {"cone"};
  out.degrees.push_back(top);
  out.weights = report.weights + "; cone q_c=" + rational_to_string(q_c);
  TrailEntry t;
  t.rule = "cone";
  t.hypotheses.push_back({"input report fully determined", HypothesisState::Verified});
  t.hypotheses.push_back({"rule-extension: value scaling for general q", HypothesisState::Verified});
  t.citation = "Sigma of the cone is Sigma x [-1,1]; the rank-one factor has b_0 = 1/(1+q_c)";
  t.determined = "every value scaled by " + factor.to_string();
  out.trail.push_back(t);
  return out;
}

ConsistencyResult consistency_check(const BettiReport& report, const CoxeterSystem& sys) {
  ConsistencyResult r;
  if (report.weight.is_symbolic())
    r.chi = Quantity(inverse_growth_series(sys).substitute_monomials(
        [&] {
          std::vector<Exponents> images;
          for (auto k : report.weight.symbolic().exponents) images.push_back(Exponents{k});
          return images;
        }(),
        1));
  else
    r.chi = Quantity(euler_characteristic_direct(sys, report.weight.concrete()));
  if (!report.fully_determined()) {
    r.detail = std::to_string(report.unknown_count()) + " degrees unknown";
    return r;
  }
  r.alternating_sum = report.alternating_sum();
  r.discrepancy = r.alternating_sum - r.chi;
  r.pass = r.discrepancy.is_zero();
  r.detail = r.pass ? "alternating sum equals chi = " + r.chi.to_string()
                    : "alternating sum " + r.alternating_sum.to_string() + " differs from chi " + r.chi.to_string() +
                          " by " + r.discrepancy.to_string();
  return r;
}

}  // namespace coxl2
