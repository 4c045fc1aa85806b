// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 when any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "coxl2/betti.hpp"
#include "coxl2/boundary.hpp"
#include "coxl2/classifier.hpp"
#include "coxl2/davis.hpp"
#include "coxl2/diagram.hpp"
#include "coxl2/families.hpp"
#include "coxl2/growth.hpp"
#include "coxl2/nerve.hpp"

using namespace coxl2;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<std::pair<std::string, CoxeterSystem>> corpus() {
  std::vector<fs::path> files;
  for (auto& e : fs::directory_iterator(COXL2_CORPUS_DIR))
    if (e.path().extension() == ".cox") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, CoxeterSystem>> out;
  for (auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    out.emplace_back(f.filename().string(), parse_diagram(ss.str()).system());
  }
  return out;
}

Weight uniform(const CoxeterSystem& sys, const mpq_class& q) { return Weight(WeightVector::uniform(sys, q)); }

mpq_class inverse_growth_at(const CoxeterSystem& sys, const mpq_class& q) {
  auto w = growth_series(sys);
  std::vector<mpq_class> x(w.nvars(), q);
  return 1 / w.evaluate(x);
}

// Zero for Zero entries; Unknown fails.
std::vector<mpq_class> values(const BettiReport& r) {
  std::vector<mpq_class> out;
  for (auto& d : r.degrees) {
    expect(d.status == BettiStatus::Zero || d.status == BettiStatus::Value,
           "degree " + std::to_string(d.k) + " is " + std::string(betti_status_name(d.status)));
    out.push_back(d.status == BettiStatus::Zero ? mpq_class(0) : d.value.value());
  }
  return out;
}

std::string show(const std::vector<mpq_class>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rational_to_string(v[i]);
  return s + ")";
}

Quantity ray_variable() { return Quantity(RationalFn::from_poly(MultiPoly::variable(1, 0))); }

std::string check_growth_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  const std::size_t L = 12;
  std::vector<std::pair<std::string, CoxeterSystem>> cases{
      {"D_inf", families::infinite_dihedral()}, {"(3,3,3)", families::triangle(3, 3, 3)},
      {"(2,4,4)", families::triangle(2, 4, 4)}, {"K4(3)", families::complete(4, 3)},
      {"K5(3)", families::complete(5, 3)},      {"I2(5)", families::dihedral(5)},
      {"C3(2)", families::cube_skeleton(3)}};
  for (auto& [name, sys] : cases) {
    BallOptions opts;
    opts.method = BallMethod::Automaton;
    opts.cap = std::size_t(1) << 40;
    auto counts = enumerate_ball(sys, L, opts).counts;
    auto coeffs = taylor_coeffs(growth_series(sys), L);
    expect(counts.size() == L + 1, name + ": ball stopped early");
    for (std::size_t k = 0; k <= L; ++k)
      expect(coeffs[k] == mpq_class(static_cast<unsigned long>(counts[k])),
             name + ": coefficient " + std::to_string(k) + " is " + rational_to_string(coeffs[k]) + ", ball has " +
                 std::to_string(counts[k]));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  expect(secs < 60, "took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << "7 systems through degree 12 in " << std::fixed;
  s.precision(2);
  s << secs << " s";
  return s.str();
}

std::string check_finite_catalog() {
  for (unsigned m = 3; m <= 8; ++m) {
    auto p = probe_finiteness(families::dihedral(m), 100000);
    expect(p.finite && p.size == 2 * m, "I2(" + std::to_string(m) + ") has size " + std::to_string(p.size));
  }
  auto a3 = probe_finiteness(families::path({3, 3}), 100000);
  expect(a3.finite && a3.size == 24, "A3 has size " + std::to_string(a3.size));
  auto h3 = probe_finiteness(families::path({5, 3}), 100000);
  expect(h3.finite && h3.size == 120, "H3 has size " + std::to_string(h3.size));
  std::size_t n = 0;
  for (auto& [name, sys] : corpus()) {
    bool tags_finite = true;
    for (auto& [T, tag] : classify_system(sys)) tags_finite &= tag.kind == TypeKind::Finite;
    auto p = probe_finiteness(sys, 200000);
    expect(tags_finite == p.finite, name + ": classifier and probe disagree");
    if (p.finite) {
      // the order is the product of the component orders
      std::uint64_t prod = 1;
      for (auto& [T, tag] : classify_system(sys)) prod *= probe_finiteness(restrict(sys, T), 100000).size;
      expect(prod == p.size, name + ": component orders do not multiply to the group order");
    }
    ++n;
  }
  return "dihedral, A3, H3 orders exact; " + std::to_string(n) + " corpus systems agree";
}

std::string check_closed_form() {
  auto q = ray_variable();
  for (unsigned n = 3; n <= 6; ++n) {
    auto sys = families::complete(n, 3);
    Quantity chi(euler_characteristic(sys, SymbolicRay::uniform(sys, Regime::AtLeastOne)));
    expect(complete_three_formula(n, q) == chi, "K" + std::to_string(n) + "(3) closed form differs from chi");
    for (mpq_class x : {mpq_class(1), mpq_class(3, 2), mpq_class(2)})
      expect(complete_three_formula(n, Quantity(x)).value() == euler_characteristic(sys, WeightVector::uniform(sys, x)),
             "K" + std::to_string(n) + "(3) at " + rational_to_string(x));
  }
  auto k5 = families::complete(5, 3);
  auto r5 = values(deduce_betti(k5, uniform(k5, 1)));
  expect(r5 == std::vector<mpq_class>{0, 0, mpq_class(1, 6)}, "K5(3) at q=1 gives " + show(r5));
  auto k4 = families::complete(4, 3);
  auto r4 = values(deduce_betti(k4, uniform(k4, 1)));
  expect(r4 == std::vector<mpq_class>{0, 0, 0}, "K4(3) at q=1 gives " + show(r4));
  return "n=3..6 symbolic and at q=1,3/2,2; K5(3) b2(1)=1/6, K4(3) b2(1)=0";
}

std::string check_euclidean_regimes() {
  auto t = families::triangle(3, 3, 3);
  std::string detail;
  for (mpq_class q : {mpq_class(1, 4), mpq_class(1, 2), mpq_class(1), mpq_class(3, 2), mpq_class(2)}) {
    auto v = values(deduce_betti(t, uniform(t, q)));
    std::vector<mpq_class> want(3, 0);
    if (q < 1) want[0] = inverse_growth_at(t, q);
    if (q > 1) want[2] = inverse_growth_at(t, q);
    expect(v == want, "q=" + rational_to_string(q) + " gives " + show(v) + ", expected " + show(want));
    detail += (detail.empty() ? "" : " ") + rational_to_string(q) + ":" + show(v);
  }
  auto half = values(deduce_betti(t, uniform(t, mpq_class(1, 2))));
  expect(half[0] == mpq_class(1, 7), "b0(1/2) is " + rational_to_string(half[0]));
  auto r32 = values(deduce_betti(t, uniform(t, mpq_class(3, 2))));
  expect(r32[2] == mpq_class(1, 19), "b2(3/2) is " + rational_to_string(r32[2]));
  return detail;
}

std::string check_quasi_lanner() {
  auto k4 = families::complete(4, 3);
  auto tag = classify_component(k4);
  expect(tag.to_string() == "QuasiLanner(3)", "K4(3) classified as " + tag.to_string());
  auto v = vcd_bounds(k4);
  expect(v.lo == 2 && v.hi == 2, "vcd bounds [" + std::to_string(v.lo) + "," + std::to_string(v.hi) + "]");
  auto one = deduce_betti(k4, uniform(k4, 1));
  expect(values(one) == std::vector<mpq_class>{0, 0, 0}, "q=1 not all zero");
  expect(consistency_check(one, k4).pass, "q=1 consistency");
  std::string detail = "QL(3), vcd [2,2], q=1 zero;";
  for (mpq_class q : {mpq_class(1, 2), mpq_class(2)}) {
    auto r = deduce_betti(k4, uniform(k4, q));
    auto vals = values(r);
    mpq_class chi = euler_characteristic_direct(k4, WeightVector::uniform(k4, q));
    mpq_class nonzero = 0;
    int count = 0;
    for (auto& x : vals)
      if (x != 0) nonzero = x, ++count;
    expect(count <= 1 && nonzero == abs(chi), "q=" + rational_to_string(q) + " gives " + show(vals));
    expect(consistency_check(r, k4).pass, "q=" + rational_to_string(q) + " consistency");
    detail += " q=" + rational_to_string(q) + " " + show(vals);
  }
  return detail;
}

std::string check_fat_boundary() {
  auto k5 = families::complete(5, 3);
  auto np = nonspherical_poset(k5);
  std::size_t triples = 0, quads = 0;
  for (auto T : np.elements) triples += T.size() == 3, quads += T.size() == 4;
  expect(np.elements.size() == 15 && triples == 10 && quads == 5, "K5(3) poset has " + std::to_string(np.elements.size()));
  auto flag = flag_complex(np);
  expect(flag.count(0) == 15 && flag.count(1) == 20 && flag.dimension() == 1,
         "K5(3) flag complex has " + std::to_string(flag.count(0)) + " vertices, " + std::to_string(flag.count(1)) +
             " edges");
  auto k4 = families::complete(4, 3);
  auto f4 = flag_complex(nonspherical_poset(k4));
  expect(f4.count(0) == 4 && f4.dimension() == 0, "K4(3) flag complex is not 4 isolated vertices");
  auto e1 = e1_table(k4, uniform(k4, mpq_class(3, 2)));
  auto v01 = e1.value(0, 1), v02 = e1.value(0, 2);
  expect(v01 && v01->value() == 0, "E1(0,1) not zero");
  expect(v02 && v02->value() == mpq_class(4, 19), "E1(0,2) is " + (v02 ? v02->to_string() : "unknown"));
  for (auto* sys : {&k4, &k5})
    expect(boundary_b1_vanishes(*sys, Weight(SymbolicRay::uniform(*sys, Regime::AtLeastOne))) == Verdict::Yes,
           "b1 of the boundary not shown to vanish");
  return "|N_P|=15, flag 15/20, K4 4 points, E1(0,1)=0, E1(0,2)=4/19, b1 vanishes";
}

std::string check_chain_identities() {
  std::mt19937 rng(20261016);
  std::size_t interior = 0, checks = 0;
  auto run = [&](const CoxeterSystem& sys, std::size_t L) {
    auto ball = coxeter_cell_ball(sys, L);
    for (int k = 0; k < 5; ++k) {
      std::vector<mpq_class> vals;
      for (std::size_t c = 0; c < sys.num_classes(); ++c) {
        mpq_class x(1 + rng() % 9, 1 + rng() % 9);
        x.canonicalize();
        vals.push_back(x);
      }
      auto r = verify_chain_identities(sys, ball, WeightVector::per_class(sys, vals));
      expect(r.interior_cells > 0 && r.conjugation_checks > 0 && r.adjoint_checks > 0, "no interior cells checked");
      // squaring needs a cell of dimension 2
      if (ball.dimension() >= 2) expect(r.square_zero_checks > 0, "square-zero never checked");
      interior += r.interior_cells;
      checks += r.square_zero_checks + r.conjugation_checks + r.adjoint_checks;
    }
  };
  run(families::dihedral(3), 3);
  run(families::complete(4, 3), 4);
  run(families::infinite_dihedral(), 4);
  return std::to_string(checks) + " identity checks on " + std::to_string(interior) + " interior cells";
}

std::string check_homology_fixtures() {
  using S = std::vector<std::vector<int>>;
  S tetra{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  S oct;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) oct.push_back({a, b, c});
  S rp2{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1}, {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  auto ht = homology(CellComplex::from_simplices(tetra));
  auto ho = homology(CellComplex::from_simplices(oct));
  expect(ht.is_sphere(2), "tetrahedron boundary: " + ht.to_string());
  expect(ho.is_sphere(2), "octahedron boundary: " + ho.to_string());
  auto hr = homology(CellComplex::from_simplices(rp2));
  expect(hr.groups.size() == 3 && hr.groups[0].rank == 1 && hr.groups[1].rank == 0 &&
             hr.groups[1].torsion == std::vector<mpz_class>{2} && hr.groups[2].rank == 0 && hr.groups[2].torsion.empty(),
         "projective plane: " + hr.to_string());
  expect(ghs_check(CellComplex::from_simplices(tetra), 2).verified, "tetrahedron boundary not GHS^2");
  expect(ghs_check(CellComplex::from_simplices(oct), 2).verified, "octahedron boundary not GHS^2");
  expect(!ghs_check(CellComplex::from_simplices({{0, 1, 2}}), 2).verified, "2-disk accepted as GHS^2");
  return "S^2 x2, RP^2 " + hr.to_string() + ", disk rejected";
}

CoxeterSystem relabel(const CoxeterSystem& sys, int s, int t, Label m) {
  CoxeterMatrix mat = sys.matrix();
  mat.set(s, t, m);
  return CoxeterSystem(mat, sys.names());
}

std::string check_soundness() {
  auto base = corpus();
  std::vector<CoxeterSystem> systems;
  for (auto& [name, sys] : base) systems.push_back(sys);
  std::mt19937 rng(7);
  std::vector<Label> labels{Label(2), Label(3), Label(4), Label(5), Label(6), Label::infinity()};
  std::size_t perturbed = 0;
  while (perturbed < 50) {
    auto& sys = base[rng() % base.size()].second;
    if (sys.rank() < 3 || sys.rank() > 5) continue;
    int s = rng() % sys.rank(), t = rng() % sys.rank();
    if (s == t) continue;
    systems.push_back(relabel(sys, s, t, labels[rng() % labels.size()]));
    ++perturbed;
  }
  std::size_t reports = 0, determined = 0;
  for (auto& sys : systems) {
    std::vector<Weight> weights;
    for (mpq_class q : {mpq_class(1, 3), mpq_class(1, 2), mpq_class(1), mpq_class(3, 2), mpq_class(3)})
      weights.push_back(uniform(sys, q));
    weights.push_back(Weight(SymbolicRay::uniform(sys, Regime::AtLeastOne)));
    weights.push_back(Weight(SymbolicRay::uniform(sys, Regime::AtMostOne)));
    for (auto& w : weights) {
      std::string where = sys.matrix_key() + " at " + w.to_string(sys);
      BettiReport r;
      try {
        r = deduce_betti(sys, w);
      } catch (const Error& e) {
        throw Failure{where + ": " + e.what()};
      }
      auto ref = r.to_json().dump();
      for (int k = 0; k < 3; ++k) {
        BettiOptions opts;
        opts.rule_order = betti_rule_ids();
        std::shuffle(opts.rule_order.begin(), opts.rule_order.end(), rng);
        expect(deduce_betti(sys, w, {}, opts).to_json().dump() == ref, where + ": rule order changes the report");
      }
      for (auto& d : r.degrees) {
        if (d.status == BettiStatus::Value) expect(d.value.value() > 0, where + ": nonpositive value");
        if (d.status == BettiStatus::Symbolic)
          expect(nonnegative_on_regime(d.value.fn(), w.regime()), where + ": negative symbolic value");
      }
      if (r.fully_determined()) {
        ++determined;
        expect(consistency_check(r, sys).pass, where + ": alternating sum differs from chi");
      }
      ++reports;
    }
  }
  // cone identity W'(t) = W(t)(1 + t_c)
  for (std::size_t i = 0; i < 10; ++i) {
    auto& [name, sys] = base[i];
    auto coned = families::cone(sys, "apex");
    auto w = growth_series(sys), wc = growth_series(coned);
    std::size_t nv = wc.nvars();
    expect(nv == w.nvars() + 1, name + ": cone vertex not in its own class");
    auto classes = generator_classes(sys);
    std::vector<Exponents> images;
    for (std::size_t v = 0; v < w.nvars(); ++v) {
      Exponents e(nv, 0);
      e[coned.class_of(coned.index_of(sys.name(classes[v].members().front())))] = 1;
      images.push_back(e);
    }
    auto factor = RationalFn::from_poly(MultiPoly::constant(nv, 1) +
                                        MultiPoly::variable(nv, coned.class_of(coned.index_of("apex"))));
    expect(wc == w.substitute_monomials(images, nv) * factor, name + ": cone identity fails");
  }
  return std::to_string(systems.size()) + " systems, " + std::to_string(reports) + " reports (" +
         std::to_string(determined) + " determined), 0 inconsistencies; cone identity on 10";
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"growth series equals ball enumeration", check_growth_oracle},
      {"finite catalog and probe agree", check_finite_catalog},
      {"complete-graph closed form equals chi", check_closed_form},
      {"Euclidean triangle regimes", check_euclidean_regimes},
      {"quasi-Lanner K4(3)", check_quasi_lanner},
      {"fattened boundary combinatorics", check_fat_boundary},
      {"weighted chain identities", check_chain_identities},
      {"homology fixtures", check_homology_fixtures},
      {"engine soundness and cone identity", check_soundness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto& [name, check] = criteria[i];
    std::string verdict, detail;
    try {
      detail = check();
      verdict = "PASS";
    } catch (const Failure& f) {
      verdict = "FAIL", detail = f.what;
    } catch (const std::exception& e) {
      verdict = "FAIL", detail = std::string("error: ") + e.what();
    }
    failed += verdict == "FAIL";
    std::cout << verdict << " " << (i + 1) << " " << name << ": " << detail << std::endl;
  }
  return failed ? 1 : 0;
}
