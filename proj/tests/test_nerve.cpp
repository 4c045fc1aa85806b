#include <catch_amalgamated.hpp>

#include <random>

#include "coxl2/classifier.hpp"
#include "coxl2/families.hpp"
#include "coxl2/nerve.hpp"

using namespace coxl2;

namespace {

using Simplices = std::vector<std::vector<int>>;

Simplices boundary_of_simplex(int n) {  // facets of the n-simplex on 0..n
  Simplices out;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    out.push_back(f);
  }
  return out;
}

Simplices octahedron_boundary() {
  Simplices out;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) out.push_back({a, b, c});
  return out;
}

Simplices rp2() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
}

// Independent oracle: Betti numbers over F_p from the face lists, with its own orientation.
std::vector<long> mod_p_betti(const Simplices& facets, long p) {
  std::set<std::vector<int>> all;
  for (auto s : facets) {
    std::sort(s.begin(), s.end());
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<int> f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask >> i & 1u) f.push_back(s[i]);
      all.insert(f);
    }
  }
  std::size_t dim = 0;
  for (auto& f : all) dim = std::max(dim, f.size() - 1);
  std::vector<std::vector<std::vector<int>>> by(dim + 1);
  for (auto& f : all) by[f.size() - 1].push_back(f);
  auto rank_of = [&](std::size_t k) -> long {  // d_k : C_k -> C_{k-1}
    if (k == 0 || k > dim) return 0;
    std::vector<std::vector<long>> m(by[k - 1].size(), std::vector<long>(by[k].size(), 0));
    for (std::size_t j = 0; j < by[k].size(); ++j)
      for (std::size_t r = 0; r < by[k][j].size(); ++r) {
        auto g = by[k][j];
        g.erase(g.begin() + static_cast<long>(r));
        auto it = std::find(by[k - 1].begin(), by[k - 1].end(), g);
        m[it - by[k - 1].begin()][j] = (r % 2 ? p - 1 : 1);
      }
    long rank = 0;
    std::size_t rows = m.size(), cols = by[k].size();
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
      std::size_t piv = rows;
      for (std::size_t r = rank; r < rows; ++r)
        if (m[r][c] % p) {
          piv = r;
          break;
        }
      if (piv == rows) continue;
      std::swap(m[piv], m[rank]);
      long inv = 1;
      for (long t = 1; t < p; ++t)
        if (m[rank][c] * t % p == 1) inv = t;
      for (std::size_t r = 0; r < rows; ++r)
        if (r != static_cast<std::size_t>(rank) && m[r][c] % p) {
          long f = m[r][c] * inv % p;
          for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] = ((m[r][cc] - f * m[rank][cc]) % p + p) % p;
        }
      ++rank;
    }
    return rank;
  };
  std::vector<long> b;
  for (std::size_t k = 0; k <= dim; ++k)
    b.push_back(static_cast<long>(by[k].size()) - rank_of(k) - rank_of(k + 1));
  return b;
}

CellComplex cube_boundary_cw() {
  // 8 vertices (bit patterns), 12 edges, 6 square faces
  nlohmann::json cells = nlohmann::json::array();
  auto vid = [](int v) { return "v" + std::to_string(v); };
  for (int v = 0; v < 8; ++v) cells.push_back({{"id", vid(v)}, {"dim", 0}});
  std::map<std::pair<int, int>, std::string> edge;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (!(v >> b & 1)) {
        std::string id = "e" + std::to_string(v) + "_" + std::to_string(v | 1 << b);
        edge[{v, v | 1 << b}] = id;
        cells.push_back({{"id", id}, {"dim", 1}, {"facets", {vid(v), vid(v | 1 << b)}}});
      }
  for (int axis = 0; axis < 3; ++axis)
    for (int side = 0; side < 2; ++side) {
      std::vector<std::string> f;
      for (auto& [e, id] : edge)
        if ((e.first >> axis & 1) == side && (e.second >> axis & 1) == side) f.push_back(id);
      cells.push_back({{"id", "f" + std::to_string(axis) + std::to_string(side)}, {"dim", 2}, {"facets", f}});
    }
  return CellComplex::from_json({{"cells", cells}});
}

}  // namespace

TEST_CASE("homology fixtures") {
  auto s2 = homology(CellComplex::from_simplices(boundary_of_simplex(3)));
  CHECK(s2.is_sphere(2));
  CHECK(s2.to_string() == "H0=Z, H1=0, H2=Z");
  auto oct = homology(CellComplex::from_simplices(octahedron_boundary()));
  CHECK(oct.is_sphere(2));
  auto pt = homology(CellComplex::from_simplices({{0}}));
  CHECK(pt.groups.size() == 1);
  CHECK(pt.groups[0].rank == 1);
  auto rp = homology(CellComplex::from_simplices(rp2()));
  REQUIRE(rp.groups.size() == 3);
  CHECK(rp.groups[0].rank == 1);
  CHECK(rp.groups[1].rank == 0);
  CHECK(rp.groups[1].torsion == std::vector<mpz_class>{2});
  CHECK(rp.groups[2].rank == 0);
  CHECK(rp.groups[2].torsion.empty());
  // the torsion shows up as a mod 2 class in degrees 1 and 2, and not mod 3
  CHECK(mod_p_betti(rp2(), 2) == std::vector<long>{1, 1, 1});
  CHECK(mod_p_betti(rp2(), 3) == std::vector<long>{1, 0, 0});
  CHECK(homology(CellComplex()).empty());
}

TEST_CASE("integral ranks match mod-3 Betti numbers on random complexes") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Simplices s;
    int nv = 4 + rng() % 4;
    for (int k = 0; k < 8; ++k) {
      std::vector<int> f;
      int size = 1 + rng() % 4;
      while (static_cast<int>(f.size()) < size) {
        int v = rng() % nv;
        if (std::find(f.begin(), f.end(), v) == f.end()) f.push_back(v);
      }
      s.push_back(f);
    }
    auto c = CellComplex::from_simplices(s);
    auto h = homology(c);
    auto b3 = mod_p_betti(s, 3);
    REQUIRE(h.groups.size() == b3.size());
    for (std::size_t k = 0; k < b3.size(); ++k) {
      // over F_3, b_k = rank + (#torsion factors divisible by 3 in H_k and H_{k-1})
      long extra = 0;
      for (auto& t : h.groups[k].torsion) extra += (t % 3 == 0);
      if (k) for (auto& t : h.groups[k - 1].torsion) extra += (t % 3 == 0);
      CHECK(static_cast<long>(h.groups[k].rank) + extra == b3[k]);
    }
    // Euler characteristic equals the alternating face count
    long chi = 0;
    auto f = c.f_vector();
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(f[k]);
    CHECK(h.euler_characteristic() == chi);
  }
}

TEST_CASE("smith invariants") {
  std::vector<std::vector<mpz_class>> m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(smith_invariants(m) == std::vector<mpz_class>{2, 6, 12});
  CHECK(smith_invariants({{0, 0}, {0, 0}}).empty());
}

TEST_CASE("ghs_check") {
  for (int n = 1; n <= 6; ++n) {
    INFO(n);
    CHECK(ghs_check(CellComplex::from_simplices(boundary_of_simplex(n)), n - 1).verified);
  }
  CHECK(ghs_check(CellComplex::from_simplices(octahedron_boundary()), 2).verified);
  auto disk = ghs_check(CellComplex::from_simplices({{0, 1, 2}}), 2);
  CHECK_FALSE(disk.verified);
  CHECK(disk.reason.find("global homology") != std::string::npos);
  CHECK_FALSE(ghs_check(CellComplex::from_simplices(rp2()), 2).verified);
  // two tetrahedron boundaries sharing a vertex: homology is not S^2
  auto wedge = boundary_of_simplex(3);
  for (auto f : boundary_of_simplex(3)) {
    for (auto& v : f) v = v ? v + 3 : 0;
    wedge.push_back(f);
  }
  CHECK_FALSE(ghs_check(CellComplex::from_simplices(wedge), 2).verified);
  CHECK(ghs_check(cube_boundary_cw(), 2).verified);
}

TEST_CASE("disk_check") {
  CHECK(disk_check(CellComplex::from_simplices({{0, 1, 2}}), 2).verified);
  CHECK(disk_check(CellComplex::from_simplices({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}), 2).verified);
  CHECK(disk_check(CellComplex::from_simplices({{0, 1}, {1, 2}}), 1).verified);
  CHECK_FALSE(disk_check(CellComplex::from_simplices({{0, 1}, {1, 2}, {1, 3}}), 1).verified);
  CHECK_FALSE(disk_check(CellComplex::from_simplices(octahedron_boundary()), 2).verified);
  CHECK_FALSE(disk_check(CellComplex::from_simplices({{0, 1, 2}, {0, 3}}), 2).verified);
}

TEST_CASE("cell complexes from JSON") {
  auto cube = cube_boundary_cw();
  CHECK(cube.f_vector() == std::vector<std::size_t>{8, 12, 6});
  CHECK(homology(cube).is_sphere(2));
  auto again = CellComplex::from_json(cube.to_json());
  CHECK(again.to_json() == cube.to_json());
  CHECK(homology(CellComplex::from_simplices(rp2())).groups == homology(CellComplex::from_json(
      CellComplex::from_simplices(rp2()).to_json())).groups);
  auto bad = [](nlohmann::json cells) {
    try {
      CellComplex::from_json({{"cells", cells}});
    } catch (const Error& e) {
      return e.code() == ErrorCode::InvalidComplex;
    }
    return false;
  };
  using J = nlohmann::json;
  CHECK(bad(J::array({J{{"id", "a"}, {"dim", 0}}, J{{"id", "e"}, {"dim", 1}, {"facets", {"a"}}}})));
  CHECK(bad(J::array({J{{"id", "a"}, {"dim", 0}}, J{{"id", "a"}, {"dim", 0}}})));
  CHECK(bad(J::array({J{{"id", "a"}, {"dim", 0}}, J{{"id", "f"}, {"dim", 2}, {"facets", {"a"}}}})));
  // a 2-cell bounded by a path, not a circle
  CHECK(bad(J::array({J{{"id", "a"}, {"dim", 0}}, J{{"id", "b"}, {"dim", 0}}, J{{"id", "c"}, {"dim", 0}},
                      J{{"id", "ab"}, {"dim", 1}, {"facets", {"a", "b"}}},
                      J{{"id", "bc"}, {"dim", 1}, {"facets", {"b", "c"}}},
                      J{{"id", "f"}, {"dim", 2}, {"facets", {"ab", "bc"}}}})));
}

TEST_CASE("spherical poset") {
  CHECK(spherical_poset(families::infinite_dihedral()).elements.size() == 3);
  CHECK(spherical_poset(families::dihedral(3)).elements.size() == 4);
  auto k4 = spherical_poset(families::complete(4, 3));
  CHECK(k4.elements.size() == 11);
  CHECK(k4.contains(GenSet()));
  std::mt19937 rng(2);
  const unsigned labels[] = {0, 2, 3, 3, 4, 5, 6};
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + rng() % 3;
    CoxeterMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        unsigned l = labels[rng() % std::size(labels)];
        m.set(i, j, l ? Label(l) : Label::infinity());
      }
    auto sys = build_system(m);
    auto P = spherical_poset(sys);
    for (auto T : P.elements)
      for (int s : T.members()) CHECK(P.contains(T.without(s)));
  }
}

TEST_CASE("labeled nerves") {
  auto k4 = build_nerve(families::complete(4, 3));
  CHECK(k4.dimension() == 1);
  CHECK(k4.edge_labels.size() == 6);
  for (auto& [e, l] : k4.edge_labels) CHECK(l == Label(3));
  auto a3 = build_nerve(families::path({3, 3}));
  CHECK(a3.dimension() == 2);
  CHECK(a3.faces.size() == 7);
  auto c5 = build_nerve(families::right_angled_cycle(5));
  CHECK(c5.is_graph());
  CHECK(c5.edges().size() == 5);
  CHECK(homology(c5.complex()).to_string() == "H0=Z, H1=Z");
}

TEST_CASE("right-angled cones") {
  auto two_points = build_nerve(families::infinite_dihedral());
  auto path = right_angled_cone(two_points);
  CHECK(path.vertices.size() == 3);
  CHECK(path.edge_labels.size() == 2);
  for (auto& [e, l] : path.edge_labels) CHECK(l == Label(2));
  CHECK(path.dimension() == 1);
  auto wheel = right_angled_cone(build_nerve(families::complete(4, 3)));
  CHECK(wheel.edge_labels.size() == 10);
  CHECK(wheel.faces.size() == 4 + 6 + 1 + 4 + 6);
  auto single = right_angled_cone(LabeledNerve{});
  CHECK(single.vertices == std::vector<std::string>{"c"});
  CHECK(single.faces.size() == 1);
  // nerve of the coned system equals the cone of the nerve
  for (auto& sys : {families::complete(4, 3), families::triangle(2, 3, 7), families::path({3, 3}),
                    families::cube_skeleton(3), families::two_triangles(3, 3, 3, 2, 3, 3, 3)}) {
    CHECK(build_nerve(families::cone(sys, "apex")) == right_angled_cone(build_nerve(sys), "apex"));
    CHECK(build_nerve(system_of_nerve(build_nerve(sys))) == build_nerve(sys));
  }
}

TEST_CASE("planarity and connectivity") {
  std::vector<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(is_planar_graph(4, k4));
  CHECK(is_three_connected(4, k4));
  std::vector<std::pair<int, int>> k5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
  CHECK_FALSE(is_planar_graph(5, k5));
  std::vector<std::pair<int, int>> k33;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.emplace_back(i, j);
  CHECK_FALSE(is_planar_graph(6, k33));
  CHECK_FALSE(is_three_connected(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  CHECK(planar_nerve(build_nerve(families::complete(4, 3))));
  CHECK_FALSE(planar_nerve(build_nerve(families::complete(5, 3))));
}

TEST_CASE("vcd bounds") {
  auto fin = vcd_bounds(families::path({5, 3}));
  CHECK((fin.lo == 0 && fin.hi == 0 && fin.exact));
  auto k4 = vcd_bounds(families::complete(4, 3));
  CHECK((k4.lo == 2 && k4.hi == 2 && k4.exact));
  auto k5 = vcd_bounds(families::complete(5, 3));
  CHECK((k5.lo == 2 && k5.hi == 2 && k5.exact));
  CHECK(vcd_bounds(families::infinite_dihedral()).hi == 1);
  CHECK(vcd_bounds(families::triangle(2, 3, 7)).lo == 2);
  CHECK(vcd_bounds(families::cube_skeleton(3)).hi == 2);
  CHECK(vcd_bounds(families::right_angled_cycle(5)).lo == 2);
  CHECK(vcd_from_cohomology(families::octahedron_skeleton(3)) == 2);
  // a compact hyperbolic simplex group in dimension 4: nerve is the boundary of a 4-simplex
  CHECK(vcd_from_cohomology(families::path({5, 3, 3, 3})) == 4);
  // free product of two finite groups
  CoxeterMatrix m(4, Label::infinity());
  m.set(0, 1, Label(3));
  m.set(2, 3, Label(4));
  CHECK(vcd_from_cohomology(build_system(m)) == 1);
  // an assertion inside the interval is accepted; outside is an inconsistency
  CHECK(vcd_bounds(families::complete(4, 3), 2).exact);
  CHECK_THROWS_AS(vcd_bounds(families::complete(4, 3), 3), Error);
}

TEST_CASE("vcd from cohomology lies in the structural interval on random systems") {
  std::mt19937 rng(23);
  const unsigned labels[] = {0, 2, 2, 3, 3, 4, 6};
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + rng() % 4;
    CoxeterMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        unsigned l = labels[rng() % std::size(labels)];
        m.set(i, j, l ? Label(l) : Label::infinity());
      }
    auto sys = build_system(m);
    INFO(sys.matrix_key());
    auto b = vcd_bounds(sys);  // throws if the two disagree
    CHECK(b.exact);
    CHECK(b.hi <= build_nerve(sys).dimension() + 1);
  }
}

TEST_CASE("planar face cycles") {
  std::vector<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  auto f = planar_faces(4, k4);
  REQUIRE(f);
  CHECK(f->size() == 4);
  for (auto& c : *f) CHECK(c.size() == 3);
  auto cube = build_nerve(families::cube_skeleton(3)).edges();
  auto cf = planar_faces(8, cube);
  REQUIRE(cf);
  CHECK(cf->size() == 6);
  for (auto& c : *cf) CHECK(c.size() == 4);
  CHECK_FALSE(planar_faces(5, build_nerve(families::complete(5, 3)).edges()));
  // Euler: V - E + F = 2 for a connected plane graph
  auto wheel = build_nerve(system_of_nerve(right_angled_cone(build_nerve(families::right_angled_cycle(5)), "hub"))).edges();
  auto wf = planar_faces(6, wheel);
  REQUIRE(wf);
  CHECK(6 - static_cast<long>(wheel.size()) + static_cast<long>(wf->size()) == 2);
}
