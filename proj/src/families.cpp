#include "coxl2/families.hpp"

#include <bit>

namespace coxl2::families {

namespace {
Label lab(unsigned m) { return m == 0 ? Label::infinity() : Label(m); }
}  // namespace

CoxeterSystem dihedral(unsigned m) {
  CoxeterMatrix mat(2);
  mat.set(0, 1, lab(m));
  return CoxeterSystem(mat, {"s", "t"});
}

CoxeterSystem infinite_dihedral() { return dihedral(0); }

CoxeterSystem triangle(unsigned a, unsigned b, unsigned c) {
  CoxeterMatrix mat(3);
  mat.set(0, 1, lab(a));
  mat.set(1, 2, lab(b));
  mat.set(0, 2, lab(c));
  return CoxeterSystem(mat, {"s", "t", "u"});
}

CoxeterSystem path(const std::vector<unsigned>& labels) {
  CoxeterMatrix mat(labels.size() + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) mat.set(i, i + 1, lab(labels[i]));
  return CoxeterSystem(mat);
}

CoxeterSystem complete(unsigned n, unsigned m) { return CoxeterSystem(CoxeterMatrix(n, lab(m))); }

CoxeterSystem complete_minus(unsigned n, const std::vector<std::pair<int, int>>& removed) {
  CoxeterMatrix mat(n, Label(3));
  for (auto [a, b] : removed) mat.set(a, b, Label::infinity());
  return CoxeterSystem(mat);
}

CoxeterSystem cube_skeleton(unsigned n, unsigned m) {
  unsigned v = 1u << n;
  CoxeterMatrix mat(v, Label::infinity());
  for (unsigned a = 0; a < v; ++a)
    for (unsigned b = a + 1; b < v; ++b)
      if (std::popcount(a ^ b) == 1) mat.set(a, b, lab(m));
  return CoxeterSystem(mat);
}

CoxeterSystem octahedron_skeleton(unsigned n, unsigned m) {
  // Vertices 2i and 2i+1 are antipodal.
  CoxeterMatrix mat(2 * n, lab(m));
  for (unsigned i = 0; i < n; ++i) mat.set(2 * i, 2 * i + 1, Label::infinity());
  return CoxeterSystem(mat);
}

CoxeterSystem right_angled_cycle(unsigned n) {
  CoxeterMatrix mat(n, Label::infinity());
  for (unsigned i = 0; i < n; ++i) mat.set(i, (i + 1) % n, Label(2));
  return CoxeterSystem(mat);
}

CoxeterSystem two_triangles(unsigned q, unsigned r, unsigned s, unsigned m, unsigned t, unsigned u, unsigned v) {
  CoxeterMatrix mat(6);
  enum { a, b, c, d, e, f };
  mat.set(a, b, lab(q));
  mat.set(a, c, lab(r));
  mat.set(b, c, lab(s));
  mat.set(c, d, lab(m));
  mat.set(d, e, lab(t));
  mat.set(d, f, lab(u));
  mat.set(e, f, lab(v));
  return CoxeterSystem(mat, {"a", "b", "c", "d", "e", "f"});
}

CoxeterSystem cone(const CoxeterSystem& sys, const std::string& apex) {
  std::size_t n = sys.rank();
  CoxeterMatrix mat(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) mat.set(i, j, sys.label(i, j));
  auto names = sys.names();
  names.push_back(apex);
  return CoxeterSystem(mat, names);
}

}  // namespace coxl2::families
