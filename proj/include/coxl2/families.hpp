#pragma once

#include <utility>
#include <vector>

#include "coxl2/coxeter_system.hpp"

namespace coxl2::families {

CoxeterSystem dihedral(unsigned m);  // I2(m), generators s,t
CoxeterSystem infinite_dihedral();    // labels inf
CoxeterSystem triangle(unsigned a, unsigned b, unsigned c);  // m(s,t)=a, m(t,u)=b, m(s,u)=c
/// Linear diagram with the given consecutive labels; other pairs commute.
CoxeterSystem path(const std::vector<unsigned>& labels);
/// Complete graph nerve on n vertices, every label m.
CoxeterSystem complete(unsigned n, unsigned m);
/// K_n(3) with the listed edges set to inf.
CoxeterSystem complete_minus(unsigned n, const std::vector<std::pair<int, int>>& removed);
/// 1-skeleton of the n-cube, edges labeled m, nonedges inf.
CoxeterSystem cube_skeleton(unsigned n, unsigned m = 2);
/// 1-skeleton of the n-dimensional cross polytope, edges labeled m.
CoxeterSystem octahedron_skeleton(unsigned n, unsigned m = 3);
/// Right-angled system on the n-cycle.
CoxeterSystem right_angled_cycle(unsigned n);
/// Two triangles a,b,c and d,e,f joined by the edge c-d; all other pairs 2.
CoxeterSystem two_triangles(unsigned q, unsigned r, unsigned s, unsigned m, unsigned t, unsigned u, unsigned v);
/// Adds one generator commuting with everything.
CoxeterSystem cone(const CoxeterSystem& sys, const std::string& apex = "c");

}  // namespace coxl2::families
