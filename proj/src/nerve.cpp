#include "coxl2/nerve.hpp"

#include <algorithm>

#include "coxl2/classifier.hpp"
#include "coxl2/error.hpp"
#include "coxl2/growth.hpp"

namespace coxl2 {

bool SphericalPoset::contains(GenSet T) const {
  return std::find(elements.begin(), elements.end(), T) != elements.end();
}

SphericalPoset spherical_poset(const CoxeterSystem& sys) { return SphericalPoset{spherical_subsets(sys)}; }

int LabeledNerve::dimension() const {
  int d = -1;
  for (auto f : faces) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<std::pair<int, int>> LabeledNerve::edges() const {
  std::vector<std::pair<int, int>> out;
  for (auto& [e, l] : edge_labels) out.push_back(e);
  return out;
}

CellComplex LabeledNerve::complex() const {
  std::vector<std::vector<int>> simplices;
  for (auto f : faces) simplices.push_back(f.members());
  return CellComplex::from_simplices(simplices, vertices);
}

LabeledNerve build_nerve(const CoxeterSystem& sys) {
  LabeledNerve L;
  L.vertices = sys.names();
  for (GenSet T : spherical_subsets(sys)) {
    if (T.size() == 0) continue;
    L.faces.push_back(T);
    if (T.size() == 2) {
      auto m = T.members();
      L.edge_labels[{m[0], m[1]}] = sys.label(m[0], m[1]);
    }
  }
  return L;
}

namespace {
void sort_faces(std::vector<GenSet>& faces) {
  std::sort(faces.begin(), faces.end(), [](GenSet a, GenSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
}
}  // namespace

LabeledNerve right_angled_cone(const LabeledNerve& nerve, const std::string& apex) {
  if (std::find(nerve.vertices.begin(), nerve.vertices.end(), apex) != nerve.vertices.end())
    throw Error(ErrorCode::ValidationError, "cone apex '" + apex + "' already names a vertex");
  LabeledNerve out = nerve;
  int c = static_cast<int>(nerve.vertices.size());
  out.vertices.push_back(apex);
  out.faces.push_back(GenSet::single(c));
  for (auto f : nerve.faces) out.faces.push_back(f.with(c));
  for (std::size_t v = 0; v < nerve.vertices.size(); ++v) out.edge_labels[{static_cast<int>(v), c}] = Label(2);
  sort_faces(out.faces);
  return out;
}

CoxeterSystem system_of_nerve(const LabeledNerve& nerve) {
  CoxeterMatrix m(nerve.vertices.size(), Label::infinity());
  for (auto& [e, l] : nerve.edge_labels) m.set(e.first, e.second, l);
  return CoxeterSystem(m, nerve.vertices);
}

std::string_view hypothesis_state_name(HypothesisState s) {
  switch (s) {
    case HypothesisState::Verified: return "verified";
    case HypothesisState::UserAsserted: return "user-asserted";
    case HypothesisState::Unknown: return "unknown";
    case HypothesisState::Failed: return "failed";
  }
  return "?";
}

bool planar_nerve(const LabeledNerve& nerve) {
  return nerve.is_graph() && is_planar_graph(nerve.vertices.size(), nerve.edges());
}

namespace {

// Nonzero reduced cohomology in degree k, from integral homology (universal coefficients).
bool reduced_cohomology_nonzero(const HomologyProfile& h, int k) {
  if (k == -1) return h.empty();
  if (k < -1) return false;
  if (!h.reduced_zero(k) && k < static_cast<int>(h.groups.size())) {
    std::size_t free = h.groups[k].rank - (k == 0 ? 1 : 0);
    if (free > 0) return true;
  }
  return k >= 1 && k - 1 < static_cast<int>(h.groups.size()) && !h.groups[k - 1].torsion.empty();
}

constexpr std::size_t kMaxCohomologySubsets = 4096;

}  // namespace

std::optional<int> vcd_from_cohomology(const CoxeterSystem& sys) {
  if (is_finite(sys)) return 0;
  auto sph = spherical_subsets(sys);
  if (sph.size() > kMaxCohomologySubsets || sys.rank() > 20) return std::nullopt;
  auto nerve = build_nerve(sys);
  int best = 0;
  for (GenSet T : sph) {
    GenSet rest = sys.all() - T;
    std::vector<std::vector<int>> simplices;
    std::vector<std::string> names;
    std::vector<int> local(sys.rank(), -1);
    for (int v : rest.members()) {
      local[v] = static_cast<int>(names.size());
      names.push_back(sys.name(v));
    }
    for (auto f : nerve.faces)
      if (f.subset_of(rest)) {
        std::vector<int> s;
        for (int v : f.members()) s.push_back(local[v]);
        simplices.push_back(s);
      }
    auto h = homology(CellComplex::from_simplices(simplices, names));
    for (int k = static_cast<int>(h.groups.size()); k >= -1; --k)
      if (reduced_cohomology_nonzero(h, k)) {
        best = std::max(best, k + 1);
        break;
      }
  }
  return best;
}

VcdBounds vcd_bounds(const CoxeterSystem& sys, std::optional<int> asserted) {
  VcdBounds b;
  if (is_finite(sys)) {
    b.lo = b.hi = 0;
    b.exact = true;
    b.notes.push_back("finite group");
  } else {
    auto nerve = build_nerve(sys);
    b.hi = nerve.dimension() + 1;
    b.notes.push_back("dim nerve + 1 = " + std::to_string(b.hi));
    if (planar_nerve(nerve) && b.hi > 2) {
      b.hi = 2;
      b.notes.push_back("planar graph nerve");
    }
    if (nerve.dimension() >= 1 && b.hi > nerve.dimension() && disk_check(nerve.complex(), nerve.dimension()).verified) {
      b.hi = nerve.dimension();
      b.notes.push_back("nerve is a homology " + std::to_string(nerve.dimension()) + "-disk");
    }
    // lower bound from special subgroups with known vcd
    b.lo = 1;
    if (sys.rank() <= 16) {
      for (std::uint64_t bits = 1; bits <= sys.all().bits(); ++bits) {
        GenSet T(bits);
        if (is_spherical(sys, T)) continue;
        int v = 1;
        if (auto d = euclidean_dimension(sys, T)) {
          v = *d;
        } else {
          auto comps = irreducible_components(sys, T);
          if (comps.size() == 1) {
            auto tag = classify_component(restrict(sys, T));
            if (tag.kind == TypeKind::QuasiLanner) v = tag.n - 1;
            if (tag.kind == TypeKind::Lanner) v = tag.n;
          }
        }
        b.lo = std::max(b.lo, v);
      }
      b.notes.push_back("special subgroups give vcd >= " + std::to_string(b.lo));
    }
    auto comps = classify_system(sys);
    if (comps.size() == 1 && comps[0].second.kind == TypeKind::QuasiLanner) {
      b.lo = b.hi = comps[0].second.n - 1;
      b.notes.push_back("quasi-Lanner of dimension " + std::to_string(comps[0].second.n));
    }
    if (auto v = vcd_from_cohomology(sys)) {
      if (*v < b.lo || *v > b.hi)
        throw Error(ErrorCode::Inconsistency, "cohomological vcd " + std::to_string(*v) + " outside [" +
                                                  std::to_string(b.lo) + "," + std::to_string(b.hi) + "]");
      b.lo = b.hi = *v;
      b.notes.push_back("cohomology of full subcomplexes gives " + std::to_string(*v));
    }
    b.exact = b.lo == b.hi;
  }
  if (asserted) {
    if (*asserted < b.lo || *asserted > b.hi)
      throw Error(ErrorCode::Inconsistency, "asserted vcd " + std::to_string(*asserted) + " outside [" +
                                                std::to_string(b.lo) + "," + std::to_string(b.hi) + "]");
    if (!b.exact) {
      b.lo = b.hi = *asserted;
      b.exact = true;
      b.state = HypothesisState::UserAsserted;
      b.notes.push_back("asserted vcd = " + std::to_string(*asserted));
    }
  }
  return b;
}

}  // namespace coxl2
