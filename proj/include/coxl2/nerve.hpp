#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxl2/complex.hpp"
#include "coxl2/coxeter_system.hpp"

namespace coxl2 {

struct SphericalPoset {
  std::vector<GenSet> elements;  // by size, then bits; contains the empty set
  bool contains(GenSet T) const;
};

SphericalPoset spherical_poset(const CoxeterSystem& sys);

/// Simplicial complex on S whose faces are the nonempty spherical subsets, with edge labels.
struct LabeledNerve {
  std::vector<std::string> vertices;
  std::vector<GenSet> faces;  // nonempty, by size then bits
  std::map<std::pair<int, int>, Label> edge_labels;

  int dimension() const;
  bool is_graph() const { return dimension() <= 1; }
  std::vector<std::pair<int, int>> edges() const;
  CellComplex complex() const;
  bool operator==(const LabeledNerve&) const = default;
};

LabeledNerve build_nerve(const CoxeterSystem& sys);

/// Join with a new vertex; new edges carry label 2.
LabeledNerve right_angled_cone(const LabeledNerve& nerve, const std::string& apex = "c");

/// Coxeter system whose labeled nerve is the given one (missing edges become infinity).
CoxeterSystem system_of_nerve(const LabeledNerve& nerve);

enum class HypothesisState { Verified, UserAsserted, Unknown, Failed };
std::string_view hypothesis_state_name(HypothesisState s);

struct VcdBounds {
  int lo = 0;
  int hi = 0;
  bool exact = false;
  HypothesisState state = HypothesisState::Verified;  // UserAsserted when an assertion fixed the value
  std::vector<std::string> notes;
};

/// vcd from the cohomology of full subcomplexes: max n with H^{n-1}(L_{S-T}) != 0 over
/// spherical T (reduced cohomology; H^{-1} of the empty complex is Z). Empty when the
/// nerve is too large to process.
std::optional<int> vcd_from_cohomology(const CoxeterSystem& sys);

/// Interval for vcd W. `asserted` pins the value; a conflict throws InconsistencyError.
VcdBounds vcd_bounds(const CoxeterSystem& sys, std::optional<int> asserted = std::nullopt);

/// True when the nerve graph is planar (the nerve must be at most 1-dimensional).
bool planar_nerve(const LabeledNerve& nerve);

}  // namespace coxl2
