#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxl2/betti.hpp"
#include "coxl2/coxeter_system.hpp"

namespace coxl2 {

/// Proper nonempty non-spherical subsets of S, by size then bits.
struct NonsphericalPoset {
  std::vector<GenSet> elements;
  bool contains(GenSet T) const;
};

NonsphericalPoset nonspherical_poset(const CoxeterSystem& sys);

/// Order complex of the poset: simplices are strict inclusion chains, stored as
/// increasing lists of element indices.
struct FlagComplex {
  std::vector<GenSet> vertices;
  std::vector<std::vector<int>> simplices;  // by dimension, then lexicographic

  int dimension() const;
  std::size_t count(int dim) const;
  CellComplex complex(const CoxeterSystem& sys) const;
};

FlagComplex flag_complex(const NonsphericalPoset& poset);

/// Boundary pieces U(W, C_T) grouped by |T|; two pieces meet iff one index set contains the other.
struct BoundaryDecomposition {
  struct Group {
    std::size_t cardinality = 0;
    std::vector<GenSet> pieces;
  };
  std::vector<Group> groups;  // by cardinality
  std::vector<std::pair<GenSet, GenSet>> meeting_pairs;  // strictly nested pairs
  nlohmann::json to_json(const CoxeterSystem& sys) const;
};

BoundaryDecomposition boundary_decomposition(const CoxeterSystem& sys);

struct E1Summand {
  std::vector<GenSet> chain;
  GenSet min;
  BettiStatus status = BettiStatus::Unknown;
  Quantity value;
  std::vector<std::string> sources;  // rules behind b_j of the summand
};

struct E1Entry {
  int i = 0;
  int j = 0;
  std::optional<Quantity> value;  // empty when some summand is unknown
  std::vector<E1Summand> summands;
};

struct E1Table {
  std::vector<E1Entry> entries;  // by i, then j
  const E1Entry* at(int i, int j) const;
  /// Entry value, with an absent entry (no chains) counting as zero.
  std::optional<Quantity> value(int i, int j) const;
  nlohmann::json to_json(const CoxeterSystem& sys) const;
};

/// E_1^{i,j} = sum over i-chains sigma of b_j(Sigma_{L_T}), T = min sigma, deduced over W_T.
E1Table e1_table(const CoxeterSystem& sys, const Weight& q);

enum class Verdict { Yes, Unknown };
std::string_view verdict_name(Verdict v);

/// Yes iff E_1^{0,1} and E_1^{1,0} are both determined to be zero.
Verdict boundary_b1_vanishes(const CoxeterSystem& sys, const Weight& q);

}  // namespace coxl2
