#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxl2/coxeter_system.hpp"

namespace coxl2 {

enum class TypeKind { Finite, Affine, Lanner, QuasiLanner, OtherInfinite };

struct TypeTag {
  TypeKind kind = TypeKind::OtherInfinite;
  std::string name;  // catalog name for Finite/Affine
  int n = 0;         // hyperbolic dimension for Lanner/QuasiLanner

  std::string to_string() const;
  bool operator==(const TypeTag&) const = default;
};

std::string_view kind_name(TypeKind k);

struct CatalogEntry {
  std::string name;
  bool affine = false;
  CoxeterMatrix matrix;
};

/// Irreducible finite (or affine) diagrams with exactly `rank` nodes.
/// Rank 2 lists I2(3)..I2(8) only; other dihedral labels are matched directly.
const std::vector<CatalogEntry>& finite_catalog(std::size_t rank);
const std::vector<CatalogEntry>& affine_catalog(std::size_t rank);

inline constexpr int kCatalogVersion = 1;
inline constexpr std::size_t kCatalogMaxRank = 10;
/// Serialized catalogs in diagram text format, as shipped in data/catalog.txt.
std::string catalog_text(std::size_t max_rank = kCatalogMaxRank);

/// Labeled-graph isomorphism of two Coxeter matrices (labels 2 are non-edges).
bool diagrams_isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b);

/// Requires an irreducible system; throws NotIrreducible otherwise.
TypeTag classify_component(const CoxeterSystem& sys);

/// Tag of each irreducible component, in component order.
std::vector<std::pair<GenSet, TypeTag>> classify_system(const CoxeterSystem& sys);

bool is_spherical(const CoxeterSystem& sys, GenSet T);
inline bool is_finite(const CoxeterSystem& sys) { return is_spherical(sys, sys.all()); }

/// Triangle with 1/a + 1/b + 1/c = 1. Throws InfiniteLabel.
bool is_euclidean_cell(const CoxeterSystem& sys, GenSet T);

/// T restricts to a product of finite and affine groups with at least one affine factor.
/// Returns the dimension of the Euclidean space it acts on cocompactly.
std::optional<int> euclidean_dimension(const CoxeterSystem& sys, GenSet T);

/// Every component of W_T is affine (and T is nonempty).
bool is_parabolic(const CoxeterSystem& sys, GenSet T);

/// Every pair of generators spans a finite group.
bool is_two_spherical(const CoxeterSystem& sys);

}  // namespace coxl2
