#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxl2/complex.hpp"
#include "coxl2/coxeter_system.hpp"
#include "coxl2/weights.hpp"
#include "coxl2/words.hpp"

namespace coxl2 {

/// The coset uW_T, where u is its shortest element and T is spherical.
struct DavisCell {
  NormalForm rep;
  GenSet type;
  int dim() const { return static_cast<int>(type.size()); }
};

/// Cells of the Coxeter cellulation whose representative has length <= radius.
struct CellBall {
  std::size_t radius = 0;
  std::vector<DavisCell> cells;                      // by dimension, then representative, then type
  std::vector<std::vector<std::pair<int, int>>> faces;  // (face, incidence) with the face in the ball
  std::vector<std::size_t> full_face_count;          // faces the cell has in the whole complex

  int dimension() const;
  std::vector<int> cells_of_dim(int k) const;
  /// Every face and coface of the cell lies in the ball (cofaces always do).
  bool interior(int i) const { return faces[i].size() == full_face_count[i]; }
  int index_of(const NormalForm& rep, GenSet type) const;
  std::string cell_id(const CoxeterSystem& sys, int i) const;

  /// Requires every cell to be interior.
  CellComplex complex(const CoxeterSystem& sys) const;
  nlohmann::json to_json(const CoxeterSystem& sys) const;

  std::map<std::pair<NormalForm, GenSet>, int> lookup;
};

CellBall coxeter_cell_ball(const CoxeterSystem& sys, std::size_t L, std::size_t cap = kDefaultEnumerationCap);

/// q_u for the shortest element u of wW_T.
mpq_class cell_measure(const CoxeterSystem& sys, const Word& w, GenSet T, const WeightVector& q);

/// Sparse matrix over Q, stored by column.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::map<std::size_t, mpq_class>> columns;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}
  mpq_class at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const mpq_class& v);
  RationalMatrix operator*(const RationalMatrix& o) const;
  bool operator==(const RationalMatrix& o) const;
};

/// d[i] maps i-cells to (i-1)-cells, for i = 1..dimension; d[0] is empty.
/// Row and column k of d[i] refer to cells_of_dim(i-1)[k] and cells_of_dim(i)[k].
struct WeightedBoundary {
  WeightVector q;
  std::vector<RationalMatrix> d;
  std::vector<std::vector<int>> index;  // index[i] = ball cells of dimension i
  std::vector<std::vector<mpq_class>> measure;  // measure[i][k] = mu of index[i][k]

  /// "i row col value" lines after a "# weighted boundary" header.
  std::string to_triplets() const;
};

WeightedBoundary weighted_boundary(const CoxeterSystem& sys, const CellBall& ball, const WeightVector& q);

struct IdentityReport {
  std::size_t interior_cells = 0;
  std::size_t square_zero_checks = 0;
  std::size_t conjugation_checks = 0;
  std::size_t adjoint_checks = 0;
  nlohmann::json to_json() const;
};

/// Checks on interior cells: the weighted boundary squares to zero, conjugating it by the
/// measure gives the ordinary boundary, and it is adjoint to the coboundary under the
/// measure-weighted inner product. Throws IdentityViolation naming the identity and cell.
IdentityReport verify_chain_identities(const CoxeterSystem& sys, const CellBall& ball, const WeightVector& q);

}  // namespace coxl2
