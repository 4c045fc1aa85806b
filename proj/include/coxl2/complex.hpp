#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace coxl2 {

/// Finite regular CW complex given by its face poset, with incidence numbers in {+1,-1}.
class CellComplex {
 public:
  struct Cell {
    std::string id;
    int dim = 0;
    std::vector<int> facets;  // indices of (dim-1)-cells
  };

  CellComplex() = default;

  /// Closes the given simplices (vertex lists) downward. Vertex i is named names[i] or "i".
  static CellComplex from_simplices(const std::vector<std::vector<int>>& simplices,
                                    std::vector<std::string> vertex_names = {});
  /// Validates gradedness and that every cell boundary has sphere homology, then orients.
  /// Throws InvalidComplex.
  static CellComplex from_cells(std::vector<Cell> cells);

  static CellComplex from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

  std::size_t size() const { return cells_.size(); }
  int dimension() const;
  const Cell& cell(int i) const { return cells_[i]; }
  const std::vector<int>& cells_of_dim(int k) const;
  std::vector<std::size_t> f_vector() const;
  /// (facet, incidence) pairs.
  const std::vector<std::pair<int, int>>& boundary(int i) const { return boundary_[i]; }
  /// Sorted 0-cell indices in the closure of cell i.
  const std::vector<int>& vertices_of(int i) const { return vertices_[i]; }
  /// Cells strictly above i.
  std::vector<int> cofaces(int i) const;
  int index_of(const std::string& id) const;
  bool simplicial() const { return simplicial_; }

  /// Pairs of vertex ids joined by a 1-cell.
  std::vector<std::pair<std::string, std::string>> edges() const;
  std::vector<std::string> vertex_ids() const;

  /// Closure of the given cells.
  CellComplex closure(const std::vector<int>& cells) const;

 private:
  void index();
  void orient();

  std::vector<Cell> cells_;
  std::vector<std::vector<std::pair<int, int>>> boundary_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<std::vector<int>> vertices_;
  std::map<std::string, int> ids_;
  bool simplicial_ = false;
};

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, each dividing the next
  bool operator==(const HomologyGroup&) const = default;
};

struct HomologyProfile {
  std::vector<HomologyGroup> groups;  // degrees 0..dim

  /// Alternating sum of ranks.
  long euler_characteristic() const;
  bool is_sphere(int n) const;
  /// Homology of a point (or of the empty set when `allow_empty`).
  bool is_acyclic() const;
  /// Reduced homology vanishes in degree k (reduced in degree 0, and H_{-1} of the empty set).
  bool reduced_zero(int k) const;
  bool empty() const { return groups.empty(); }
  std::string to_string() const;
};

/// Nonzero invariant factors of an integer matrix, in divisibility order.
std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> m);

HomologyProfile homology(const CellComplex& c);

struct CheckResult {
  bool verified = false;
  std::string reason;  // failure reason, or a summary of what was verified
};

/// Necessary conditions for a generalized homology n-sphere: sphere homology globally
/// and at every cell link.
CheckResult ghs_check(const CellComplex& c, int n);
/// Necessary conditions for a homology n-disk: acyclic, pure, pseudomanifold with a
/// boundary of (n-1)-sphere homology, and sphere or acyclic homology at vertex links.
CheckResult disk_check(const CellComplex& c, int n);

/// Link of a cell: the order complex of the cells strictly above it (simplicial links are
/// computed directly).
CellComplex link(const CellComplex& c, int cell);

bool is_planar_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);
/// Face boundary cycles (vertex sequences) of a planar embedding; nullopt when not planar.
/// For a 3-connected graph the embedding, hence the face set, is unique.
std::optional<std::vector<std::vector<int>>> planar_faces(std::size_t n, const std::vector<std::pair<int, int>>& edges);
bool is_three_connected(std::size_t n, const std::vector<std::pair<int, int>>& edges);

}  // namespace coxl2
