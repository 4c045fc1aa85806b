#include "coxl2/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>

#include "coxl2/error.hpp"

namespace coxl2 {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidComplex, msg); }

std::string simplex_id(const std::vector<int>& verts, const std::vector<std::string>& names) {
  if (verts.size() == 1) return names[verts[0]];
  std::string s = "{";
  for (std::size_t i = 0; i < verts.size(); ++i) s += (i ? "," : "") + names[verts[i]];
  return s + "}";
}

}  // namespace

CellComplex CellComplex::from_simplices(const std::vector<std::vector<int>>& simplices,
                                        std::vector<std::string> vertex_names) {
  std::set<std::vector<int>> faces;
  int max_vertex = static_cast<int>(vertex_names.size()) - 1;
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (s.size() > 24) invalid("simplex too large");
    max_vertex = std::max(max_vertex, s.back());
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<int> f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask >> i & 1u) f.push_back(s[i]);
      faces.insert(f);
    }
  }
  for (int v = 0; v < static_cast<int>(vertex_names.size()); ++v) faces.insert({v});
  for (int v = static_cast<int>(vertex_names.size()); v <= max_vertex; ++v) vertex_names.push_back(std::to_string(v));

  std::vector<std::vector<int>> ordered(faces.begin(), faces.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
  std::map<std::vector<int>, int> where;
  for (std::size_t i = 0; i < ordered.size(); ++i) where[ordered[i]] = static_cast<int>(i);

  CellComplex c;
  c.simplicial_ = true;
  c.boundary_.resize(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    auto& f = ordered[i];
    Cell cell{simplex_id(f, vertex_names), static_cast<int>(f.size()) - 1, {}};
    if (f.size() > 1)
      for (std::size_t k = 0; k < f.size(); ++k) {
        auto g = f;
        g.erase(g.begin() + static_cast<long>(k));
        int j = where.at(g);
        cell.facets.push_back(j);
        c.boundary_[i].emplace_back(j, k % 2 ? -1 : 1);
      }
    c.cells_.push_back(std::move(cell));
  }
  c.index();
  return c;
}

CellComplex CellComplex::from_cells(std::vector<Cell> cells) {
  CellComplex c;
  c.cells_ = std::move(cells);
  for (std::size_t i = 0; i < c.cells_.size(); ++i) {
    auto& cell = c.cells_[i];
    if (cell.dim < 0) invalid("negative dimension for '" + cell.id + "'");
    std::sort(cell.facets.begin(), cell.facets.end());
    if (std::adjacent_find(cell.facets.begin(), cell.facets.end()) != cell.facets.end())
      invalid("repeated facet in '" + cell.id + "'");
    for (int f : cell.facets) {
      if (f < 0 || f >= static_cast<int>(c.cells_.size())) invalid("unknown facet of '" + cell.id + "'");
      if (c.cells_[f].dim != cell.dim - 1) invalid("face poset is not graded at '" + cell.id + "'");
    }
    if (cell.dim == 0 && !cell.facets.empty()) invalid("vertex '" + cell.id + "' has facets");
    if (cell.dim == 1 && cell.facets.size() != 2) invalid("edge '" + cell.id + "' needs two distinct vertices");
    if (cell.dim >= 2 && cell.facets.size() < 2) invalid("cell '" + cell.id + "' has too few facets");
  }
  c.index();
  c.orient();
  for (std::size_t i = 0; i < c.cells_.size(); ++i) {
    int d = c.cells_[i].dim;
    if (d < 2) continue;
    auto bd = c.closure(c.cells_[i].facets);
    if (!homology(bd).is_sphere(d - 1)) invalid("boundary of '" + c.cells_[i].id + "' is not a homology sphere");
  }
  return c;
}

void CellComplex::index() {
  ids_.clear();
  by_dim_.clear();
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!ids_.emplace(cells_[i].id, static_cast<int>(i)).second) invalid("duplicate cell id '" + cells_[i].id + "'");
    if (by_dim_.size() <= static_cast<std::size_t>(cells_[i].dim)) by_dim_.resize(cells_[i].dim + 1);
    by_dim_[cells_[i].dim].push_back(static_cast<int>(i));
  }
  vertices_.assign(cells_.size(), {});
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    for (int i : by_dim_[d]) {
      if (d == 0) {
        vertices_[i] = {i};
        continue;
      }
      std::set<int> vs;
      for (int f : cells_[i].facets) vs.insert(vertices_[f].begin(), vertices_[f].end());
      vertices_[i].assign(vs.begin(), vs.end());
    }
}

// Incidences: an edge goes from its first vertex to its second. For higher cells the
// signs are propagated across ridges, each of which lies in exactly two facets.
void CellComplex::orient() {
  boundary_.assign(cells_.size(), {});
  for (std::size_t d = 1; d < by_dim_.size(); ++d)
    for (int i : by_dim_[d]) {
      auto& facets = cells_[i].facets;
      if (d == 1) {
        boundary_[i] = {{facets[0], -1}, {facets[1], 1}};
        continue;
      }
      std::map<int, std::vector<std::pair<int, int>>> ridges;  // ridge -> (facet position, sign)
      for (std::size_t p = 0; p < facets.size(); ++p)
        for (auto [r, sgn] : boundary_[facets[p]]) ridges[r].emplace_back(static_cast<int>(p), sgn);
      std::vector<std::vector<std::tuple<int, int, int>>> adj(facets.size());  // (other, my sign, its sign)
      for (auto& [r, uses] : ridges) {
        if (uses.size() != 2) invalid("boundary of '" + cells_[i].id + "' is not a pseudomanifold");
        adj[uses[0].first].emplace_back(uses[1].first, uses[0].second, uses[1].second);
        adj[uses[1].first].emplace_back(uses[0].first, uses[1].second, uses[0].second);
      }
      std::vector<int> eps(facets.size(), 0);
      eps[0] = 1;
      std::deque<int> queue{0};
      while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        for (auto [o, a, b] : adj[p]) {
          int want = -eps[p] * a * b;
          if (eps[o] == 0) {
            eps[o] = want;
            queue.push_back(o);
          } else if (eps[o] != want) {
            invalid("boundary of '" + cells_[i].id + "' is not orientable");
          }
        }
      }
      for (std::size_t p = 0; p < facets.size(); ++p) {
        if (eps[p] == 0) invalid("boundary of '" + cells_[i].id + "' is disconnected");
        boundary_[i].emplace_back(facets[p], eps[p]);
      }
    }
}

int CellComplex::dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

const std::vector<int>& CellComplex::cells_of_dim(int k) const {
  static const std::vector<int> none;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[k];
}

std::vector<std::size_t> CellComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (auto& v : by_dim_) f.push_back(v.size());
  return f;
}

std::vector<int> CellComplex::cofaces(int i) const {
  std::vector<char> up(cells_.size(), 0);
  for (std::size_t d = cells_[i].dim + 1; d < by_dim_.size(); ++d)
    for (int j : by_dim_[d])
      for (int f : cells_[j].facets)
        if (f == i || up[f]) {
          up[j] = 1;
          break;
        }
  std::vector<int> out;
  for (std::size_t j = 0; j < cells_.size(); ++j)
    if (up[j]) out.push_back(static_cast<int>(j));
  return out;
}

int CellComplex::index_of(const std::string& id) const {
  auto it = ids_.find(id);
  if (it == ids_.end()) invalid("unknown cell '" + id + "'");
  return it->second;
}

std::vector<std::pair<std::string, std::string>> CellComplex::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int e : cells_of_dim(1)) out.emplace_back(cells_[cells_[e].facets[0]].id, cells_[cells_[e].facets[1]].id);
  return out;
}

std::vector<std::string> CellComplex::vertex_ids() const {
  std::vector<std::string> out;
  for (int v : cells_of_dim(0)) out.push_back(cells_[v].id);
  return out;
}

CellComplex CellComplex::closure(const std::vector<int>& seeds) const {
  std::vector<char> keep(cells_.size(), 0);
  std::vector<int> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (keep[i]) continue;
    keep[i] = 1;
    for (int f : cells_[i].facets) stack.push_back(f);
  }
  std::vector<int> remap(cells_.size(), -1);
  CellComplex c;
  c.simplicial_ = simplicial_;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (keep[i]) {
      remap[i] = static_cast<int>(c.cells_.size());
      c.cells_.push_back(cells_[i]);
    }
  c.boundary_.resize(c.cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!keep[i]) continue;
    auto& cell = c.cells_[remap[i]];
    for (auto& f : cell.facets) f = remap[f];
    for (auto [f, s] : boundary_[i]) c.boundary_[remap[i]].emplace_back(remap[f], s);
  }
  c.index();
  return c;
}

CellComplex CellComplex::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
    invalid("expected an object with a 'cells' array");
  std::vector<Cell> cells;
  std::map<std::string, int> ids;
  for (auto& jc : doc["cells"]) {
    if (!jc.contains("id") || !jc.contains("dim")) invalid("each cell needs 'id' and 'dim'");
    std::string id = jc["id"].is_string() ? jc["id"].get<std::string>() : jc["id"].dump();
    if (!ids.emplace(id, static_cast<int>(cells.size())).second) invalid("duplicate cell id '" + id + "'");
    cells.push_back(Cell{id, jc["dim"].get<int>(), {}});
  }
  std::size_t k = 0;
  for (auto& jc : doc["cells"]) {
    if (jc.contains("facets"))
      for (auto& f : jc["facets"]) {
        std::string fid = f.is_string() ? f.get<std::string>() : f.dump();
        auto it = ids.find(fid);
        if (it == ids.end()) invalid("unknown facet '" + fid + "'");
        cells[k].facets.push_back(it->second);
      }
    ++k;
  }
  // facet lists must reference earlier dimensions only; sort cells by dimension for orientation
  std::vector<int> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cells[a].dim < cells[b].dim; });
  std::vector<int> pos(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<Cell> sorted;
  for (int i : order) {
    Cell c = cells[i];
    for (auto& f : c.facets) f = pos[f];
    sorted.push_back(std::move(c));
  }
  return from_cells(std::move(sorted));
}

nlohmann::json CellComplex::to_json() const {
  nlohmann::json cells = nlohmann::json::array();
  for (auto& c : cells_) {
    nlohmann::json j{{"id", c.id}, {"dim", c.dim}};
    if (c.dim > 0) {
      nlohmann::json f = nlohmann::json::array();
      for (int x : c.facets) f.push_back(cells_[x].id);
      j["facets"] = f;
    }
    cells.push_back(j);
  }
  return nlohmann::json{{"cells", cells}};
}

// ---------------------------------------------------------------- homology

long HomologyProfile::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < groups.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(groups[k].rank);
  return chi;
}

bool HomologyProfile::is_sphere(int n) const {
  if (n < 0) return groups.empty();
  if (static_cast<int>(groups.size()) != n + 1) return false;
  for (int k = 0; k <= n; ++k) {
    auto& g = groups[k];
    if (!g.torsion.empty()) return false;
    std::size_t want = (n == 0) ? 2 : (k == 0 || k == n) ? 1 : 0;
    if (g.rank != want) return false;
  }
  return true;
}

bool HomologyProfile::is_acyclic() const {
  if (groups.empty() || groups[0].rank != 1) return false;
  for (std::size_t k = 1; k < groups.size(); ++k)
    if (groups[k].rank || !groups[k].torsion.empty()) return false;
  return true;
}

bool HomologyProfile::reduced_zero(int k) const {
  if (k < -1) return true;
  if (k == -1) return !groups.empty();
  if (k >= static_cast<int>(groups.size())) return true;
  std::size_t r = groups[k].rank - (k == 0 ? 1 : 0);
  return r == 0 && groups[k].torsion.empty();
}

std::string HomologyProfile::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (k) out += ", ";
    std::string term;
    if (groups[k].rank) term = groups[k].rank == 1 ? "Z" : "Z^" + std::to_string(groups[k].rank);
    for (auto& t : groups[k].torsion) term += (term.empty() ? "" : "+") + std::string("Z/") + t.get_str();
    out += "H" + std::to_string(k) + "=" + (term.empty() ? "0" : term);
  }
  return out.empty() ? "empty" : out;
}

std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> a) {
  std::vector<mpz_class> diag;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the remaining block becomes the pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(a[i][j]) != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
          if (abs(a[i][j]) == 1) goto found;
        }
  found:
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    for (;;) {
      bool clean = true;
      std::vector<std::size_t> support;
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(a[t][j]) != 0) support.push_back(j);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j : support) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i)
          if (sgn(a[i][t]) != 0) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (clean) break;
      // move the smallest leftover in row t or column t to the pivot
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (sgn(a[i][t]) != 0 && abs(a[i][t]) < abs(a[bi][bj])) bi = i, bj = t;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (sgn(a[t][j]) != 0 && abs(a[t][j]) < abs(a[bi][bj])) bi = t, bj = j;
      if (bi != t) std::swap(a[t], a[bi]);
      if (bj != t)
        for (auto& row : a) std::swap(row[t], row[bj]);
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  // diagonal to invariant factors
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g = gcd(diag[i], diag[j]);
      mpz_class l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

HomologyProfile homology(const CellComplex& c) {
  HomologyProfile p;
  int dim = c.dimension();
  if (dim < 0) return p;
  // ranks and invariant factors of each boundary map d_k : C_k -> C_{k-1}
  std::vector<std::size_t> rank(dim + 2, 0);
  std::vector<std::vector<mpz_class>> inv(dim + 2);
  for (int k = 1; k <= dim; ++k) {
    auto& rows = c.cells_of_dim(k - 1);
    auto& cols = c.cells_of_dim(k);
    std::map<int, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    std::vector<std::vector<mpz_class>> m(rows.size(), std::vector<mpz_class>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (auto [f, s] : c.boundary(cols[j])) m[row_of.at(f)][j] = s;
    inv[k] = smith_invariants(std::move(m));
    rank[k] = inv[k].size();
  }
  for (int k = 0; k <= dim; ++k) {
    HomologyGroup g;
    g.rank = c.cells_of_dim(k).size() - rank[k] - rank[k + 1];
    for (auto& d : inv[k + 1])
      if (d > 1) g.torsion.push_back(d);
    p.groups.push_back(g);
  }
  return p;
}

// ---------------------------------------------------------------- links and checks

CellComplex link(const CellComplex& c, int cell) {
  if (c.simplicial()) {
    const auto& sv = c.vertices_of(cell);
    std::vector<std::vector<int>> simplices;
    std::map<int, int> vmap;
    std::vector<std::string> names;
    for (int j : c.cofaces(cell)) {
      std::vector<int> rest;
      for (int v : c.vertices_of(j))
        if (!std::binary_search(sv.begin(), sv.end(), v)) {
          auto [it, fresh] = vmap.emplace(v, static_cast<int>(names.size()));
          if (fresh) names.push_back(c.cell(v).id);
          rest.push_back(it->second);
        }
      simplices.push_back(rest);
    }
    return CellComplex::from_simplices(simplices, names);
  }
  // order complex of the cells above `cell`
  auto up = c.cofaces(cell);
  std::map<int, int> local;
  std::vector<std::string> names;
  for (int j : up) {
    local[j] = static_cast<int>(names.size());
    names.push_back(c.cell(j).id);
  }
  // maximal chains through covering relations
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int top) -> void {
    bool maximal = true;
    for (int j : up) {
      auto& f = c.cell(j).facets;
      if (std::find(f.begin(), f.end(), top) == f.end()) continue;
      maximal = false;
      chain.push_back(local[j]);
      self(self, j);
      chain.pop_back();
    }
    if (maximal) chains.push_back(chain);
  };
  extend(extend, cell);
  return CellComplex::from_simplices(chains, names);
}

CheckResult ghs_check(const CellComplex& c, int n) {
  if (c.dimension() != n) return {false, "dimension " + std::to_string(c.dimension()) + " != " + std::to_string(n)};
  auto h = homology(c);
  if (!h.is_sphere(n)) return {false, "global homology " + h.to_string() + " is not that of S^" + std::to_string(n)};
  for (std::size_t i = 0; i < c.size(); ++i) {
    int k = c.cell(static_cast<int>(i)).dim;
    auto lk = link(c, static_cast<int>(i));
    if (!homology(lk).is_sphere(n - k - 1))
      return {false, "link of '" + c.cell(static_cast<int>(i)).id + "' is not a homology S^" +
                         std::to_string(n - k - 1)};
  }
  return {true, "necessary conditions verified (sphere homology globally and at all " + std::to_string(c.size()) +
                    " cell links)"};
}

CheckResult disk_check(const CellComplex& c, int n) {
  if (c.dimension() != n) return {false, "dimension " + std::to_string(c.dimension()) + " != " + std::to_string(n)};
  auto h = homology(c);
  if (!h.is_acyclic()) return {false, "homology " + h.to_string() + " is not that of a point"};
  std::vector<char> covered(c.size(), 0);
  std::vector<int> boundary_facets;
  std::vector<int> uses(c.size(), 0);
  for (int top : c.cells_of_dim(n))
    for (int f : c.cell(top).facets) ++uses[f];
  for (int top : c.cells_of_dim(n)) {
    auto cl = c.closure({top});
    for (std::size_t j = 0; j < cl.size(); ++j) covered[c.index_of(cl.cell(static_cast<int>(j)).id)] = 1;
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!covered[i]) return {false, "not pure: '" + c.cell(static_cast<int>(i)).id + "' lies in no top cell"};
  if (n == 0) return {c.size() == 1, c.size() == 1 ? "a point" : "more than one point"};
  for (int f : c.cells_of_dim(n - 1)) {
    if (uses[f] > 2) return {false, "'" + c.cell(f).id + "' lies in more than two top cells"};
    if (uses[f] == 1) boundary_facets.push_back(f);
  }
  if (boundary_facets.empty()) return {false, "empty boundary"};
  auto bd = c.closure(boundary_facets);
  if (!homology(bd).is_sphere(n - 1)) return {false, "boundary is not a homology S^" + std::to_string(n - 1)};
  for (int v : c.cells_of_dim(0)) {
    auto lh = homology(link(c, v));
    if (!lh.is_sphere(n - 1) && !lh.is_acyclic())
      return {false, "link of '" + c.cell(v).id + "' is neither a sphere nor acyclic"};
  }
  return {true, "necessary conditions verified (acyclic, pseudomanifold, boundary sphere, vertex links)"};
}

bool is_planar_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(n);
  for (auto [a, b] : edges) boost::add_edge(a, b, g);
  return boost::boyer_myrvold_planarity_test(g);
}

namespace {

struct FaceCollector : public boost::planar_face_traversal_visitor {
  std::vector<std::vector<int>>* faces;
  void begin_face() { faces->emplace_back(); }
  template <typename Vertex>
  void next_vertex(Vertex v) {
    faces->back().push_back(static_cast<int>(v));
  }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> planar_faces(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                      boost::property<boost::edge_index_t, int>>;
  Graph g(n);
  for (auto [a, b] : edges) boost::add_edge(a, b, g);
  int k = 0;
  boost::graph_traits<Graph>::edge_iterator ei, ee;
  for (std::tie(ei, ee) = boost::edges(g); ei != ee; ++ei) boost::put(boost::edge_index, g, *ei, k++);
  using Embedding = std::vector<std::vector<boost::graph_traits<Graph>::edge_descriptor>>;
  Embedding embedding(n);
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                           boost::boyer_myrvold_params::embedding = &embedding[0]))
    return std::nullopt;
  std::vector<std::vector<int>> faces;
  FaceCollector vis;
  vis.faces = &faces;
  boost::planar_face_traversal(g, &embedding[0], vis);
  return faces;
}

namespace {
bool connected_without(std::size_t n, const std::vector<std::pair<int, int>>& edges, int x, int y) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  seen[x] = 1;
  if (y >= 0) seen[y] = 1;
  int start = -1;
  std::size_t alive = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) {
      ++alive;
      if (start < 0) start = static_cast<int>(v);
    }
  if (start < 0) return true;
  std::vector<int> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == alive;
}
}  // namespace

bool is_three_connected(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 4) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (!connected_without(n, edges, static_cast<int>(x), static_cast<int>(y))) return false;
  return true;
}

}  // namespace coxl2
