#include "coxl2/davis.hpp"

#include <algorithm>
#include <sstream>

#include "coxl2/error.hpp"
#include "coxl2/growth.hpp"

namespace coxl2 {

namespace {

struct ParabolicData {
  // minimal representatives of W_T / W_{T-s}, per s in T, as global words
  std::map<int, std::vector<Word>> reps;
  std::size_t full_faces = 0;
};

ParabolicData parabolic_data(const CoxeterSystem& sys, GenSet T, std::size_t cap) {
  ParabolicData out;
  if (T.empty()) return out;
  auto sub = restrict(sys, T);
  auto members = T.members();
  BallOptions opts{cap, true, false, BallMethod::Tree};
  auto census = enumerate_ball(sub, 4096, opts);
  for (const auto& x : census.elements) {
    GenSet rd = right_descents(sub, x.word);
    Word global;
    for (int l : x.word.letters) global.letters.push_back(members[l]);
    for (std::size_t k = 0; k < members.size(); ++k)
      if ((rd - GenSet::single(static_cast<int>(k))).empty()) out.reps[members[k]].push_back(global);
  }
  for (auto& [s, v] : out.reps) out.full_faces += v.size();
  return out;
}

int position_in(GenSet T, int s) { return static_cast<int>((T & GenSet((GenSet::Bits{1} << s) - 1)).size()); }

mpq_class measure_of(const Word& rep, const WeightVector& q) {
  mpq_class m = 1;
  for (int s : rep.letters) m *= q.of_generator(s);
  return m;
}

}  // namespace

int CellBall::dimension() const {
  int d = -1;
  for (auto& c : cells) d = std::max(d, c.dim());
  return d;
}

std::vector<int> CellBall::cells_of_dim(int k) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dim() == k) out.push_back(static_cast<int>(i));
  return out;
}

int CellBall::index_of(const NormalForm& rep, GenSet type) const {
  auto it = lookup.find({rep, type});
  return it == lookup.end() ? -1 : it->second;
}

std::string CellBall::cell_id(const CoxeterSystem& sys, int i) const {
  const auto& c = cells[i];
  std::string w = c.rep.word.empty() ? "e" : format_word(sys, c.rep.word, ".");
  return w + "/" + format_subset(sys, c.type);
}

CellBall coxeter_cell_ball(const CoxeterSystem& sys, std::size_t L, std::size_t cap) {
  auto census = enumerate_ball(sys, L, BallOptions{cap, true, false, BallMethod::Tree});
  auto types = spherical_subsets(sys);
  std::map<GenSet, ParabolicData> data;
  for (GenSet T : types) data.emplace(T, parabolic_data(sys, T, cap));

  CellBall ball;
  ball.radius = L;
  for (const auto& u : census.elements) {
    GenSet rd = right_descents(sys, u.word);
    for (GenSet T : types)
      if ((T & rd).empty()) ball.cells.push_back({u, T});
  }
  std::sort(ball.cells.begin(), ball.cells.end(), [](const DavisCell& a, const DavisCell& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.rep.length() != b.rep.length()) return a.rep.length() < b.rep.length();
    if (a.rep.word != b.rep.word) return a.rep.word < b.rep.word;
    return a.type < b.type;
  });
  for (std::size_t i = 0; i < ball.cells.size(); ++i)
    ball.lookup[{ball.cells[i].rep, ball.cells[i].type}] = static_cast<int>(i);

  ball.faces.resize(ball.cells.size());
  ball.full_face_count.resize(ball.cells.size());
  for (std::size_t i = 0; i < ball.cells.size(); ++i) {
    const auto& c = ball.cells[i];
    const auto& pd = data.at(c.type);
    ball.full_face_count[i] = pd.full_faces;
    for (const auto& [s, reps] : pd.reps) {
      GenSet face_type = c.type.without(s);
      int base = position_in(c.type, s) % 2 ? -1 : 1;
      for (const auto& x : reps) {
        if (c.rep.length() + x.size() > L) continue;
        auto rep = normal_form(sys, c.rep.word + x);
        int j = ball.index_of(rep, face_type);
        if (j < 0) throw std::logic_error("cell ball: face missing from ball");
        ball.faces[i].emplace_back(j, x.size() % 2 ? -base : base);
      }
    }
    std::sort(ball.faces[i].begin(), ball.faces[i].end());
  }
  return ball;
}

CellComplex CellBall::complex(const CoxeterSystem& sys) const {
  std::vector<CellComplex::Cell> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!interior(static_cast<int>(i)))
      throw Error(ErrorCode::InvalidComplex, "cell " + cell_id(sys, static_cast<int>(i)) + " has faces outside the ball");
    CellComplex::Cell c{cell_id(sys, static_cast<int>(i)), cells[i].dim(), {}};
    for (auto [f, sign] : faces[i]) c.facets.push_back(f);
    out.push_back(std::move(c));
  }
  return CellComplex::from_cells(std::move(out));
}

nlohmann::json CellBall::to_json(const CoxeterSystem& sys) const {
  nlohmann::json cs = nlohmann::json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    nlohmann::json fs = nlohmann::json::array();
    for (auto [f, sign] : faces[i]) fs.push_back({{"cell", cell_id(sys, f)}, {"sign", sign}});
    std::vector<std::string> type;
    for (int s : cells[i].type.members()) type.push_back(sys.name(s));
    std::vector<std::string> rep;
    for (int s : cells[i].rep.word.letters) rep.push_back(sys.name(s));
    cs.push_back({{"id", cell_id(sys, static_cast<int>(i))},
                  {"representative", rep},
                  {"type", type},
                  {"dim", cells[i].dim()},
                  {"interior", interior(static_cast<int>(i))},
                  {"faces", fs}});
  }
  return {{"radius", radius}, {"cells", cs}};
}

mpq_class cell_measure(const CoxeterSystem& sys, const Word& w, GenSet T, const WeightVector& q) {
  return measure_of(coset_minimal(sys, w, T).word, q);
}

mpq_class RationalMatrix::at(std::size_t r, std::size_t c) const {
  auto it = columns[c].find(r);
  return it == columns[c].end() ? mpq_class(0) : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const mpq_class& v) {
  if (v == 0)
    columns[c].erase(r);
  else
    columns[c][r] = v;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols != o.rows) throw std::logic_error("matrix shape mismatch");
  RationalMatrix out(rows, o.cols);
  for (std::size_t c = 0; c < o.cols; ++c) {
    auto& col = out.columns[c];
    for (const auto& [k, v] : o.columns[c])
      for (const auto& [r, w] : columns[k]) col[r] += w * v;
    std::erase_if(col, [](const auto& e) { return e.second == 0; });
  }
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows == o.rows && cols == o.cols && columns == o.columns;
}

std::string WeightedBoundary::to_triplets() const {
  std::ostringstream out;
  out << "# weighted boundary: dim row col value\n";
  for (std::size_t i = 1; i < d.size(); ++i)
    for (std::size_t c = 0; c < d[i].cols; ++c)
      for (const auto& [r, v] : d[i].columns[c]) out << i << ' ' << r << ' ' << c << ' ' << v.get_str() << '\n';
  return out.str();
}

WeightedBoundary weighted_boundary(const CoxeterSystem& sys, const CellBall& ball, const WeightVector& q) {
  (void)sys;
  WeightedBoundary wb;
  wb.q = q;
  int dim = ball.dimension();
  std::vector<int> local(ball.cells.size());
  for (int i = 0; i <= dim; ++i) {
    wb.index.push_back(ball.cells_of_dim(i));
    wb.measure.emplace_back();
    for (std::size_t k = 0; k < wb.index[i].size(); ++k) {
      local[wb.index[i][k]] = static_cast<int>(k);
      wb.measure[i].push_back(measure_of(ball.cells[wb.index[i][k]].rep.word, q));
    }
  }
  wb.d.emplace_back();
  for (int i = 1; i <= dim; ++i) {
    RationalMatrix m(wb.index[i - 1].size(), wb.index[i].size());
    for (std::size_t c = 0; c < wb.index[i].size(); ++c)
      for (auto [f, sign] : ball.faces[wb.index[i][c]])
        m.set(local[f], c, mpq_class(sign) * wb.measure[i][c] / wb.measure[i - 1][local[f]]);
    wb.d.push_back(std::move(m));
  }
  return wb;
}

nlohmann::json IdentityReport::to_json() const {
  return {{"interior_cells", interior_cells},
          {"square_zero_checks", square_zero_checks},
          {"conjugation_checks", conjugation_checks},
          {"adjoint_checks", adjoint_checks},
          {"passed", true}};
}

namespace {

RationalMatrix diagonal(const std::vector<mpq_class>& v, bool invert) {
  RationalMatrix m(v.size(), v.size());
  for (std::size_t k = 0; k < v.size(); ++k) m.set(k, k, invert ? mpq_class(1 / v[k]) : v[k]);
  return m;
}

}  // namespace

IdentityReport verify_chain_identities(const CoxeterSystem& sys, const CellBall& ball, const WeightVector& q) {
  auto wb = weighted_boundary(sys, ball, q);
  IdentityReport rep;
  for (std::size_t i = 0; i < ball.cells.size(); ++i) rep.interior_cells += ball.interior(static_cast<int>(i));
  auto fail = [&](const std::string& which, int dim, std::size_t col) {
    throw Error(ErrorCode::IdentityViolation, which + " at " + ball.cell_id(sys, wb.index[dim][col]));
  };
  // integral boundary from the incidence data alone
  std::vector<RationalMatrix> plain(wb.d.size());
  for (std::size_t i = 1; i < wb.d.size(); ++i) {
    plain[i] = RationalMatrix(wb.d[i].rows, wb.d[i].cols);
    std::map<int, std::size_t> row_of;
    for (std::size_t k = 0; k < wb.index[i - 1].size(); ++k) row_of[wb.index[i - 1][k]] = k;
    for (std::size_t c = 0; c < wb.index[i].size(); ++c)
      for (auto [f, sign] : ball.faces[wb.index[i][c]]) plain[i].set(row_of.at(f), c, sign);
  }
  for (std::size_t i = 1; i < wb.d.size(); ++i) {
    int dim = static_cast<int>(i);
    auto conj = diagonal(wb.measure[i - 1], false) * wb.d[i] * diagonal(wb.measure[i], true);
    auto lhs = plain[i] * diagonal(wb.measure[i], false);
    auto rhs = diagonal(wb.measure[i - 1], false) * wb.d[i];
    RationalMatrix square;
    if (i >= 2) square = wb.d[i - 1] * wb.d[i];
    for (std::size_t c = 0; c < wb.index[i].size(); ++c) {
      if (!ball.interior(wb.index[i][c])) continue;
      if (i >= 2) {
        if (!square.columns[c].empty()) fail("weighted boundary does not square to zero", dim, c);
        ++rep.square_zero_checks;
      }
      if (conj.columns[c] != plain[i].columns[c]) fail("conjugation by the measure is not the boundary", dim, c);
      ++rep.conjugation_checks;
      if (lhs.columns[c] != rhs.columns[c]) fail("weighted boundary is not adjoint to the coboundary", dim, c);
      ++rep.adjoint_checks;
    }
  }
  return rep;
}

}  // namespace coxl2
