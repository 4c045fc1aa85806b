#include "coxl2/coxeter_system.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coxl2 {

Label Label::parse(const std::string& token) {
  if (token == "inf" || token == "oo" || token == "∞") return infinity();
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::ParseError, "bad label '" + token + "'");
  if (token.size() > 9) throw Error(ErrorCode::ParseError, "label too large '" + token + "'");
  return Label(static_cast<std::uint32_t>(std::stoul(token)));
}

std::vector<int> GenSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Bits b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

CoxeterMatrix::CoxeterMatrix(std::size_t n, Label fill) : n_(n), entries_(n * n, fill) {
  for (std::size_t i = 0; i < n; ++i) entries_[i * n + i] = Label(1);
}

CoxeterMatrix CoxeterMatrix::from_rows(std::vector<std::vector<Label>> rows) {
  CoxeterMatrix m;
  m.n_ = rows.size();
  m.entries_.reserve(m.n_ * m.n_);
  for (auto& r : rows) {
    if (r.size() != m.n_)
      throw Error(ErrorCode::DimensionMismatch, "row of length " + std::to_string(r.size()) +
                                                    " in matrix of size " + std::to_string(m.n_));
    m.entries_.insert(m.entries_.end(), r.begin(), r.end());
  }
  return m;
}

void CoxeterMatrix::set(std::size_t i, std::size_t j, Label m) {
  entries_[i * n_ + j] = m;
  entries_[j * n_ + i] = m;
}

void CoxeterMatrix::validate() const {
  if (n_ > GenSet::kMaxGenerators)
    throw Error(ErrorCode::DimensionMismatch, "at most 64 generators supported");
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) != Label(1))
      throw Error(ErrorCode::DiagonalNotOne, "entry (" + std::to_string(i) + "," + std::to_string(i) + ")");
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) continue;
      if (at(i, j) != at(j, i))
        throw Error(ErrorCode::Asymmetric, "entries (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (at(i, j).is_finite() && at(i, j).value() < 2)
        throw Error(ErrorCode::OffDiagonalBelowTwo, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

namespace {

// Union-find over generators, joining i,j when pred(label) holds.
template <class Pred>
std::vector<int> join_by(const CoxeterMatrix& m, GenSet within, Pred pred) {
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto mem = within.members();
  for (std::size_t a = 0; a < mem.size(); ++a)
    for (std::size_t b = a + 1; b < mem.size(); ++b)
      if (pred(m.at(mem[a], mem[b]))) {
        int x = find(mem[a]), y = find(mem[b]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
  for (int i : mem) parent[i] = find(i);
  return parent;
}

std::vector<GenSet> groups_of(const std::vector<int>& root, GenSet within) {
  std::vector<GenSet> out;
  for (int i : within.members()) {
    if (root[i] != i) continue;
    GenSet g;
    for (int j : within.members())
      if (root[j] == i) g = g.with(j);
    out.push_back(g);
  }
  return out;
}

std::vector<GenSet> odd_classes(const CoxeterMatrix& m) {
  auto root = join_by(m, GenSet::full(m.size()),
                      [](Label l) { return l.is_finite() && l.value() % 2 == 1; });
  return groups_of(root, GenSet::full(m.size()));
}

}  // namespace

CoxeterSystem::CoxeterSystem(CoxeterMatrix m, std::vector<std::string> names) : matrix_(std::move(m)) {
  matrix_.validate();
  if (names.empty()) {
    for (std::size_t i = 0; i < matrix_.size(); ++i) names.push_back("s" + std::to_string(i + 1));
  }
  if (names.size() != matrix_.size())
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(matrix_.size()) + " generator names");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error(ErrorCode::ValidationError, "empty generator name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw Error(ErrorCode::ValidationError, "duplicate generator '" + names[i] + "'");
  }
  names_ = std::move(names);
  classes_ = odd_classes(matrix_);
  class_of_.assign(matrix_.size(), -1);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (int g : classes_[c].members()) class_of_[g] = static_cast<int>(c);
}

int CoxeterSystem::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorCode::UnknownGenerator, "'" + name + "'");
  return static_cast<int>(it - names_.begin());
}

GenSet CoxeterSystem::subset(const std::vector<std::string>& names) const {
  GenSet T;
  for (auto& n : names) T = T.with(index_of(n));
  return T;
}

std::string CoxeterSystem::matrix_key() const {
  std::ostringstream os;
  os << rank() << ':';
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j) os << matrix_.at(i, j).to_string() << ',';
  return os.str();
}

std::string CoxeterSystem::canonical_key() const {
  std::string key = matrix_key() + "|";
  for (auto& n : names_) key += n + ",";
  return key;
}

CoxeterSystem build_system(const CoxeterMatrix& m, std::vector<std::string> names) {
  return CoxeterSystem(m, std::move(names));
}

std::vector<GenSet> generator_classes(const CoxeterSystem& sys) { return sys.classes(); }

std::vector<GenSet> irreducible_components(const CoxeterSystem& sys, GenSet within) {
  auto root = join_by(sys.matrix(), within, [](Label l) { return l.is_infinite() || l.value() >= 3; });
  return groups_of(root, within);
}

CoxeterSystem restrict(const CoxeterSystem& sys, GenSet T) {
  if (!T.subset_of(sys.all())) throw Error(ErrorCode::UnknownGenerator, "subset outside generator set");
  auto mem = T.members();
  CoxeterMatrix m(mem.size());
  std::vector<std::string> names;
  for (std::size_t a = 0; a < mem.size(); ++a) {
    names.push_back(sys.name(mem[a]));
    for (std::size_t b = a + 1; b < mem.size(); ++b) m.set(a, b, sys.label(mem[a], mem[b]));
  }
  return CoxeterSystem(std::move(m), std::move(names));
}

CoxeterSystem restrict(const CoxeterSystem& sys, const std::vector<std::string>& names) {
  return restrict(sys, sys.subset(names));
}

std::string format_subset(const CoxeterSystem& sys, GenSet T) {
  std::string out = "{";
  bool first = true;
  for (int i : T.members()) {
    if (!first) out += ",";
    out += sys.name(i);
    first = false;
  }
  return out + "}";
}

}  // namespace coxl2
