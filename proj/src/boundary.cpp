#include "coxl2/boundary.hpp"

#include <algorithm>

#include "coxl2/classifier.hpp"
#include "coxl2/error.hpp"

namespace coxl2 {

bool NonsphericalPoset::contains(GenSet T) const {
  return std::find(elements.begin(), elements.end(), T) != elements.end();
}

NonsphericalPoset nonspherical_poset(const CoxeterSystem& sys) {
  if (sys.rank() > 24) throw Error(ErrorCode::CapExceeded, "too many generators to list subsets");
  NonsphericalPoset p;
  GenSet all = sys.all();
  for (GenSet::Bits b = 1; b < all.bits(); ++b)
    if (!is_spherical(sys, GenSet(b))) p.elements.emplace_back(b);
  std::sort(p.elements.begin(), p.elements.end(), [](GenSet a, GenSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  return p;
}

int FlagComplex::dimension() const {
  int d = -1;
  for (auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::size_t FlagComplex::count(int dim) const {
  return static_cast<std::size_t>(std::count_if(simplices.begin(), simplices.end(),
                                                [&](auto& s) { return static_cast<int>(s.size()) == dim + 1; }));
}

CellComplex FlagComplex::complex(const CoxeterSystem& sys) const {
  std::vector<std::string> names;
  for (GenSet T : vertices) names.push_back(format_subset(sys, T));
  std::vector<std::vector<int>> maximal;
  for (auto& s : simplices) maximal.push_back(s);
  return CellComplex::from_simplices(maximal, names);
}

FlagComplex flag_complex(const NonsphericalPoset& poset) {
  FlagComplex f;
  f.vertices = poset.elements;
  const auto& v = f.vertices;
  std::vector<int> chain;
  // elements are sorted by size, so a chain is increasing in index
  auto extend = [&](auto&& self, int last) -> void {
    f.simplices.push_back(chain);
    for (int k = last + 1; k < static_cast<int>(v.size()); ++k)
      if (v[last] != v[k] && v[last].subset_of(v[k])) {
        chain.push_back(k);
        self(self, k);
        chain.pop_back();
      }
  };
  for (int k = 0; k < static_cast<int>(v.size()); ++k) {
    chain = {k};
    extend(extend, k);
  }
  std::sort(f.simplices.begin(), f.simplices.end(), [](auto& a, auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return f;
}

BoundaryDecomposition boundary_decomposition(const CoxeterSystem& sys) {
  BoundaryDecomposition d;
  auto p = nonspherical_poset(sys);
  for (GenSet T : p.elements) {
    if (d.groups.empty() || d.groups.back().cardinality != T.size()) d.groups.push_back({T.size(), {}});
    d.groups.back().pieces.push_back(T);
  }
  for (GenSet a : p.elements)
    for (GenSet b : p.elements)
      if (a != b && a.subset_of(b)) d.meeting_pairs.emplace_back(a, b);
  return d;
}

nlohmann::json BoundaryDecomposition::to_json(const CoxeterSystem& sys) const {
  nlohmann::json gs = nlohmann::json::array();
  for (auto& g : groups) {
    std::vector<std::string> pieces;
    std::map<std::string, std::size_t> types;
    for (GenSet T : g.pieces) {
      pieces.push_back(format_subset(sys, T));
      std::string tag;
      for (auto& [c, t] : classify_system(restrict(sys, T))) tag += (tag.empty() ? "" : "x") + t.to_string();
      ++types[tag];
    }
    gs.push_back({{"cardinality", g.cardinality}, {"pieces", pieces}, {"types", types}});
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (auto& [a, b] : meeting_pairs) pairs.push_back({format_subset(sys, a), format_subset(sys, b)});
  return {{"groups", gs}, {"meeting_pairs", pairs}};
}

const E1Entry* E1Table::at(int i, int j) const {
  for (auto& e : entries)
    if (e.i == i && e.j == j) return &e;
  return nullptr;
}

std::optional<Quantity> E1Table::value(int i, int j) const {
  const E1Entry* e = at(i, j);
  if (!e) return Quantity();
  return e->value;
}

nlohmann::json E1Table::to_json(const CoxeterSystem& sys) const {
  nlohmann::json es = nlohmann::json::array();
  for (auto& e : entries) {
    nlohmann::json ss = nlohmann::json::array();
    for (auto& s : e.summands) {
      std::vector<std::string> chain;
      for (GenSet T : s.chain) chain.push_back(format_subset(sys, T));
      nlohmann::json j{{"chain", chain}, {"min", format_subset(sys, s.min)}, {"betti_source", s.sources}};
      j["value"] = s.status == BettiStatus::Unknown ? "unknown" : s.value.to_string();
      ss.push_back(j);
    }
    es.push_back({{"i", e.i}, {"j", e.j}, {"value", e.value ? e.value->to_string() : "unknown"}, {"summands", ss}});
  }
  return {{"entries", es}};
}

E1Table e1_table(const CoxeterSystem& sys, const Weight& q) {
  auto flag = flag_complex(nonspherical_poset(sys));
  E1Table t;
  if (flag.simplices.empty()) return t;
  std::map<GenSet, BettiReport> reports;
  int top = 0;
  for (auto& chain : flag.simplices) {
    GenSet m = flag.vertices[chain.front()];
    if (reports.count(m)) continue;
    auto sub = restrict(sys, m);
    reports.emplace(m, deduce_betti(sub, q.restricted(sys, m)));
    top = std::max(top, static_cast<int>(reports.at(m).degrees.size()) - 1);
  }
  for (int i = 0; i <= flag.dimension(); ++i)
    for (int j = 0; j <= top; ++j) {
      E1Entry e{i, j, Quantity(), {}};
      for (auto& chain : flag.simplices) {
        if (static_cast<int>(chain.size()) != i + 1) continue;
        E1Summand s;
        for (int k : chain) s.chain.push_back(flag.vertices[k]);
        s.min = s.chain.front();
        const auto& r = reports.at(s.min);
        if (j < static_cast<int>(r.degrees.size())) {
          const auto& d = r.degrees[j];
          s.status = d.status;
          s.value = d.value;
          s.sources = d.sources;
        } else {
          s.status = BettiStatus::Zero;
          s.sources = {"dimension"};
        }
        if (s.status == BettiStatus::Unknown)
          e.value.reset();
        else if (e.value && s.status != BettiStatus::Zero)
          e.value = *e.value + s.value;
        e.summands.push_back(std::move(s));
      }
      t.entries.push_back(std::move(e));
    }
  return t;
}

std::string_view verdict_name(Verdict v) { return v == Verdict::Yes ? "yes" : "unknown"; }

Verdict boundary_b1_vanishes(const CoxeterSystem& sys, const Weight& q) {
  auto t = e1_table(sys, q);
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
    auto v = t.value(i, j);
    if (!v || !v->is_zero()) return Verdict::Unknown;
  }
  return Verdict::Yes;
}

}  // namespace coxl2
