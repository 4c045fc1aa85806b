#include "coxl2/classifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace coxl2 {

std::string_view kind_name(TypeKind k) {
  switch (k) {
    case TypeKind::Finite: return "Finite";
    case TypeKind::Affine: return "Affine";
    case TypeKind::Lanner: return "Lanner";
    case TypeKind::QuasiLanner: return "QuasiLanner";
    case TypeKind::OtherInfinite: return "OtherInfinite";
  }
  return "?";
}

std::string TypeTag::to_string() const {
  switch (kind) {
    case TypeKind::Finite:
    case TypeKind::Affine: return std::string(kind_name(kind)) + "(" + name + ")";
    case TypeKind::Lanner:
    case TypeKind::QuasiLanner: return std::string(kind_name(kind)) + "(" + std::to_string(n) + ")";
    case TypeKind::OtherInfinite: return "OtherInfinite";
  }
  return "?";
}

namespace {

CoxeterMatrix chain(std::size_t n, const std::vector<unsigned>& labels) {
  CoxeterMatrix m(n);
  for (std::size_t i = 0; i < labels.size(); ++i) m.set(i, i + 1, Label(labels[i]));
  return m;
}

std::vector<unsigned> threes(std::size_t k) { return std::vector<unsigned>(k, 3); }

// Path of `len` nodes plus one extra node joined to node `at`.
CoxeterMatrix forked(std::size_t len, std::vector<unsigned> labels, std::size_t at) {
  CoxeterMatrix m = chain(len + 1, labels);
  m.set(at, len, Label(3));
  return m;
}

// Star with arms of the given node counts (center excluded), all labels 3.
CoxeterMatrix star(const std::vector<std::size_t>& arms) {
  std::size_t n = 1;
  for (auto a : arms) n += a;
  CoxeterMatrix m(n);
  std::size_t next = 1;
  for (auto a : arms) {
    std::size_t prev = 0;
    for (std::size_t k = 0; k < a; ++k) {
      m.set(prev, next, Label(3));
      prev = next++;
    }
  }
  return m;
}

std::vector<CatalogEntry> build_finite(std::size_t r) {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, CoxeterMatrix m) { out.push_back({std::move(name), false, std::move(m)}); };
  if (r == 0) return out;
  add("A" + std::to_string(r), chain(r, threes(r - 1)));
  if (r == 2) {
    out.clear();
    for (unsigned m = 3; m <= 8; ++m) add("I2(" + std::to_string(m) + ")", chain(2, {m}));
    return out;
  }
  if (r >= 3) {
    auto l = threes(r - 1);
    l[0] = 4;
    add("B" + std::to_string(r), chain(r, l));
  }
  if (r >= 4) add("D" + std::to_string(r), forked(r - 1, threes(r - 2), r - 3));
  if (r >= 6 && r <= 8) add("E" + std::to_string(r), star({1, 2, r - 4}));
  if (r == 4) add("F4", chain(4, {3, 4, 3}));
  if (r == 3) add("H3", chain(3, {5, 3}));
  if (r == 4) add("H4", chain(4, {5, 3, 3}));
  return out;
}

std::vector<CatalogEntry> build_affine(std::size_t r) {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, CoxeterMatrix m) { out.push_back({std::move(name), true, std::move(m)}); };
  if (r < 2) return out;
  std::size_t n = r - 1;  // affine rank index
  auto idx = std::to_string(n);
  if (r == 2) {
    CoxeterMatrix m(2);
    m.set(0, 1, Label::infinity());
    add("~A1", m);
    return out;
  }
  {
    CoxeterMatrix m = chain(r, threes(r - 1));
    m.set(0, r - 1, Label(3));
    add("~A" + idx, m);
  }
  if (n >= 3) {
    auto l = threes(r - 2);
    l[0] = 4;
    add("~B" + idx, forked(r - 1, l, r - 3));
  }
  if (n >= 2) {
    auto l = threes(r - 1);
    l.front() = 4;
    l.back() = 4;
    add("~C" + idx, chain(r, l));
  }
  if (n >= 4) {
    // fork at both ends
    CoxeterMatrix m = forked(r - 1, threes(r - 2), r - 3);
    CoxeterMatrix d(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) d.set(i, j, m.at(i, j));
    d.set(0, 1, Label(2));
    d.set(0, 2, Label(3));
    add("~D" + idx, d);
  }
  if (n == 2) add("~G2", chain(3, {6, 3}));
  if (n == 4) add("~F4", chain(5, {3, 3, 4, 3}));
  if (n == 6) add("~E6", star({2, 2, 2}));
  if (n == 7) add("~E7", star({1, 3, 3}));
  if (n == 8) add("~E8", star({1, 2, 5}));
  return out;
}

template <class Build>
const std::vector<CatalogEntry>& cached_catalog(std::size_t rank, Build build, std::map<std::size_t, std::vector<CatalogEntry>>& store) {
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = store.find(rank);
  if (it == store.end()) it = store.emplace(rank, build(rank)).first;
  return it->second;
}

struct Signature {
  std::vector<Label> incident;
  bool operator==(const Signature&) const = default;
};

Signature signature(const CoxeterMatrix& m, std::size_t v) {
  Signature s;
  for (std::size_t j = 0; j < m.size(); ++j)
    if (j != v && m.at(v, j) != Label(2)) s.incident.push_back(m.at(v, j));
  std::sort(s.incident.begin(), s.incident.end());
  return s;
}

bool extend(const CoxeterMatrix& a, const CoxeterMatrix& b, const std::vector<Signature>& sa,
            const std::vector<Signature>& sb, std::vector<int>& map, std::vector<bool>& used, std::size_t i) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j] || !(sa[i] == sb[j])) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k) ok = a.at(i, k) == b.at(j, map[k]);
    if (!ok) continue;
    map[i] = static_cast<int>(j);
    used[j] = true;
    if (extend(a, b, sa, sb, map, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

std::optional<std::string> match(const CoxeterMatrix& m, const std::vector<CatalogEntry>& cat) {
  for (auto& e : cat)
    if (diagrams_isomorphic(m, e.matrix)) return e.name;
  return std::nullopt;
}

bool all_labels_finite(const CoxeterSystem& sys) {
  for (std::size_t i = 0; i < sys.rank(); ++i)
    for (std::size_t j = i + 1; j < sys.rank(); ++j)
      if (sys.label(i, j).is_infinite()) return false;
  return true;
}

// Finite / Affine / OtherInfinite for an irreducible system, by catalog only.
TypeTag basic_kind(const CoxeterSystem& sys) {
  std::size_t r = sys.rank();
  if (r == 1) return {TypeKind::Finite, "A1", 0};
  if (r == 2) {
    Label m = sys.label(0, 1);
    if (m.is_infinite()) return {TypeKind::Affine, "~A1", 0};
    return {TypeKind::Finite, "I2(" + m.to_string() + ")", 0};
  }
  if (!all_labels_finite(sys)) return {TypeKind::OtherInfinite, "", 0};
  if (auto f = match(sys.matrix(), finite_catalog(r))) return {TypeKind::Finite, *f, 0};
  if (auto a = match(sys.matrix(), affine_catalog(r))) return {TypeKind::Affine, *a, 0};
  return {TypeKind::OtherInfinite, "", 0};
}

std::map<std::string, TypeTag>& kind_cache() {
  static std::map<std::string, TypeTag> c;
  return c;
}
std::mutex& kind_mutex() {
  static std::mutex m;
  return m;
}

TypeTag cached_basic_kind(const CoxeterSystem& sys) {
  auto key = sys.matrix_key();
  {
    std::lock_guard lock(kind_mutex());
    auto it = kind_cache().find(key);
    if (it != kind_cache().end()) return it->second;
  }
  TypeTag t = basic_kind(sys);
  std::lock_guard lock(kind_mutex());
  kind_cache().emplace(key, t);
  return t;
}

TypeKind subset_component_kind(const CoxeterSystem& sys, GenSet comp) {
  if (comp.size() == 1) return TypeKind::Finite;
  if (comp.size() == 2) {
    auto m = comp.members();
    return sys.label(m[0], m[1]).is_infinite() ? TypeKind::Affine : TypeKind::Finite;
  }
  return cached_basic_kind(restrict(sys, comp)).kind;
}

}  // namespace

const std::vector<CatalogEntry>& finite_catalog(std::size_t rank) {
  static std::map<std::size_t, std::vector<CatalogEntry>> store;
  return cached_catalog(rank, build_finite, store);
}

const std::vector<CatalogEntry>& affine_catalog(std::size_t rank) {
  static std::map<std::size_t, std::vector<CatalogEntry>> store;
  return cached_catalog(rank, build_affine, store);
}

std::string catalog_text(std::size_t max_rank) {
  std::ostringstream os;
  os << "# coxl2 diagram catalog, version " << kCatalogVersion << "\n";
  os << "# Each entry line is followed by one diagram document.\n";
  os << "# Rank 2: only I2(3)..I2(8) are listed; any finite label m >= 3 is I2(m).\n";
  auto emit = [&](const CatalogEntry& e) {
    os << "\nentry " << e.name << ' ' << (e.affine ? "affine" : "finite") << "\n";
    os << "default 2\ngen";
    for (std::size_t i = 0; i < e.matrix.size(); ++i) os << " s" << i + 1;
    os << "\n";
    for (std::size_t i = 0; i < e.matrix.size(); ++i)
      for (std::size_t j = i + 1; j < e.matrix.size(); ++j)
        if (e.matrix.at(i, j) != Label(2))
          os << "m s" << i + 1 << " s" << j + 1 << ' ' << e.matrix.at(i, j).to_string() << "\n";
  };
  for (std::size_t r = 1; r <= max_rank; ++r) {
    for (auto& e : finite_catalog(r)) emit(e);
    for (auto& e : affine_catalog(r)) emit(e);
  }
  return os.str();
}

bool diagrams_isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<Signature> sa, sb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa.push_back(signature(a, i));
    sb.push_back(signature(b, i));
  }
  auto key = [](std::vector<Signature> s) {
    std::vector<std::vector<Label>> k;
    for (auto& x : s) k.push_back(x.incident);
    std::sort(k.begin(), k.end());
    return k;
  };
  if (key(sa) != key(sb)) return false;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  return extend(a, b, sa, sb, map, used, 0);
}

TypeTag classify_component(const CoxeterSystem& sys) {
  if (sys.rank() == 0 || irreducible_components(sys).size() != 1)
    throw Error(ErrorCode::NotIrreducible, "system has " + std::to_string(irreducible_components(sys).size()) +
                                               " components");
  TypeTag t = cached_basic_kind(sys);
  if (t.kind != TypeKind::OtherInfinite) return t;
  if (!all_labels_finite(sys)) return t;

  const std::size_t r = sys.rank();
  const GenSet all = sys.all();
  bool every_proper_finite = true;
  bool every_proper_finite_or_affine = true;
  bool some_affine = false;
  // Proper subsets; the full set is excluded by the loop bound.
  for (GenSet::Bits b = 1; b < all.bits(); ++b) {
    GenSet T(b);
    if (is_spherical(sys, T)) continue;
    every_proper_finite = false;
    if (is_parabolic(sys, T)) {
      some_affine = true;
    } else {
      every_proper_finite_or_affine = false;
      break;
    }
  }
  const int n = static_cast<int>(r) - 1;
  if (every_proper_finite) return {TypeKind::Lanner, "", n};
  if (every_proper_finite_or_affine && some_affine) {
    if (n < 3 || n > 10)
      throw std::logic_error("quasi-Lanner criterion produced dimension " + std::to_string(n));
    return {TypeKind::QuasiLanner, "", n};
  }
  return t;
}

std::vector<std::pair<GenSet, TypeTag>> classify_system(const CoxeterSystem& sys) {
  std::vector<std::pair<GenSet, TypeTag>> out;
  for (GenSet c : irreducible_components(sys)) out.emplace_back(c, classify_component(restrict(sys, c)));
  return out;
}

bool is_spherical(const CoxeterSystem& sys, GenSet T) {
  for (GenSet c : irreducible_components(sys, T))
    if (subset_component_kind(sys, c) != TypeKind::Finite) return false;
  return true;
}

bool is_parabolic(const CoxeterSystem& sys, GenSet T) {
  if (T.empty()) return false;
  for (GenSet c : irreducible_components(sys, T))
    if (subset_component_kind(sys, c) != TypeKind::Affine) return false;
  return true;
}

std::optional<int> euclidean_dimension(const CoxeterSystem& sys, GenSet T) {
  int dim = 0;
  bool affine = false;
  for (GenSet c : irreducible_components(sys, T)) {
    auto k = subset_component_kind(sys, c);
    if (k == TypeKind::Affine) {
      affine = true;
      dim += static_cast<int>(c.size()) - 1;
    } else if (k != TypeKind::Finite) {
      return std::nullopt;
    }
  }
  if (!affine) return std::nullopt;
  return dim;
}

bool is_euclidean_cell(const CoxeterSystem& sys, GenSet T) {
  if (T.size() != 3) throw Error(ErrorCode::ValidationError, "a cell needs three generators");
  auto m = T.members();
  Label a = sys.label(m[0], m[1]), b = sys.label(m[1], m[2]), c = sys.label(m[0], m[2]);
  if (a.is_infinite() || b.is_infinite() || c.is_infinite())
    throw Error(ErrorCode::InfiniteLabel, format_subset(sys, T));
  std::uint64_t x = a.value(), y = b.value(), z = c.value();
  return x * y + y * z + x * z == x * y * z;
}

bool is_two_spherical(const CoxeterSystem& sys) {
  for (std::size_t i = 0; i < sys.rank(); ++i)
    for (std::size_t j = i + 1; j < sys.rank(); ++j)
      if (sys.label(i, j).is_infinite()) return false;
  return true;
}

}  // namespace coxl2
