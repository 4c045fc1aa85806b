#pragma once
// Independent reference implementations used only by tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "coxl2/coxeter_system.hpp"
#include "coxl2/words.hpp"

namespace oracle {

using Letters = std::vector<int>;

// Words reachable from w by braid moves alone.
inline std::set<Letters> braid_class(const coxl2::CoxeterSystem& sys, const Letters& w) {
  std::set<Letters> seen{w};
  std::queue<Letters> todo;
  todo.push(w);
  while (!todo.empty()) {
    Letters cur = todo.front();
    todo.pop();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      int s = cur[i], t = cur[i + 1];
      if (s == t) continue;
      auto m = sys.label(s, t);
      if (m.is_infinite()) continue;
      std::size_t k = m.value();
      if (i + k > cur.size()) continue;
      bool alt = true;
      for (std::size_t j = 0; j < k && alt; ++j) alt = cur[i + j] == (j % 2 ? t : s);
      if (!alt) continue;
      Letters nxt = cur;
      for (std::size_t j = 0; j < k; ++j) nxt[i + j] = (j % 2 ? s : t);
      if (seen.insert(nxt).second) todo.push(nxt);
    }
  }
  return seen;
}

// Tits: delete an ss found anywhere in the braid class until none remains.
inline Letters tits_normal_form(const coxl2::CoxeterSystem& sys, Letters w) {
  for (;;) {
    auto cls = braid_class(sys, w);
    bool reduced = true;
    for (auto& v : cls) {
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1]) {
          w = v;
          w.erase(w.begin() + i, w.begin() + i + 2);
          reduced = false;
          break;
        }
      if (!reduced) break;
    }
    if (reduced) return *cls.begin();
  }
}

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

// Closure of the generated permutation group.
inline std::set<Perm> generate(const std::vector<Perm>& gens) {
  Perm id(gens.at(0).size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::queue<Perm> todo;
  todo.push(id);
  while (!todo.empty()) {
    Perm p = todo.front();
    todo.pop();
    for (auto& g : gens) {
      Perm q = compose(g, p);
      if (seen.insert(q).second) todo.push(q);
    }
  }
  return seen;
}

// s_i = (i, i+1) on n+1 points: the symmetric group S_{n+1}.
inline std::vector<Perm> type_a_generators(int n) {
  std::vector<Perm> g;
  for (int i = 0; i < n; ++i) {
    Perm p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i], p[i + 1]);
    g.push_back(p);
  }
  return g;
}

// Reflections of a regular m-gon acting on its vertices.
inline std::vector<Perm> dihedral_generators(int m) {
  Perm s(m), t(m);
  for (int i = 0; i < m; ++i) {
    s[i] = (m - i) % m;
    t[i] = (m + 1 - i) % m;
  }
  return {s, t};
}

// Length distribution of S_{n+1} by inversion count.
inline std::vector<std::uint64_t> symmetric_group_lengths(int n) {
  Perm p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint64_t> out;
  do {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    if (out.size() <= inv) out.resize(inv + 1, 0);
    ++out[inv];
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool conjugate_in(const std::set<Perm>& group, const Perm& a, const Perm& b) {
  for (auto& g : group)
    if (compose(compose(g, a), inverse(g)) == b) return true;
  return false;
}

}  // namespace oracle
