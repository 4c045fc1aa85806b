#include "coxl2/words.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace coxl2 {

// Elements are tracked through the Tits geometric representation in double precision.
// A frame stores, for each generator t, the root w^{-1}(alpha_t) as n coefficients.
// l(tw) < l(w) iff that root is negative.
namespace {

class Geometry {
 public:
  explicit Geometry(const CoxeterSystem& sys) : n_(static_cast<int>(sys.rank())), B_(n_ * n_) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        Label m = sys.label(i, j);
        B_[i * n_ + j] = m.is_infinite() ? -1.0 : -std::cos(std::numbers::pi / m.value());
      }
    tol_ = 0.25 / std::max(1, n_);
  }

  int n() const { return n_; }
  double B(int i, int j) const { return B_[i * n_ + j]; }

  void identity(std::vector<double>& f) const {
    f.assign(n_ * n_, 0.0);
    for (int t = 0; t < n_; ++t) f[t * n_ + t] = 1.0;
  }

  // A root has every coefficient of one sign; the largest one is at least 1/n in size.
  bool positive(const double* c) const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i)
      if (std::fabs(c[i]) > std::fabs(best)) best = c[i];
    if (!(std::fabs(best) >= tol_) || !std::isfinite(best))
      throw Error(ErrorCode::NumericalFailure, "root coefficients lost precision");
    return best > 0;
  }

  bool left_descent(const std::vector<double>& f, int t) const { return !positive(&f[t * n_]); }

  // w -> s w
  void prepend(std::vector<double>& f, int s) const {
    const double* cs = &f[s * n_];
    for (int t = 0; t < n_; ++t) {
      if (t == s) continue;
      double k = -2.0 * B(s, t);
      if (k == 0.0) continue;
      double* ct = &f[t * n_];
      for (int i = 0; i < n_; ++i) ct[i] += k * cs[i];
    }
    for (int i = 0; i < n_; ++i) f[s * n_ + i] = -f[s * n_ + i];
  }

  // w -> w s
  void append(std::vector<double>& f, int s) const {
    for (int t = 0; t < n_; ++t) {
      double* ct = &f[t * n_];
      double dot = 0.0;
      for (int i = 0; i < n_; ++i) dot += B(s, i) * ct[i];
      ct[s] -= 2.0 * dot;
    }
  }

  std::vector<double> frame_of(const Word& w) const {
    std::vector<double> f;
    identity(f);
    for (int s : w.letters) append(f, s);
    return f;
  }

  int min_left_descent(const std::vector<double>& f, GenSet allowed) const {
    for (int t : allowed.members())
      if (left_descent(f, t)) return t;
    return -1;
  }

 private:
  int n_;
  std::vector<double> B_;
  double tol_;
};

void check_letters(const CoxeterSystem& sys, const Word& w) {
  for (int s : w.letters)
    if (s < 0 || static_cast<std::size_t>(s) >= sys.rank())
      throw Error(ErrorCode::UnknownGenerator, "letter index " + std::to_string(s));
}

// Reduces the element with frame f (known to have length <= bound) to the identity by
// stripping the least left descent each time. Returns the letters stripped.
Word strip(const Geometry& g, std::vector<double>& f, GenSet allowed, std::size_t bound) {
  Word out;
  for (;;) {
    int t = g.min_left_descent(f, allowed);
    if (t < 0) break;
    if (out.size() >= bound) throw Error(ErrorCode::NumericalFailure, "descent chain longer than the word");
    out.letters.push_back(t);
    g.prepend(f, t);
  }
  return out;
}

}  // namespace

Word Word::operator+(const Word& o) const {
  Word r = *this;
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

std::uint64_t BallCensus::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

Word parse_word(const CoxeterSystem& sys, const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> tokens;
  for (std::string tok; is >> tok;) tokens.push_back(tok);
  Word w;
  if (tokens.empty() || (tokens.size() == 1 && (tokens[0] == "e" || tokens[0] == "1"))) {
    if (!tokens.empty()) {
      // a generator may itself be called "e"
      auto& nm = sys.names();
      if (std::find(nm.begin(), nm.end(), tokens[0]) != nm.end()) w.letters.push_back(sys.index_of(tokens[0]));
    }
    return w;
  }
  bool single = std::all_of(sys.names().begin(), sys.names().end(), [](auto& n) { return n.size() == 1; });
  for (auto& tok : tokens) {
    auto& nm = sys.names();
    if (std::find(nm.begin(), nm.end(), tok) != nm.end()) {
      w.letters.push_back(sys.index_of(tok));
    } else if (single) {
      for (char c : tok) w.letters.push_back(sys.index_of(std::string(1, c)));
    } else {
      throw Error(ErrorCode::UnknownGenerator, "'" + tok + "'");
    }
  }
  return w;
}

std::string format_word(const CoxeterSystem& sys, const Word& w, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += sys.name(w[i]);
  }
  return out;
}

NormalForm normal_form(const CoxeterSystem& sys, const Word& w) {
  check_letters(sys, w);
  Geometry g(sys);
  auto f = g.frame_of(w);
  return NormalForm{strip(g, f, sys.all(), w.size()), true};
}

std::size_t length(const CoxeterSystem& sys, const Word& w) { return normal_form(sys, w).length(); }

GenSet left_descents(const CoxeterSystem& sys, const Word& w) {
  check_letters(sys, w);
  Geometry g(sys);
  auto f = g.frame_of(w);
  GenSet d;
  for (int t = 0; t < g.n(); ++t)
    if (g.left_descent(f, t)) d = d.with(t);
  return d;
}

GenSet right_descents(const CoxeterSystem& sys, const Word& w) { return left_descents(sys, w.reversed()); }

namespace {

BallCensus enumerate_tree(const CoxeterSystem& sys, std::size_t L, const BallOptions& opts) {
  Geometry g(sys);
  const int n = g.n();
  BallCensus census;
  census.counts.assign(L + 1, 0);
  if (opts.by_class) census.by_class.resize(L + 1);

  // Shortlex tree: the parent of x != e is s*x where s is the least left descent of x.
  std::vector<std::vector<double>> frames(L + 1);
  std::vector<int> next(L + 1, 0);
  std::vector<int> letter(L + 1, -1);
  std::vector<std::uint32_t> exps(sys.num_classes(), 0);
  std::uint64_t seen = 0;
  std::vector<double> scratch(n);

  auto visit = [&](std::size_t depth) {
    if (++seen > opts.cap)
      throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(opts.cap) + " elements within length " +
                                              std::to_string(L));
    ++census.counts[depth];
    if (opts.by_class) ++census.by_class[depth][exps];
    if (opts.collect_elements) {
      Word w;
      for (std::size_t d = depth; d >= 1; --d) w.letters.push_back(letter[d]);
      census.elements.push_back(NormalForm{w, true});
    }
  };

  g.identity(frames[0]);
  visit(0);
  std::size_t depth = 0;
  next[0] = 0;
  while (true) {
    if (depth == L || next[depth] >= n) {
      if (depth == 0) break;
      if (opts.by_class) --exps[sys.class_of(letter[depth])];
      --depth;
      continue;
    }
    int s = next[depth]++;
    const auto& f = frames[depth];
    if (!g.positive(&f[s * n])) continue;  // s*w would be shorter
    // s must be the least left descent of s*w: check each t < s stays positive.
    bool ok = true;
    const double* cs = &f[s * n];
    for (int t = 0; t < s && ok; ++t) {
      double k = -2.0 * g.B(s, t);
      const double* ct = &f[t * n];
      if (k == 0.0) {
        ok = g.positive(ct);
        continue;
      }
      for (int i = 0; i < n; ++i) scratch[i] = ct[i] + k * cs[i];
      ok = g.positive(scratch.data());
    }
    if (!ok) continue;
    frames[depth + 1] = f;
    g.prepend(frames[depth + 1], s);
    ++depth;
    letter[depth] = s;
    next[depth] = 0;
    if (opts.by_class) ++exps[sys.class_of(s)];
    visit(depth);
  }
  return census;
}

// Small roots: the least set containing the simple roots and closed under beta -> s(beta)
// whenever B(alpha_s, beta) > -1. Membership of small roots in the inversion set N(y)
// determines which right multiplications y -> ys are shortlex steps, and evolves by
//   N(ys) ∩ E = {alpha_s} ∪ { beta in E : s(beta) in E ∩ N(y) }.
// A root s(beta) outside E dominates alpha_s, so it cannot lie in N(y) when ys > y.
class SmallRoots {
 public:
  explicit SmallRoots(const Geometry& g) : n_(g.n()) {
    for (int s = 0; s < n_; ++s) {
      std::vector<double> r(n_, 0.0);
      r[s] = 1.0;
      roots_.push_back(r);
    }
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      if (roots_.size() > kMaxRoots) throw Error(ErrorCode::NumericalFailure, "small root closure did not terminate");
      for (int s = 0; s < n_; ++s) {
        double b = dot(g, roots_[i], s);
        if (b <= -1.0 + kEps) continue;
        auto r = reflect(g, roots_[i], s);
        if (!is_positive(r) || find(r) >= 0) continue;
        roots_.push_back(r);
      }
    }
    image_.assign(roots_.size() * n_, -1);
    for (std::size_t i = 0; i < roots_.size(); ++i)
      for (int s = 0; s < n_; ++s) image_[i * n_ + s] = find(reflect(g, roots_[i], s));
    forbidden_.resize(n_);
    for (int s = 0; s < n_; ++s) {
      forbidden_[s].push_back(s);
      for (int t = 0; t < s; ++t) {
        int k = image_[t * n_ + s];  // s(alpha_t)
        if (k >= 0) forbidden_[s].push_back(k);
      }
    }
  }

  std::size_t size() const { return roots_.size(); }
  int image(std::size_t i, int s) const { return image_[i * n_ + s]; }
  const std::vector<int>& forbidden(int s) const { return forbidden_[s]; }

 private:
  static constexpr double kEps = 1e-9;
  static constexpr std::size_t kMaxRoots = 1u << 16;

  double dot(const Geometry& g, const std::vector<double>& r, int s) const {
    double d = 0.0;
    for (int i = 0; i < n_; ++i) d += r[i] * g.B(i, s);
    return d;
  }
  std::vector<double> reflect(const Geometry& g, const std::vector<double>& r, int s) const {
    auto out = r;
    out[s] -= 2.0 * dot(g, r, s);
    return out;
  }
  bool is_positive(const std::vector<double>& r) const {
    for (double x : r)
      if (x < -kEps) return false;
    return true;
  }
  int find(const std::vector<double>& r) const {
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      bool same = true;
      for (int k = 0; k < n_ && same; ++k) same = std::fabs(roots_[i][k] - r[k]) < 1e-7;
      if (same) return static_cast<int>(i);
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<double>> roots_;
  std::vector<int> image_;
  std::vector<std::vector<int>> forbidden_;
};

using State = std::vector<std::uint64_t>;

bool test_bit(const State& st, int i) { return (st[i >> 6] >> (i & 63)) & 1u; }
void set_bit(State& st, int i) { st[i >> 6] |= std::uint64_t{1} << (i & 63); }

BallCensus count_automaton(const CoxeterSystem& sys, std::size_t L, const BallOptions& opts) {
  Geometry g(sys);
  SmallRoots E(g);
  const int n = g.n();
  const std::size_t words = (E.size() + 63) / 64;
  BallCensus census;
  census.counts.assign(L + 1, 0);
  std::map<State, std::uint64_t> level{{State(words, 0), 1}};
  std::uint64_t seen = 0;
  for (std::size_t k = 0; k <= L; ++k) {
    std::uint64_t here = 0;
    for (auto& [st, c] : level) here += c;
    census.counts[k] = here;
    seen += here;
    if (seen > opts.cap)
      throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(opts.cap) + " elements within length " +
                                              std::to_string(L));
    if (k == L || level.empty()) break;
    std::map<State, std::uint64_t> next;
    for (auto& [st, c] : level) {
      for (int s = 0; s < n; ++s) {
        bool ok = true;
        for (int b : E.forbidden(s))
          if (test_bit(st, b)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        State nx(words, 0);
        set_bit(nx, s);
        for (std::size_t b = 0; b < E.size(); ++b) {
          int img = E.image(b, s);
          if (img >= 0 && test_bit(st, img)) set_bit(nx, static_cast<int>(b));
        }
        next[nx] += c;
      }
    }
    level = std::move(next);
  }
  return census;
}

}  // namespace

BallCensus enumerate_ball(const CoxeterSystem& sys, std::size_t L, const BallOptions& opts) {
  bool tree = opts.method == BallMethod::Tree ||
              (opts.method == BallMethod::Auto && (opts.collect_elements || opts.by_class));
  if (!tree && (opts.collect_elements || opts.by_class))
    throw Error(ErrorCode::ValidationError, "the automaton only produces counts");
  return tree ? enumerate_tree(sys, L, opts) : count_automaton(sys, L, opts);
}

std::size_t small_root_count(const CoxeterSystem& sys) {
  Geometry g(sys);
  return SmallRoots(g).size();
}

FinitenessProbe probe_finiteness(const CoxeterSystem& sys, std::size_t cap) {
  FinitenessProbe probe;
  for (std::size_t L = 8;; L *= 2) {
    try {
      auto c = enumerate_ball(sys, L, BallOptions{cap, false, false, BallMethod::Tree});
      probe.explored = c.total();
      if (c.counts[L] == 0) {
        probe.finite = true;
        probe.size = c.total();
        return probe;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      probe.explored = cap;
      return probe;
    }
  }
}

NormalForm coset_minimal(const CoxeterSystem& sys, const Word& w, GenSet T) {
  check_letters(sys, w);
  // Work with y = w^{-1}: right descents of w are left descents of y.
  Geometry g(sys);
  Word y = w.reversed();
  auto f = g.frame_of(y);
  Word stripped = strip(g, f, T & sys.all(), w.size());
  // y' = t_k ... t_1 y, so the minimal representative is w t_1 ... t_k.
  return normal_form(sys, w + stripped);
}

NormalForm longest_element(const CoxeterSystem& sys, std::size_t cap) {
  Geometry g(sys);
  std::vector<double> f;
  g.identity(f);
  Word x;
  for (;;) {
    int s = -1;
    for (int t = 0; t < g.n(); ++t)
      if (!g.left_descent(f, t)) {
        s = t;
        break;
      }
    if (s < 0) break;
    if (x.size() >= cap) throw Error(ErrorCode::NotFinite, "no longest element within length " + std::to_string(cap));
    g.prepend(f, s);
    x.letters.insert(x.letters.begin(), s);
  }
  return normal_form(sys, x);
}

}  // namespace coxl2
