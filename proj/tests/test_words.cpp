#include <catch_amalgamated.hpp>

#include <random>

#include "coxl2/families.hpp"
#include "oracles.hpp"

using namespace coxl2;

namespace {
std::string nf(const CoxeterSystem& sys, const std::string& w) {
  return format_word(sys, normal_form(sys, parse_word(sys, w)).word);
}
}  // namespace

TEST_CASE("normal forms of small words") {
  auto i3 = families::dihedral(3);
  CHECK(nf(i3, "sts") == "sts");
  CHECK(nf(i3, "tst") == "sts");
  CHECK(nf(i3, "ss").empty());
  CHECK(nf(i3, "stst") == "ts");
  auto dinf = families::infinite_dihedral();
  CHECK(nf(dinf, "stst") == "stst");
  CHECK(length(dinf, parse_word(dinf, "ststs")) == 5);
  CHECK(length(i3, Word{}) == 0);
  CHECK(length(i3, parse_word(i3, "stst")) == 2);
}

TEST_CASE("parse_word forms") {
  auto sys = families::path({3, 3});
  CHECK(parse_word(sys, "s1 s2 s1").letters == std::vector<int>{0, 1, 0});
  CHECK(parse_word(sys, "e").empty());
  CHECK_THROWS_AS(parse_word(sys, "s9"), Error);
  auto i3 = families::dihedral(3);
  CHECK(parse_word(i3, "st s").letters == std::vector<int>{0, 1, 0});
}

TEST_CASE("normal form matches the braid-move oracle") {
  std::mt19937 rng(11);
  std::vector<CoxeterSystem> systems{families::dihedral(3), families::dihedral(5), families::path({3, 3}),
                                     families::path({4, 3}), families::triangle(3, 3, 3),
                                     families::triangle(2, 3, 7), families::complete(4, 3),
                                     families::infinite_dihedral(), families::right_angled_cycle(5)};
  for (auto& sys : systems) {
    for (int iter = 0; iter < 60; ++iter) {
      std::size_t len = rng() % 9;
      oracle::Letters w;
      for (std::size_t i = 0; i < len; ++i) w.push_back(rng() % sys.rank());
      auto expect = oracle::tits_normal_form(sys, w);
      auto got = normal_form(sys, Word(w));
      CHECK(got.word.letters == expect);
    }
  }
}

TEST_CASE("length changes by one under right multiplication") {
  std::mt19937 rng(5);
  auto sys = families::complete(4, 3);
  for (int iter = 0; iter < 200; ++iter) {
    Word w;
    for (int i = 0; i < 12; ++i) w.letters.push_back(rng() % 4);
    auto l = static_cast<long>(length(sys, w));
    for (int s = 0; s < 4; ++s) {
      Word ws = w;
      ws.letters.push_back(s);
      CHECK(std::labs(static_cast<long>(length(sys, ws)) - l) == 1);
    }
  }
}

TEST_CASE("normal form is invariant under random braid scrambles") {
  std::mt19937 rng(3);
  auto sys = families::path({5, 3});  // H3
  for (int iter = 0; iter < 50; ++iter) {
    Word w;
    for (int i = 0; i < 10; ++i) w.letters.push_back(rng() % 3);
    auto base = normal_form(sys, w);
    CHECK(normal_form(sys, base.word) == base);  // idempotent
    // insert an ss pair at a random spot
    Word v = w;
    int s = rng() % 3;
    std::size_t pos = rng() % (v.size() + 1);
    v.letters.insert(v.letters.begin() + pos, {s, s});
    CHECK(normal_form(sys, v) == base);
  }
}

TEST_CASE("enumerate_ball counts") {
  auto dinf = families::infinite_dihedral();
  CHECK(enumerate_ball(dinf, 4).counts == std::vector<std::uint64_t>{1, 2, 2, 2, 2});
  auto i3 = families::dihedral(3);
  CHECK(enumerate_ball(i3, 3).counts == std::vector<std::uint64_t>{1, 2, 2, 1});
  auto a3 = families::path({3, 3});
  CHECK(enumerate_ball(a3, 6).total() == 24);
  CHECK(enumerate_ball(a3, 6).counts == oracle::symmetric_group_lengths(3));
  CHECK(enumerate_ball(families::path({3, 3, 3}), 10).counts == oracle::symmetric_group_lengths(4));
  CHECK(enumerate_ball(families::path({5, 3}), 15).total() == 120);
  for (unsigned m = 3; m <= 8; ++m) CHECK(enumerate_ball(families::dihedral(m), m).total() == 2 * m);
}

TEST_CASE("enumerate_ball elements are distinct normal forms") {
  auto sys = families::complete(4, 3);
  BallOptions opts;
  opts.collect_elements = true;
  auto c = enumerate_ball(sys, 6, opts);
  std::set<NormalForm> uniq(c.elements.begin(), c.elements.end());
  CHECK(uniq.size() == c.elements.size());
  for (auto& e : c.elements) CHECK(normal_form(sys, e.word) == e);
}

TEST_CASE("ball counts do not depend on generator order") {
  CoxeterMatrix m(4);
  m.set(0, 1, Label(4));
  m.set(1, 2, Label(3));
  m.set(2, 3, Label::infinity());
  m.set(0, 3, Label(3));
  CoxeterMatrix p(4);
  const int perm[] = {2, 0, 3, 1};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) p.set(perm[i], perm[j], m.at(i, j));
  CHECK(enumerate_ball(build_system(m), 8).counts == enumerate_ball(build_system(p), 8).counts);
}

TEST_CASE("automaton counts agree with the tree walk") {
  std::mt19937 rng(17);
  const unsigned labels[] = {0, 2, 2, 3, 3, 4, 5, 6, 7};
  BallOptions tree, automaton;
  tree.method = BallMethod::Tree;
  automaton.method = BallMethod::Automaton;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 4;
    CoxeterMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        unsigned l = labels[rng() % std::size(labels)];
        m.set(i, j, l ? Label(l) : Label::infinity());
      }
    auto sys = build_system(m);
    INFO(sys.matrix_key());
    CHECK(enumerate_ball(sys, 9, automaton).counts == enumerate_ball(sys, 9, tree).counts);
  }
  for (auto& sys : {families::complete(5, 3), families::cube_skeleton(3), families::octahedron_skeleton(3),
                    families::path({5, 3, 3}), families::triangle(2, 3, 7)})
    CHECK(enumerate_ball(sys, 8, automaton).counts == enumerate_ball(sys, 8, tree).counts);
}

TEST_CASE("small roots") {
  // finite groups: every positive root is small
  CHECK(small_root_count(families::dihedral(5)) == 5);
  CHECK(small_root_count(families::path({3, 3})) == 6);
  // right-angled: only the simple roots
  CHECK(small_root_count(families::cube_skeleton(3)) == 8);
  // affine ~A2: simple roots and the three sums of two
  CHECK(small_root_count(families::triangle(3, 3, 3)) == 6);
}

TEST_CASE("enumerate_ball respects the cap") {
  BallOptions opts;
  opts.cap = 50;
  try {
    enumerate_ball(families::complete(4, 3), 10, opts);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  opts.method = BallMethod::Tree;
  CHECK_THROWS_AS(enumerate_ball(families::complete(4, 3), 10, opts), Error);
}

TEST_CASE("by-class counts split the length counts") {
  BallOptions opts;
  opts.by_class = true;
  auto c = enumerate_ball(families::dihedral(4), 4, opts);
  REQUIRE(c.by_class.size() == 5);
  CHECK(c.by_class[2].at({1, 1}) == 2);
  CHECK(c.by_class[3].at({2, 1}) == 1);
  CHECK(c.by_class[3].at({1, 2}) == 1);
}

TEST_CASE("probe_finiteness") {
  auto p = probe_finiteness(families::dihedral(5), 100);
  CHECK(p.finite);
  CHECK(p.size == 10);
  CHECK_FALSE(probe_finiteness(families::triangle(3, 3, 3), 1000).finite);
  CHECK(probe_finiteness(families::path({3, 3}), 1000).size == 24);
  CHECK(probe_finiteness(families::path({5, 3, 3}), 20000).size == 14400);
  CHECK_FALSE(probe_finiteness(families::infinite_dihedral(), 1000).finite);
}

TEST_CASE("coset_minimal") {
  auto i3 = families::dihedral(3);
  CHECK(format_word(i3, coset_minimal(i3, parse_word(i3, "st"), GenSet::single(1)).word) == "s");
  CHECK(coset_minimal(i3, Word{}, GenSet(0b11)).word.empty());
  auto dinf = families::infinite_dihedral();
  CHECK(format_word(dinf, coset_minimal(dinf, parse_word(dinf, "ts"), GenSet::single(0)).word) == "t");
  auto a3 = families::path({3, 3});
  // every coset of a parabolic has a unique minimal element, shorter than all others
  auto all = enumerate_ball(a3, 6, BallOptions{1000, true, false}).elements;
  GenSet T(0b011);
  std::map<NormalForm, int> reps;
  for (auto& e : all) ++reps[coset_minimal(a3, e.word, T)];
  CHECK(reps.size() == 4);
  for (auto& [u, n] : reps) CHECK(n == 6);
}

TEST_CASE("longest element") {
  CHECK(longest_element(families::path({3, 3})).length() == 6);
  CHECK(longest_element(families::path({5, 3})).length() == 15);
  CHECK(longest_element(families::dihedral(7)).length() == 7);
  CHECK_THROWS_AS(longest_element(families::infinite_dihedral(), 50), Error);
}
