#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxl2/coxeter_system.hpp"

namespace coxl2 {

/// Sequence of generator indices.
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> l) : letters(l) {}
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int operator[](std::size_t i) const { return letters[i]; }
  Word reversed() const { return Word(std::vector<int>(letters.rbegin(), letters.rend())); }
  Word operator+(const Word& o) const;
  auto operator<=>(const Word&) const = default;
};

/// Shortlex-least reduced word of an element.
struct NormalForm {
  Word word;
  bool canonical = true;

  std::size_t length() const { return word.size(); }
  auto operator<=>(const NormalForm&) const = default;
};

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

/// Names separated by spaces, or packed letters when every name is one character.
/// "e", "1" and the empty string denote the identity.
Word parse_word(const CoxeterSystem& sys, const std::string& text);
std::string format_word(const CoxeterSystem& sys, const Word& w, const std::string& sep = "");

NormalForm normal_form(const CoxeterSystem& sys, const Word& w);
std::size_t length(const CoxeterSystem& sys, const Word& w);
GenSet left_descents(const CoxeterSystem& sys, const Word& w);
GenSet right_descents(const CoxeterSystem& sys, const Word& w);

enum class BallMethod {
  Auto,       // automaton when only counts are wanted, tree walk otherwise
  Tree,       // visits every element
  Automaton,  // counts through the small-root automaton; no elements, no class split
};

struct BallOptions {
  std::size_t cap = kDefaultEnumerationCap;
  bool collect_elements = false;
  /// Also count elements by class-exponent vector (length of the word per class).
  bool by_class = false;
  BallMethod method = BallMethod::Auto;
};

struct BallCensus {
  std::vector<std::uint64_t> counts;  // counts[k] = #elements of length k
  /// by_class[k][e] = #elements of length k with class exponent vector e.
  std::vector<std::map<std::vector<std::uint32_t>, std::uint64_t>> by_class;
  std::vector<NormalForm> elements;  // in DFS shortlex order when collected

  std::uint64_t total() const;
};

/// All elements of length <= L. Throws CapExceeded when more than `cap` elements.
BallCensus enumerate_ball(const CoxeterSystem& sys, std::size_t L, const BallOptions& opts = {});

/// Number of small roots, i.e. states the counting automaton tracks per element.
std::size_t small_root_count(const CoxeterSystem& sys);

struct FinitenessProbe {
  bool finite = false;
  std::uint64_t size = 0;      // group order when finite
  std::uint64_t explored = 0;  // elements visited
};

/// Explores balls of growing radius until a sphere is empty or `cap` elements are seen.
FinitenessProbe probe_finiteness(const CoxeterSystem& sys, std::size_t cap);

/// Shortest element of the coset wW_T.
NormalForm coset_minimal(const CoxeterSystem& sys, const Word& w, GenSet T);

/// Longest element of a finite group. Throws NotFinite after `cap` steps.
NormalForm longest_element(const CoxeterSystem& sys, std::size_t cap = 4096);

}  // namespace coxl2
