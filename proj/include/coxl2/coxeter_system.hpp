#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "coxl2/error.hpp"

namespace coxl2 {

/// Edge label m_st. Infinity is its own value, never a sentinel integer.
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(std::uint32_t m) : m_(m) {}
  static constexpr Label infinity() { return Label(kInf); }

  constexpr bool is_infinite() const { return m_ == kInf; }
  constexpr bool is_finite() const { return m_ != kInf; }
  /// Only meaningful for finite labels.
  constexpr std::uint32_t value() const { return m_; }

  constexpr auto operator<=>(const Label&) const = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(m_); }
  static Label parse(const std::string& token);

 private:
  static constexpr std::uint32_t kInf = 0xffffffffu;
  std::uint32_t m_ = 1;
};

/// Subset of generator indices, up to 64 generators.
class GenSet {
 public:
  using Bits = std::uint64_t;
  static constexpr std::size_t kMaxGenerators = 64;

  constexpr GenSet() = default;
  constexpr explicit GenSet(Bits b) : bits_(b) {}

  static constexpr GenSet full(std::size_t n) {
    return GenSet(n >= 64 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }
  static constexpr GenSet single(int i) { return GenSet(Bits{1} << i); }

  constexpr Bits bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr GenSet with(int i) const { return GenSet(bits_ | (Bits{1} << i)); }
  constexpr GenSet without(int i) const { return GenSet(bits_ & ~(Bits{1} << i)); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr int first() const { return bits_ ? std::countr_zero(bits_) : -1; }

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend constexpr GenSet operator-(GenSet a, GenSet b) { return GenSet(a.bits_ & ~b.bits_); }
  constexpr auto operator<=>(const GenSet&) const = default;

  std::vector<int> members() const;

 private:
  Bits bits_ = 0;
};

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// Diagonal 1, every off-diagonal entry `fill`.
  explicit CoxeterMatrix(std::size_t n, Label fill = Label(2));
  /// Raw rows, not validated. Use CoxeterSystem to validate.
  static CoxeterMatrix from_rows(std::vector<std::vector<Label>> rows);

  std::size_t size() const { return n_; }
  Label at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  /// Sets both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, Label m);

  /// Throws DiagonalNotOne, Asymmetric or OffDiagonalBelowTwo.
  void validate() const;

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Label> entries_;
};

class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  /// Validates the matrix. Empty `names` gives s1..sn.
  explicit CoxeterSystem(CoxeterMatrix m, std::vector<std::string> names = {});

  std::size_t rank() const { return matrix_.size(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  Label label(int i, int j) const { return matrix_.at(i, j); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Throws UnknownGenerator.
  int index_of(const std::string& name) const;
  GenSet all() const { return GenSet::full(rank()); }
  GenSet subset(const std::vector<std::string>& names) const;

  /// Conjugacy classes, ordered by smallest member.
  const std::vector<GenSet>& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  int class_of(int gen) const { return class_of_[gen]; }

  /// Canonical text of labels and names; stable across sessions.
  std::string canonical_key() const;
  /// Labels only (generator names dropped).
  std::string matrix_key() const;

  bool operator==(const CoxeterSystem& o) const { return matrix_ == o.matrix_ && names_ == o.names_; }

 private:
  CoxeterMatrix matrix_;
  std::vector<std::string> names_;
  std::vector<GenSet> classes_;
  std::vector<int> class_of_;
};

CoxeterSystem build_system(const CoxeterMatrix& m, std::vector<std::string> names = {});

/// Generators joined by a path of odd finite labels.
std::vector<GenSet> generator_classes(const CoxeterSystem& sys);

/// Components of the diagram (edges where m >= 3, including inf) restricted to `within`.
std::vector<GenSet> irreducible_components(const CoxeterSystem& sys, GenSet within);
inline std::vector<GenSet> irreducible_components(const CoxeterSystem& sys) {
  return irreducible_components(sys, sys.all());
}

/// Special subsystem on T, generators kept in ambient order.
CoxeterSystem restrict(const CoxeterSystem& sys, GenSet T);
CoxeterSystem restrict(const CoxeterSystem& sys, const std::vector<std::string>& names);

std::string format_subset(const CoxeterSystem& sys, GenSet T);

}  // namespace coxl2
