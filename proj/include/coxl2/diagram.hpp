#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "coxl2/coxeter_system.hpp"

namespace coxl2 {

/// Text form of a Coxeter system:
///
///   # comment
///   default 2|inf          (mandatory, first statement)
///   gen a b c              (one or more lines)
///   m a b 3                (label of a pair; unlisted pairs take the default)
///   assert ghs 2 | ghs <file> | disk | disk <n> | vcd <n> | coned
struct DiagramDocument {
  Label default_label = Label(2);
  std::vector<std::string> generators;
  std::vector<std::tuple<std::string, std::string, Label>> labels;  // in file order

  std::optional<int> assert_ghs;
  std::optional<std::string> assert_ghs_file;  // cellulation JSON, relative to the diagram
  bool assert_disk = false;
  std::optional<int> assert_disk_dim;
  std::optional<int> assert_vcd;
  bool assert_coned = false;

  /// Throws ValidationError for an invalid matrix.
  CoxeterSystem system() const;
  bool operator==(const DiagramDocument&) const = default;
};

/// Throws ParseError naming the line, or ValidationError.
DiagramDocument parse_diagram(const std::string& text);

/// Canonical text; parse_diagram(serialize_diagram(d)) == d.
std::string serialize_diagram(const DiagramDocument& doc);

/// Document listing every pair whose label differs from `default_label`.
DiagramDocument diagram_of(const CoxeterSystem& sys, Label default_label = Label(2));

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace coxl2
