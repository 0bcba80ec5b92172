#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cmred/group.hpp"

namespace cmred {

/// Parses 1-based cycle notation. Grammar:
///   input := [ "deg=" int ";" ] perm ( ";" perm )*
///   perm  := cycle+ | "()"
///   cycle := "(" int ("," int)+ ")"
/// Whitespace between tokens is ignored. Cycles inside one perm need not be
/// disjoint and compose left to right. The degree is the largest point seen
/// unless the deg= header raises it. Errors carry byte offsets.
std::vector<Permutation> parse_cycles(std::string_view text);

/// ';'-joined canonical cycle strings; inverse of parse_cycles on its output.
std::string print_cycles(const std::vector<Permutation>& perms);

/// A recipe for building a group. Parses from and re-serializes to its own
/// grammar losslessly, e.g. "cyclic:6", "product:alternating:4,cyclic:2",
/// "wreath-c2:symmetric:3", "builtin:G40_12", "generators:(1,2)(3,4)",
/// "file:groups/my_group.json".
struct GroupSpec {
  enum class Kind {
    Generators,
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Product,
    WreathC2,
    Builtin,
    File,
  };

  Kind kind = Kind::Cyclic;
  std::size_t n = 1;                       // cyclic/dihedral/symmetric/alternating
  std::vector<GroupSpec> factors;          // product (2 entries), wreath-c2 (1)
  std::string text;                        // generators text, builtin name, file path

  static GroupSpec parse(std::string_view spec);
  /// Parses a comma-separated list of specs (product commas bind tighter).
  static std::vector<GroupSpec> parse_list(std::string_view specs);

  std::string to_string() const;
};

struct LabeledGroup {
  std::string label;
  FiniteGroup group;
};

/// Builds the group a spec describes. The label is the spec text, or the
/// `label` field for file-loaded groups.
LabeledGroup build_group(const GroupSpec& spec,
                         std::size_t order_cap = FiniteGroup::default_order_cap);
LabeledGroup build_group(std::string_view spec_text,
                         std::size_t order_cap = FiniteGroup::default_order_cap);

/// One row of the built-in catalog listing: construction plus usage notes.
struct CatalogEntry {
  std::string spec;
  std::string order;   // textual; constructors list a formula
  std::string degree;
  std::string note;
};

const std::vector<CatalogEntry>& builtin_catalog();

}  // namespace cmred
