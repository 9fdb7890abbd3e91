#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compositum/numberfield.hpp"
#include "compositum/perm_group.hpp"

namespace compositum {

/// Group spec text: blocks of "degree n" followed by one generator per line
/// in cycle notation ("()" for the identity), each block ended by a blank
/// line or end of input. Lines starting with '#' are comments. Throws
/// ParseError (with a line number) or InvalidPermutation.
std::vector<PermGroup> parse_group_specs(std::string_view text, const Caps& caps = {});
std::vector<PermGroup> read_group_file(const std::filesystem::path& path, const Caps& caps = {});

/// Inverse of parse_group_specs for a single group.
std::string format_group_spec(const PermGroup& g);

/// {"label": ..., "min_poly": [c0, ..., 1], "elements": {"name": [r0, r1, ...]}}
/// with rationals as integers or "p/q" strings. Element order follows the file.
struct FieldFile {
  NumberFieldSpec field;
  std::vector<std::pair<std::string, AlgebraicNumber>> elements;

  std::vector<AlgebraicNumber> values() const;
};

/// Throws ParseError on malformed input (including non-integral JSON numbers,
/// which would not be exact), plus the errors of NumberFieldSpec.
FieldFile parse_field_spec(std::string_view json_text, bool assert_irreducible = false);
FieldFile read_field_file(const std::filesystem::path& path, bool assert_irreducible = false);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace compositum
