#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "compositum/perm_group.hpp"
#include "compositum/quotient.hpp"

namespace compositum {

/// An abstract finite group by its multiplication table; index 0 is the
/// identity.
struct GroupTable {
  std::size_t n = 0;
  std::vector<std::uint32_t> mul;

  std::uint32_t operator()(std::size_t a, std::size_t b) const { return mul[a * n + b]; }
  static GroupTable of(const PermGroup& g);      // indices into g.elements()
  static GroupTable of(const QuotientGroup& q);  // coset indices
};

/// bijection[i] is the image of source element i.
using Bijection = std::vector<std::size_t>;

/// All isomorphisms between two abstract groups, in lexicographic order of
/// the images of a fixed generating set. Empty iff non-isomorphic.
std::vector<Bijection> find_isomorphisms(const GroupTable& a, const GroupTable& b,
                                         std::size_t cap = Caps{}.iso);
std::vector<Bijection> find_isomorphisms(const PermGroup& a, const PermGroup& b,
                                         std::size_t cap = Caps{}.iso);
std::vector<Bijection> find_isomorphisms(const QuotientGroup& a,
                                         const QuotientGroup& b,
                                         std::size_t cap = Caps{}.iso);

}  // namespace compositum
