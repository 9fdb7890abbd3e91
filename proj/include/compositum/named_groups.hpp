#pragma once

#include <cstddef>

#include "compositum/perm_group.hpp"

namespace compositum::named {

PermGroup cyclic(std::size_t n);       // on n points (n >= 1)
PermGroup symmetric(std::size_t n);    // S_n on n points
PermGroup alternating(std::size_t n);  // A_n on n points
PermGroup dihedral(std::size_t n);     // order 2n on n points (n >= 3)
PermGroup klein_four();                // <(1 2), (3 4)>
PermGroup quaternion();                // Q_8, regular on 8 points
/// S_{n-1} as the stabilizer of point n inside S_n.
PermGroup point_stabilizer(std::size_t n);
/// A x B acting on the disjoint union of the two domains.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
/// The same group with points relabeled by `relabel` (conjugation).
PermGroup relabeled(const PermGroup& g, const Permutation& relabel);

}  // namespace compositum::named
