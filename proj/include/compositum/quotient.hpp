#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "compositum/perm_group.hpp"

namespace compositum {

/// G/N as an explicit coset partition. Coset 0 is N itself; every coset is
/// represented by its least element, and cosets are numbered in the order of
/// those representatives.
class QuotientGroup {
 public:
  /// Throws NotASubgroup unless N <= G, NotNormal unless N is normal in G.
  QuotientGroup(const PermGroup& ambient, const PermGroup& normal_subgroup);

  const PermGroup& ambient() const { return ambient_; }
  const PermGroup& normal_subgroup() const { return normal_; }
  std::size_t order() const { return reps_.size(); }

  const Permutation& representative(std::size_t coset) const { return reps_[coset]; }
  std::vector<Permutation> coset(std::size_t i) const;
  std::size_t coset_of(const Permutation& g) const;
  std::size_t multiply(std::size_t a, std::size_t b) const {
    return table_[a * order() + b];
  }

  /// The regular action on cosets: coset i acts as x -> i*x. The point image
  /// of 0 (the trivial coset) recovers i.
  Permutation coset_permutation(std::size_t i) const;
  PermGroup as_perm_group() const;
  /// Preimage in G of a subgroup of as_perm_group().
  PermGroup preimage(const PermGroup& sub) const;

 private:
  PermGroup ambient_;
  PermGroup normal_;
  std::vector<Permutation> reps_;
  std::vector<std::uint32_t> element_coset_;  // ambient element index -> coset
  std::vector<std::uint32_t> table_;
};

}  // namespace compositum
