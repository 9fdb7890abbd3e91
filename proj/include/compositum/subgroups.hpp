#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "compositum/element_mask.hpp"
#include "compositum/perm_group.hpp"

namespace compositum {

/// Multiplication table of a group over the indices of its sorted elements.
/// Index 0 is always the identity.
class CayleyTable {
 public:
  explicit CayleyTable(const PermGroup& group);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return n_; }
  std::uint32_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::uint32_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t index_of(const Permutation& p) const;

  /// Closure of the given element indices under the table product.
  ElementMask closure(const std::vector<std::uint32_t>& generators) const;
  ElementMask mask_of(const PermGroup& subgroup) const;

 private:
  PermGroup group_;
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

enum class Execution { Serial, Parallel };

/// Every subgroup of a group, canonically ordered (by order, then by element
/// list). Built bottom-up from cyclic subgroups by repeated joins.
class SubgroupLattice {
 public:
  struct Entry {
    ElementMask mask;
    std::vector<std::uint32_t> generators;  // element indices
    std::size_t order = 0;
  };

  explicit SubgroupLattice(const PermGroup& group, const Caps& caps = {},
                           Execution exec = Execution::Parallel);

  const PermGroup& group() const { return table_.group(); }
  const CayleyTable& table() const { return table_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

  PermGroup subgroup(std::size_t i) const;
  std::vector<PermGroup> subgroups() const;
  std::optional<std::size_t> find(const PermGroup& h) const;
  std::optional<std::size_t> find(const ElementMask& m) const;

  /// Is entry `n` normal in entry `g`? Assumes n <= g.
  bool normal_in(std::size_t n, std::size_t g) const;

 private:
  CayleyTable table_;
  std::vector<Entry> entries_;
  std::unordered_map<ElementMask, std::size_t, ElementMaskHash> lookup_;
};

/// All subgroups of `g` (OpenMP-parallel join rounds). Throws CapExceeded when
/// |g| > caps.subgroups.
std::vector<PermGroup> all_subgroups(const PermGroup& g, const Caps& caps = {});
/// Single-threaded reference; output is identical to all_subgroups.
std::vector<PermGroup> all_subgroups_serial(const PermGroup& g,
                                            const Caps& caps = {});

}  // namespace compositum
