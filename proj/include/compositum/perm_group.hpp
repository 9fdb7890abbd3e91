#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "compositum/permutation.hpp"

namespace compositum {

/// Size limits for the explicit-enumeration algorithms.
struct Caps {
  std::size_t closure = 20000;   // largest group closure() may build
  std::size_t subgroups = 2000;  // largest group whose lattice is enumerated
  std::size_t iso = 64;          // largest groups find_isomorphisms accepts
};

/// A finite permutation group stored as its full, sorted element list.
///
/// Values are immutable and share their element storage, so copies are cheap.
/// Two groups compare equal iff they have the same degree and element set;
/// the generating set is presentation only.
class PermGroup {
 public:
  PermGroup() : PermGroup(trivial(1)) {}

  /// Group generated by `generators` on {1..degree}. Throws CapExceeded when
  /// the closure grows past `cap` elements.
  static PermGroup generated(std::size_t degree,
                             const std::vector<Permutation>& generators,
                             std::size_t cap = Caps{}.closure);
  static PermGroup trivial(std::size_t degree);

  /// Wraps an element list that is already known to be a group. Elements are
  /// sorted here; the caller guarantees closure.
  static PermGroup from_elements(std::size_t degree,
                                 std::vector<Permutation> elements,
                                 std::vector<Permutation> generators);

  /// Like from_elements, but derives a short generating set greedily.
  static PermGroup from_closed_set(std::size_t degree,
                                   std::vector<Permutation> elements);

  std::size_t degree() const { return data_->degree; }
  std::size_t order() const { return data_->elements.size(); }
  const std::vector<Permutation>& elements() const { return data_->elements; }
  const std::vector<Permutation>& generators() const {
    return data_->generators;
  }
  const Permutation& identity() const { return data_->elements.front(); }

  bool contains(const Permutation& p) const;
  /// Position of `p` in elements(), if present.
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_trivial() const { return order() == 1; }

  /// Generators in cycle notation, one per line, preceded by "degree n".
  std::string to_spec() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);
  /// Canonical order: by group order, then lexicographically by element list.
  friend std::strong_ordering operator<=>(const PermGroup& a,
                                          const PermGroup& b);

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Permutation> elements;
    std::vector<Permutation> generators;
  };
  explicit PermGroup(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// [G : H]; requires H <= G.
std::size_t index(const PermGroup& h, const PermGroup& g);
PermGroup intersection(const PermGroup& a, const PermGroup& b);
/// <A, B>
PermGroup join(const PermGroup& a, const PermGroup& b,
               std::size_t cap = Caps{}.closure);
/// <H, x>
PermGroup join(const PermGroup& h, const Permutation& x,
               std::size_t cap = Caps{}.closure);

}  // namespace compositum
