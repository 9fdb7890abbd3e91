#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "compositum/isomorphism.hpp"
#include "compositum/perm_group.hpp"
#include "compositum/subgroups.hpp"

namespace compositum {

/// (a, b) on the disjoint union, a on the first a.degree() points.
Permutation embed_pair(const Permutation& a, const Permutation& b);
Permutation project_left(const Permutation& g, std::size_t left_degree);
Permutation project_right(const Permutation& g, std::size_t left_degree);

/// A x B realized on the disjoint union of the two domains: points
/// [0, deg A) carry A, the rest carry B.
class ProductGroup {
 public:
  ProductGroup(PermGroup left, PermGroup right, const Caps& caps = {});

  const PermGroup& left() const { return left_; }
  const PermGroup& right() const { return right_; }
  const PermGroup& full() const { return full_; }
  std::size_t degree() const { return left_.degree() + right_.degree(); }

  Permutation embed(const Permutation& a, const Permutation& b) const;
  Permutation project_left(const Permutation& g) const;
  Permutation project_right(const Permutation& g) const;
  /// H x K for H <= A, K <= B.
  PermGroup product_of(const PermGroup& h, const PermGroup& k) const;

 private:
  PermGroup left_, right_, full_;
};

/// Goursat datum (A1, A2, B1, B2, phi) with A1 normal in A2 <= A and
/// B1 normal in B2 <= B. phi maps coset indices of A2/A1 to coset indices of
/// B2/B1, numbered as in QuotientGroup.
struct Quintuple {
  PermGroup a1, a2, b1, b2;
  std::vector<std::size_t> phi;

  friend bool operator==(const Quintuple&, const Quintuple&) = default;
};

/// Throws InvalidQuintuple unless the containments, normality and the
/// isomorphism property of phi all hold.
void validate(const ProductGroup& ab, const Quintuple& q);

/// {(a, b) in A2 x B2 : phi(a A1) = b B1}
PermGroup quintuple_to_subgroup(const ProductGroup& ab, const Quintuple& q);
Quintuple subgroup_to_quintuple(const ProductGroup& ab, const PermGroup& g);

/// Lower bounds on the kernels: S <= A1 and U <= B1. These cut the
/// enumeration down to subgroups containing S x U.
struct GoursatFloor {
  std::optional<PermGroup> left;
  std::optional<PermGroup> right;
};

/// Enumerates subgroups of A x B quintuple by quintuple from precomputed
/// subgroup lattices of A and B.
class GoursatEnumerator {
 public:
  GoursatEnumerator(const ProductGroup& ab,
                    std::shared_ptr<const SubgroupLattice> left,
                    std::shared_ptr<const SubgroupLattice> right,
                    const Caps& caps = {});
  GoursatEnumerator(const ProductGroup& ab, const Caps& caps = {});

  const ProductGroup& product() const { return ab_; }

  /// Visits (quintuple, subgroup) in the deterministic enumeration order;
  /// stops early when the visitor returns false.
  void for_each(const GoursatFloor& floor,
                const std::function<bool(const Quintuple&, const PermGroup&)>& visit) const;

  /// Every subgroup above the floor, canonically sorted. Throws Internal if
  /// two quintuples produce the same subgroup.
  std::vector<PermGroup> subgroups(const GoursatFloor& floor = {},
                                   Execution exec = Execution::Parallel) const;

  /// Number of subgroups above the floor, without materializing them.
  std::size_t count(const GoursatFloor& floor = {}) const;

 private:
  struct NormalPair {
    std::size_t sub, sup;  // lattice indices: sub normal in sup
    std::vector<std::vector<std::uint32_t>> cosets;  // ambient element indices
    GroupTable quotient;
  };
  struct Task {
    std::size_t left, right;  // indices into left_pairs_ / right_pairs_
  };

  static std::vector<NormalPair> normal_pairs(const SubgroupLattice& l);
  std::vector<Task> tasks(const GoursatFloor& floor) const;
  std::vector<Bijection> isomorphisms(const Task& t) const;
  Quintuple quintuple(const Task& t, const Bijection& phi) const;
  PermGroup build(const Task& t, const Bijection& phi) const;

  ProductGroup ab_;
  Caps caps_;
  std::shared_ptr<const SubgroupLattice> left_, right_;
  std::vector<NormalPair> left_pairs_, right_pairs_;
};

/// All subgroups of A x B via the Goursat correspondence (OpenMP over
/// quintuple classes).
std::vector<PermGroup> enumerate_product_subgroups(const PermGroup& a,
                                                   const PermGroup& b,
                                                   const Caps& caps = {});
/// Single-threaded reference; identical output.
std::vector<PermGroup> enumerate_product_subgroups_serial(const PermGroup& a,
                                                          const PermGroup& b,
                                                          const Caps& caps = {});

}  // namespace compositum
