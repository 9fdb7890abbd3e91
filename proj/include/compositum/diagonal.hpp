#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <utility>

#include "compositum/goursat.hpp"
#include "compositum/perm_group.hpp"
#include "compositum/subgroups.hpp"

namespace compositum {

/// S < T and U < V. Intermediate groups S x U <= G <= T x V live on the
/// disjoint union of the domains of T and V.
class DiagonalInstance {
 public:
  DiagonalInstance(PermGroup s, PermGroup t, PermGroup u, PermGroup v,
                   const Caps& caps = {});

  /// Shares precomputed subgroup lattices of T and V across many instances.
  DiagonalInstance with_lattices(std::shared_ptr<const SubgroupLattice> t_lattice,
                                 std::shared_ptr<const SubgroupLattice> v_lattice) const;

  const PermGroup& s() const { return s_; }
  const PermGroup& t() const { return t_; }
  const PermGroup& u() const { return u_; }
  const PermGroup& v() const { return v_; }
  const Caps& caps() const { return caps_; }

  std::shared_ptr<const SubgroupLattice> t_lattice() const;
  std::shared_ptr<const SubgroupLattice> v_lattice() const;
  ProductGroup product() const { return ProductGroup(t_, v_, caps_); }

 private:
  PermGroup s_, t_, u_, v_;
  Caps caps_;
  std::shared_ptr<const SubgroupLattice> t_lattice_, v_lattice_;
};

enum class Verdict { Diagonal, NoDiagonal };
enum class Method { MaxNonNormal, IndexDivisibility, BruteForce, WitnessConstruction };

std::string_view to_string(Verdict v);
std::string_view to_string(Method m);

struct NRPair {
  PermGroup n, r;
  friend bool operator==(const NRPair&, const NRPair&) = default;
};

struct DecisionReport {
  Verdict verdict = Verdict::NoDiagonal;
  Method method = Method::BruteForce;
  std::optional<PermGroup> witness;  // a diagonal G
  std::optional<NRPair> pair;        // (N, R) behind the witness, if any
  bool certificate_checked = false;  // witness re-verified with is_diagonal
  std::size_t intermediates_scanned = 0;

  friend bool operator==(const DecisionReport&, const DecisionReport&) = default;
};

/// G contains neither T x U nor lies inside S x V. Throws NotIntermediate
/// unless S x U <= G <= T x V.
bool is_diagonal(const PermGroup& g, const DiagonalInstance& inst);

/// Scans every intermediate group (Goursat enumeration above the floor S, U).
DecisionReport decide_brute(const DiagonalInstance& inst);

/// NoDiagonal when S is maximal and not normal in T; nullopt otherwise.
std::optional<DecisionReport> criterion_max_nonnormal(const DiagonalInstance& inst);

/// Applies when S is normal of prime index p in T: a diagonal exists iff some
/// U <= N normal in R <= V has [R : N] = p. nullopt when inapplicable.
std::optional<DecisionReport> criterion_index(const DiagonalInstance& inst);

/// The diagonal from the quintuple (S, T, N, R, phi) for an isomorphism phi
/// of the two order-p quotients. Throws InvalidWitness on bad input.
PermGroup construct_from_nr(const DiagonalInstance& inst, const PermGroup& n,
                            const PermGroup& r, std::size_t phi_choice = 0);

/// Cheap criteria first, then brute force.
DecisionReport decide(const DiagonalInstance& inst);

/// Witness report from a known (N, R) pair.
DecisionReport report_from_witness(const DiagonalInstance& inst, const NRPair& nr);

// Constructive (N, R) searches. Each throws PreconditionFailed when its
// hypotheses fail; p must divide [V : U] in all three.

/// U normal in V: N = U, R = preimage of an order-p subgroup of V/U.
NRPair normal_case_witness(const PermGroup& u, const PermGroup& v, std::uint64_t p);
/// V nilpotent: climb U = N_0 <= N_1 = N_V(N_0) <= ... to a step whose index
/// p divides, then apply the normal case there.
NRPair nilpotent_case_witness(const PermGroup& u, const PermGroup& v, std::uint64_t p);
/// U a p-group: apply the nilpotent case inside a Sylow p-subgroup P >= U.
NRPair pgroup_case_witness(const PermGroup& u, const PermGroup& v, std::uint64_t p);

/// Instance forms: p = [T : S] with S normal in T. nullopt when the instance
/// does not satisfy the case's hypotheses.
std::optional<NRPair> witness_normal_case(const DiagonalInstance& inst);
std::optional<NRPair> witness_nilpotent_case(const DiagonalInstance& inst);
std::optional<NRPair> witness_pgroup_case(const DiagonalInstance& inst);

}  // namespace compositum
