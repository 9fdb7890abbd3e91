#pragma once

#include <string_view>
#include <vector>

#include "compositum/diagonal.hpp"
#include "compositum/perm_group.hpp"

namespace compositum {

/// Galois data of a field K of degree k: T = Gal(K~/Q) and S = Gal(K~/K).
class GaloisDatum {
 public:
  /// Throws NotAProperSubgroup unless S < T, and PreconditionFailed when S has
  /// a nontrivial core in T (unless allowed, for exploring malformed data).
  GaloisDatum(PermGroup closure_group, PermGroup stabilizer, bool allow_nontrivial_core = false);

  const PermGroup& closure_group() const { return t_; }
  const PermGroup& stabilizer() const { return s_; }
  std::uint64_t degree() const { return t_.order() / s_.order(); }
  bool core_trivial() const { return core_trivial_; }

 private:
  PermGroup t_, s_;
  bool core_trivial_ = true;
};

enum class IntermediateLabel { ContainsK, SubfieldOfL, Diagonal };
std::string_view to_string(IntermediateLabel l);

struct IntermediateGroup {
  PermGroup group;
  IntermediateLabel label;
  friend bool operator==(const IntermediateGroup&, const IntermediateGroup&) = default;
};

struct Classification {
  std::vector<IntermediateGroup> intermediates;  // canonical subgroup order
  std::size_t contains_k = 0, subfield_of_l = 0, diagonal = 0;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Labels every S x U <= G <= T x V. A group above T x U fixes a subfield of
/// L; a group inside S x V fixes a field containing K; the rest are diagonal.
/// Precedence on overlap (impossible for S < T): ContainsK, SubfieldOfL.
Classification classify_intermediates(const GaloisDatum& k, const GaloisDatum& l,
                                      const Caps& caps = {});

enum class Tri { Yes, No, Unknown };
std::string_view to_string(Tri t);
Tri parse_tri(std::string_view text);

struct HypothesisFlags {
  Tri disc_bound_ok = Tri::Unknown;  // condition (i)
  Tri coprime_ok = Tri::Unknown;     // condition (ii)
};

struct HypothesisReport {
  std::uint64_t k = 0, ell = 0;
  Tri cond_i = Tri::Unknown, cond_ii = Tri::Unknown;
  bool cond_iii = false;            // S maximal in T: no proper intermediate field
  bool cond_iv = false;             // operative reading: S not normal, or k does not divide l
  bool cond_iv_galois_reading = false;  // S nontrivial, or k does not divide l
  bool readings_agree = true;
  Tri overall = Tri::Unknown;
  friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

HypothesisReport check_theorem_hypotheses(const GaloisDatum& k, std::uint64_t ell,
                                          const HypothesisFlags& flags = {},
                                          const Caps& caps = {});

/// No diagonal intermediate group. Cross-checked against decide(); a
/// disagreement throws Internal.
bool verify_bridge(const GaloisDatum& k, const GaloisDatum& l, const Caps& caps = {});

}  // namespace compositum
