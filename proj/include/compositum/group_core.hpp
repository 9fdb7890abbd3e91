#pragma once

#include <cstdint>
#include <optional>

#include "compositum/perm_group.hpp"

namespace compositum {

/// gHg^-1 = H for every g in G. Throws NotASubgroup unless H <= G.
bool is_normal(const PermGroup& h, const PermGroup& g);

/// No K with H < K < G. Throws NotAProperSubgroup unless H < G.
bool is_maximal(const PermGroup& h, const PermGroup& g,
                std::size_t cap = Caps{}.closure);

/// Largest subgroup of G in which H is normal.
PermGroup normalizer(const PermGroup& h, const PermGroup& g);

/// Largest normal subgroup of G contained in H.
PermGroup normal_core(const PermGroup& h, const PermGroup& g);

/// A Sylow p-subgroup of G. When `containing` is given it must be a
/// p-subgroup of G, and the result contains it.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p,
                         const std::optional<PermGroup>& containing = {});

/// Nilpotency via "every Sylow subgroup is normal".
bool is_nilpotent(const PermGroup& g);
/// Nilpotency via "every proper subgroup is properly contained in its
/// normalizer". Enumerates the subgroup lattice, so it respects caps.subgroups.
bool is_nilpotent_by_normalizers(const PermGroup& g, const Caps& caps = {});

bool is_p_group(const PermGroup& g, std::uint64_t p);

/// First element (canonical order) of exact order p.
Permutation element_of_order_p(const PermGroup& g, std::uint64_t p);

}  // namespace compositum
