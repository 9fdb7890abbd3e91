#pragma once
// Test-only oracles: exhaustive subset filtering, independent of the
// cyclic-join enumeration in the library.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "compositum/perm_group.hpp"

namespace oracle {

using compositum::Permutation;
using compositum::PermGroup;

/// Every subset of G that contains the identity and is closed under
/// products (hence a subgroup, G being finite). Feasible for |G| <= 16.
inline std::vector<std::vector<Permutation>> subgroups_by_subset_filter(const PermGroup& g) {
  const auto& el = g.elements();
  const std::size_t n = el.size();
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mul[a][b] = static_cast<std::size_t>(
          std::lower_bound(el.begin(), el.end(), el[a] * el[b]) - el.begin());
    }
  }
  std::vector<std::vector<Permutation>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!(s & 1)) continue;  // element 0 is the identity
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!((s >> a) & 1)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (((s >> b) & 1) && !((s >> mul[a][b]) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Permutation> sub;
    for (std::size_t a = 0; a < n; ++a) {
      if ((s >> a) & 1) sub.push_back(el[a]);
    }
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

/// gHg^-1 == H checked element by element over all of G.
inline bool normal_by_conjugation(const PermGroup& h, const PermGroup& g) {
  for (const auto& x : g.elements()) {
    for (const auto& s : h.elements()) {
      if (!h.contains(x * s * x.inverse())) return false;
    }
  }
  return true;
}

}  // namespace oracle
