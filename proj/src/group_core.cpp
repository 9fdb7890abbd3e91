#include "compositum/group_core.hpp"

#include <unordered_set>
#include <vector>

#include "compositum/arith.hpp"
#include "compositum/error.hpp"
#include "compositum/subgroups.hpp"

namespace compositum {

namespace {

void require_subgroup(const PermGroup& h, const PermGroup& g) {
  if (!h.is_subgroup_of(g)) {
    fail(ErrorKind::NotASubgroup, "expected H <= G");
  }
}

bool normalizes(const Permutation& x, const PermGroup& h) {
  if (h.generators().empty()) return true;
  const Permutation xi = x.inverse();
  for (const auto& s : h.generators()) {
    if (!h.contains(x * s * xi)) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

bool is_normal(const PermGroup& h, const PermGroup& g) {
  require_subgroup(h, g);
  for (const auto& x : g.generators()) {
    if (!normalizes(x, h)) return false;
  }
  return true;
}

bool is_maximal(const PermGroup& h, const PermGroup& g, std::size_t cap) {
  require_subgroup(h, g);
  if (h.order() == g.order()) {
    fail(ErrorKind::NotAProperSubgroup, "expected H < G");
  }
  // Every intermediate K contains some <H, x> with x outside H, so H is
  // maximal iff each such join is all of G. Elements already covered by a
  // smaller join need not be tried again.
  std::unordered_set<Permutation, PermutationHash> covered(h.elements().begin(),
                                                           h.elements().end());
  for (const auto& x : g.elements()) {
    if (covered.count(x)) continue;
    PermGroup k = join(h, x, cap);
    if (k.order() != g.order()) return false;
    covered.insert(x);
  }
  return true;
}

PermGroup normalizer(const PermGroup& h, const PermGroup& g) {
  require_subgroup(h, g);
  std::vector<Permutation> elems;
  for (const auto& x : g.elements()) {
    if (normalizes(x, h)) elems.push_back(x);
  }
  return PermGroup::from_closed_set(g.degree(), std::move(elems));
}

PermGroup normal_core(const PermGroup& h, const PermGroup& g) {
  require_subgroup(h, g);
  std::vector<Permutation> elems;
  for (const auto& s : h.elements()) {
    bool inside = true;
    for (const auto& x : g.elements()) {
      if (!h.contains(x.inverse() * s * x)) {
        inside = false;
        break;
      }
    }
    if (inside) elems.push_back(s);
  }
  return PermGroup::from_closed_set(g.degree(), std::move(elems));
}

bool is_p_group(const PermGroup& g, std::uint64_t p) {
  std::size_t n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p,
                         const std::optional<PermGroup>& containing) {
  require_prime(p);
  PermGroup current = containing.value_or(PermGroup::trivial(g.degree()));
  require_subgroup(current, g);
  if (!is_p_group(current, p)) {
    fail(ErrorKind::PreconditionFailed, "subgroup to extend is not a p-group");
  }
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;

  // A p-subgroup P that is not Sylow has p | [N(P) : P]; adjoin an element of
  // N(P) whose image in N(P)/P has order p.
  while (current.order() < target) {
    const PermGroup n = normalizer(current, g);
    const Permutation* step = nullptr;
    for (const auto& x : n.elements()) {
      if (!current.contains(x) && current.contains(x.pow(static_cast<long long>(p)))) {
        step = &x;
        break;
      }
    }
    if (step == nullptr) {
      fail(ErrorKind::Internal, "no p-element in N(P)/P below a Sylow order");
    }
    current = join(current, *step);
  }
  return current;
}

bool is_nilpotent(const PermGroup& g) {
  for (auto p : prime_divisors(g.order())) {
    if (!is_normal(sylow_subgroup(g, p), g)) return false;
  }
  return true;
}

bool is_nilpotent_by_normalizers(const PermGroup& g, const Caps& caps) {
  const SubgroupLattice lattice(g, caps);
  const auto& t = lattice.table();
  for (std::size_t i = 0; i + 1 < lattice.size(); ++i) {
    const auto& h = lattice[i];
    // Look for any element outside H that normalizes it.
    bool grows = false;
    for (std::uint32_t x = 0; x < t.size() && !grows; ++x) {
      if (h.mask.test(x)) continue;
      bool ok = true;
      for (auto s : h.generators) {
        if (!h.mask.test(t.mul(t.mul(x, s), t.inv(x)))) {
          ok = false;
          break;
        }
      }
      grows = ok;
    }
    if (!grows) return false;
  }
  return true;
}

Permutation element_of_order_p(const PermGroup& g, std::uint64_t p) {
  require_prime(p);
  if (g.order() % p != 0) {
    fail(ErrorKind::PrimeDoesNotDivideOrder,
         std::to_string(p) + " does not divide " + std::to_string(g.order()));
  }
  for (const auto& x : g.elements()) {
    if (x.order() == p) return x;
  }
  fail(ErrorKind::Internal, "Cauchy element not found");
}

}  // namespace compositum
