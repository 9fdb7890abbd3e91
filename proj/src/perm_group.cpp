#include "compositum/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "compositum/error.hpp"

namespace compositum {

PermGroup PermGroup::generated(std::size_t degree,
                               const std::vector<Permutation>& generators,
                               std::size_t cap) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      fail(ErrorKind::InvalidPermutation,
           "generator of degree " + std::to_string(g.degree()) +
               " in a group of degree " + std::to_string(degree));
    }
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
      gens.push_back(g);
    }
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements;
  std::deque<Permutation> queue;
  Permutation id(degree);
  seen.insert(id);
  elements.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = g * x;
      if (seen.insert(y).second) {
        if (elements.size() >= cap) {
          fail(ErrorKind::CapExceeded,
               "closure exceeds " + std::to_string(cap) + " elements");
        }
        elements.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return from_elements(degree, std::move(elements), std::move(gens));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return from_elements(degree, {Permutation(degree)}, {});
}

PermGroup PermGroup::from_elements(std::size_t degree,
                                   std::vector<Permutation> elements,
                                   std::vector<Permutation> generators) {
  std::sort(elements.begin(), elements.end());
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = std::move(elements);
  // Drop identities and repeats, keeping first occurrences in order.
  std::vector<Permutation> gens;
  for (auto& g : generators) {
    if (g.is_identity() || std::find(gens.begin(), gens.end(), g) != gens.end()) continue;
    gens.push_back(std::move(g));
  }
  data->generators = std::move(gens);
  return PermGroup(std::move(data));
}

PermGroup PermGroup::from_closed_set(std::size_t degree,
                                     std::vector<Permutation> elements) {
  std::vector<Permutation> by_order = elements;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [](const Permutation& x, const Permutation& y) {
                     return x.order() > y.order();
                   });
  PermGroup span = trivial(degree);
  std::vector<Permutation> gens;
  for (const auto& x : by_order) {
    if (span.order() == elements.size()) break;
    if (!span.contains(x)) {
      gens.push_back(x);
      span = generated(degree, gens, elements.size() + 1);
    }
  }
  if (span.order() != elements.size()) {
    fail(ErrorKind::Internal, "element list is not closed under products");
  }
  return from_elements(degree, std::move(elements), std::move(gens));
}

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree() &&
         std::binary_search(elements().begin(), elements().end(), p);
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree()) return std::nullopt;
  auto it = std::lower_bound(elements().begin(), elements().end(), p);
  if (it == elements().end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements().begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return degree() == other.degree() && order() <= other.order() &&
         other.order() % order() == 0 &&
         std::includes(other.elements().begin(), other.elements().end(),
                       elements().begin(), elements().end());
}

std::string PermGroup::to_spec() const {
  std::string out = "degree " + std::to_string(degree()) + "\n";
  if (generators().empty()) {
    out += "()\n";
  }
  for (const auto& g : generators()) out += g.to_cycles() + "\n";
  return out;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.data_ == b.data_ ||
         (a.degree() == b.degree() && a.elements() == b.elements());
}

std::strong_ordering operator<=>(const PermGroup& a, const PermGroup& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.elements().begin(), a.elements().end(), b.elements().begin(),
      b.elements().end());
}

std::size_t index(const PermGroup& h, const PermGroup& g) {
  if (!h.is_subgroup_of(g)) fail(ErrorKind::NotASubgroup, "index of non-subgroup");
  return g.order() / h.order();
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) {
    fail(ErrorKind::InvalidPermutation, "intersection of groups of different degree");
  }
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return PermGroup::from_closed_set(a.degree(), std::move(common));
}

PermGroup join(const PermGroup& a, const PermGroup& b, std::size_t cap) {
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup::generated(a.degree(), gens, cap);
}

PermGroup join(const PermGroup& h, const Permutation& x, std::size_t cap) {
  std::vector<Permutation> gens = h.generators();
  gens.push_back(x);
  return PermGroup::generated(h.degree(), gens, cap);
}

}  // namespace compositum
