#include "compositum/subgroups.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "compositum/error.hpp"

namespace compositum {

CayleyTable::CayleyTable(const PermGroup& group)
    : group_(group), n_(group.order()), table_(n_ * n_), inverse_(n_) {
  const auto& el = group_.elements();
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> pos;
  pos.reserve(n_ * 2);
  for (std::size_t i = 0; i < n_; ++i) pos.emplace(el[i], static_cast<std::uint32_t>(i));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      const std::uint32_t c = pos.at(el[a] * el[b]);
      table_[a * n_ + b] = c;
      if (c == 0) inverse_[a] = static_cast<std::uint32_t>(b);
    }
  }
}

std::size_t CayleyTable::index_of(const Permutation& p) const {
  auto i = group_.index_of(p);
  if (!i) fail(ErrorKind::NotASubgroup, "element " + p.to_cycles() + " not in ambient group");
  return *i;
}

ElementMask CayleyTable::closure(const std::vector<std::uint32_t>& generators) const {
  ElementMask mask(n_);
  std::vector<std::uint32_t> queue{0};
  mask.set(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (auto g : generators) {
      const auto y = mul(x, g);
      if (!mask.test(y)) {
        mask.set(y);
        queue.push_back(y);
      }
    }
  }
  return mask;
}

ElementMask CayleyTable::mask_of(const PermGroup& subgroup) const {
  ElementMask mask(n_);
  for (const auto& e : subgroup.elements()) mask.set(index_of(e));
  return mask;
}

namespace {

using Entry = SubgroupLattice::Entry;

Entry make_entry(const CayleyTable& t, std::vector<std::uint32_t> gens) {
  Entry e;
  e.mask = t.closure(gens);
  e.order = e.mask.count();
  e.generators = std::move(gens);
  return e;
}

// Joins of every frontier subgroup with every cyclic subgroup it does not
// already contain. Results keep frontier order so serial and parallel runs
// merge identically.
std::vector<std::vector<Entry>> join_round(
    const CayleyTable& t, const std::vector<Entry>& frontier,
    const std::vector<Entry>& cyclic,
    const std::unordered_set<ElementMask, ElementMaskHash>& known,
    Execution exec) {
  std::vector<std::vector<Entry>> out(frontier.size());
  const auto count = static_cast<long>(frontier.size());
  auto body = [&](long i) {
    const Entry& h = frontier[static_cast<std::size_t>(i)];
    std::unordered_set<ElementMask, ElementMaskHash> local;
    for (const Entry& c : cyclic) {
      if (c.mask.subset_of(h.mask)) continue;
      auto gens = h.generators;
      gens.push_back(c.generators.front());
      Entry k = make_entry(t, std::move(gens));
      if (known.count(k.mask) || !local.insert(k.mask).second) continue;
      out[static_cast<std::size_t>(i)].push_back(std::move(k));
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) body(i);
  } else {
    for (long i = 0; i < count; ++i) body(i);
  }
  return out;
}

bool canonical_less(const Entry& a, const Entry& b) {
  if (a.order != b.order) return a.order < b.order;
  // Lexicographic comparison of the sorted element index lists.
  const auto& wa = a.mask.words();
  const auto& wb = b.mask.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    if (wa[w] == wb[w]) continue;
    const std::uint64_t diff = wa[w] ^ wb[w];
    const int bit = std::countr_zero(diff);
    // The list holding the lowest differing index is lexicographically smaller.
    return (wa[w] >> bit) & 1;
  }
  return false;
}

const PermGroup& within_cap(const PermGroup& group, const Caps& caps) {
  if (group.order() > caps.subgroups) {
    fail(ErrorKind::CapExceeded,
         "subgroup enumeration of a group of order " +
             std::to_string(group.order()) + " exceeds cap " +
             std::to_string(caps.subgroups));
  }
  return group;
}

}  // namespace

SubgroupLattice::SubgroupLattice(const PermGroup& group, const Caps& caps,
                                 Execution exec)
    : table_(within_cap(group, caps)) {
  const std::size_t n = table_.size();
  std::unordered_set<ElementMask, ElementMaskHash> known;

  std::vector<Entry> cyclic;
  for (std::uint32_t x = 0; x < n; ++x) {
    Entry e = make_entry(table_, x == 0 ? std::vector<std::uint32_t>{}
                                        : std::vector<std::uint32_t>{x});
    if (known.insert(e.mask).second) {
      if (x != 0) cyclic.push_back(e);
      entries_.push_back(std::move(e));
    }
  }

  std::vector<Entry> frontier = cyclic;
  while (!frontier.empty()) {
    auto produced = join_round(table_, frontier, cyclic, known, exec);
    std::vector<Entry> next;
    for (auto& batch : produced) {
      for (auto& k : batch) {
        if (known.insert(k.mask).second) {
          entries_.push_back(k);
          next.push_back(std::move(k));
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(entries_.begin(), entries_.end(), canonical_less);
  for (std::size_t i = 0; i < entries_.size(); ++i) lookup_.emplace(entries_[i].mask, i);
}

PermGroup SubgroupLattice::subgroup(std::size_t i) const {
  const auto& el = group().elements();
  std::vector<Permutation> elements;
  elements.reserve(entries_[i].order);
  for (auto idx : entries_[i].mask.indices()) elements.push_back(el[idx]);
  std::vector<Permutation> gens;
  for (auto g : entries_[i].generators) gens.push_back(el[g]);
  return PermGroup::from_elements(group().degree(), std::move(elements), std::move(gens));
}

std::vector<PermGroup> SubgroupLattice::subgroups() const {
  std::vector<PermGroup> out;
  out.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out.push_back(subgroup(i));
  return out;
}

std::optional<std::size_t> SubgroupLattice::find(const ElementMask& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SubgroupLattice::find(const PermGroup& h) const {
  if (!h.is_subgroup_of(group())) return std::nullopt;
  return find(table_.mask_of(h));
}

bool SubgroupLattice::normal_in(std::size_t n, std::size_t g) const {
  const auto& N = entries_[n];
  for (auto x : entries_[g].generators) {
    const auto xi = table_.inv(x);
    for (auto h : N.generators) {
      if (!N.mask.test(table_.mul(table_.mul(x, h), xi))) return false;
    }
  }
  return true;
}

std::vector<PermGroup> all_subgroups(const PermGroup& g, const Caps& caps) {
  return SubgroupLattice(g, caps, Execution::Parallel).subgroups();
}

std::vector<PermGroup> all_subgroups_serial(const PermGroup& g, const Caps& caps) {
  return SubgroupLattice(g, caps, Execution::Serial).subgroups();
}

}  // namespace compositum
