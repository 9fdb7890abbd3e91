#include "compositum/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "compositum/error.hpp"
#include "compositum/subgroups.hpp"

namespace compositum {

GroupTable GroupTable::of(const PermGroup& g) {
  CayleyTable t(g);
  GroupTable out;
  out.n = t.size();
  out.mul.resize(out.n * out.n);
  for (std::size_t a = 0; a < out.n; ++a) {
    for (std::size_t b = 0; b < out.n; ++b) out.mul[a * out.n + b] = t.mul(a, b);
  }
  return out;
}

GroupTable GroupTable::of(const QuotientGroup& q) {
  GroupTable out;
  out.n = q.order();
  out.mul.resize(out.n * out.n);
  for (std::size_t a = 0; a < out.n; ++a) {
    for (std::size_t b = 0; b < out.n; ++b) {
      out.mul[a * out.n + b] = static_cast<std::uint32_t>(q.multiply(a, b));
    }
  }
  return out;
}

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> element_orders(const GroupTable& t) {
  std::vector<std::size_t> ord(t.n, 1);
  for (std::size_t x = 1; x < t.n; ++x) {
    std::size_t y = x;
    std::size_t k = 1;
    while (y != 0) {
      y = t(y, x);
      ++k;
    }
    ord[x] = k;
  }
  return ord;
}

std::vector<bool> closure(const GroupTable& t, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(t.n, false);
  std::vector<std::size_t> queue{0};
  in[0] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (auto g : gens) {
      const auto y = t(queue[h], g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

class Search {
 public:
  Search(const GroupTable& a, const GroupTable& b) : a_(a), b_(b) {
    ord_a_ = element_orders(a);
    ord_b_ = element_orders(b);
    std::vector<std::size_t> by_order(a.n);
    for (std::size_t i = 0; i < a.n; ++i) by_order[i] = i;
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](std::size_t x, std::size_t y) { return ord_a_[x] > ord_a_[y]; });
    std::vector<bool> span = closure(a, {});
    for (auto x : by_order) {
      if (span[x]) continue;
      gens_.push_back(x);
      span = closure(a, gens_);
    }
  }

  std::vector<Bijection> run() {
    if (ord_multiset(ord_a_) != ord_multiset(ord_b_)) return {};
    images_.assign(gens_.size(), kUnset);
    extend(0);
    return std::move(found_);
  }

 private:
  static std::vector<std::size_t> ord_multiset(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  // Map of <gens[0..k)> determined by the first k generator images, or empty
  // if those images do not define an injective homomorphism.
  std::optional<Bijection> partial_map(std::size_t k) const {
    Bijection map(a_.n, kUnset);
    std::vector<bool> used(b_.n, false);
    map[0] = 0;
    used[0] = true;
    std::vector<std::size_t> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const auto x = queue[h];
      for (std::size_t j = 0; j < k; ++j) {
        const auto y = a_(x, gens_[j]);
        const auto img = b_(map[x], images_[j]);
        if (map[y] == kUnset) {
          if (used[img]) return std::nullopt;
          map[y] = img;
          used[img] = true;
          queue.push_back(y);
        } else if (map[y] != img) {
          return std::nullopt;
        }
      }
    }
    return map;
  }

  void extend(std::size_t k) {
    auto map = partial_map(k);
    if (!map) return;
    if (k == gens_.size()) {
      found_.push_back(std::move(*map));
      return;
    }
    std::vector<bool> used(b_.n, false);
    for (auto v : *map) {
      if (v != kUnset) used[v] = true;
    }
    for (std::size_t c = 0; c < b_.n; ++c) {
      if (used[c] || ord_b_[c] != ord_a_[gens_[k]]) continue;
      images_[k] = c;
      extend(k + 1);
    }
    images_[k] = kUnset;
  }

  const GroupTable& a_;
  const GroupTable& b_;
  std::vector<std::size_t> ord_a_, ord_b_, gens_, images_;
  std::vector<Bijection> found_;
};

}  // namespace

std::vector<Bijection> find_isomorphisms(const GroupTable& a, const GroupTable& b,
                                         std::size_t cap) {
  if (a.n > cap || b.n > cap) {
    fail(ErrorKind::CapExceeded, "isomorphism search above order " + std::to_string(cap));
  }
  if (a.n != b.n) return {};
  return Search(a, b).run();
}

std::vector<Bijection> find_isomorphisms(const PermGroup& a, const PermGroup& b,
                                         std::size_t cap) {
  if (a.order() > cap || b.order() > cap) {
    fail(ErrorKind::CapExceeded, "isomorphism search above order " + std::to_string(cap));
  }
  return find_isomorphisms(GroupTable::of(a), GroupTable::of(b), cap);
}

std::vector<Bijection> find_isomorphisms(const QuotientGroup& a,
                                         const QuotientGroup& b, std::size_t cap) {
  if (a.order() > cap || b.order() > cap) {
    fail(ErrorKind::CapExceeded, "isomorphism search above order " + std::to_string(cap));
  }
  return find_isomorphisms(GroupTable::of(a), GroupTable::of(b), cap);
}

}  // namespace compositum
