#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace compositum {

/// Subset of a group's element indices, as a fixed-width bitset.
class ElementMask {
 public:
  ElementMask() = default;
  explicit ElementMask(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const ElementMask& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }
  ElementMask operator&(const ElementMask& other) const {
    ElementMask r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
    return r;
  }
  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (test(i)) out.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
  }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ElementMask&, const ElementMask&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementMaskHash {
  std::size_t operator()(const ElementMask& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : m.words()) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return h;
  }
};

}  // namespace compositum
