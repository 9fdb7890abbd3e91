#include "compositum/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "compositum/error.hpp"

namespace compositum {

namespace {

void validate(const Permutation::Images& images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) {
      fail(ErrorKind::InvalidPermutation, "images are not a bijection");
    }
    seen[p] = true;
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(Images images) : images_(std::move(images)) {
  validate(images_);
}

Permutation::Permutation(std::initializer_list<Point> images)
    : images_(images.begin(), images.end()) {
  validate(images_);
}

Permutation Permutation::from_cycles(std::string_view text,
                                     std::size_t degree) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\r' || text[i] == ',')) {
      ++i;
    }
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      fail(ErrorKind::ParseError,
           "expected '(' in cycle notation: " + std::string(text));
    }
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) {
        fail(ErrorKind::ParseError, "unterminated cycle: " + std::string(text));
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') {
        fail(ErrorKind::ParseError,
             "unexpected character in cycle: " + std::string(text));
      }
      std::size_t value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 65535) fail(ErrorKind::ParseError, "point out of range");
        ++i;
      }
      if (value < 1 || value > degree) {
        fail(ErrorKind::InvalidPermutation,
             "point " + std::to_string(value) + " outside 1.." +
                 std::to_string(degree));
      }
      if (used[value - 1]) {
        fail(ErrorKind::InvalidPermutation,
             "point " + std::to_string(value) + " repeated in " +
                 std::string(text));
      }
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      result.images_[cycle[k]] =
          static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    }
    skip_space();
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    r.images_[images_[i]] = static_cast<Point>(i);
  }
  return r;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::pow(long long e) const {
  const auto ord = static_cast<long long>(order());
  e %= ord;
  if (e < 0) e += ord;
  Permutation result(images_.size());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::padded(std::size_t degree) const {
  Permutation r(degree);
  for (std::size_t i = 0; i < images_.size() && i < degree; ++i) {
    r.images_[i] = images_[i];
  }
  return r;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    fail(ErrorKind::InvalidPermutation, "degree mismatch in product");
  }
  Permutation r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  return std::lexicographical_compare_three_way(
      a.images_.begin(), a.images_.end(), b.images_.begin(), b.images_.end());
}

Permutation conjugate(const Permutation& h, const Permutation& g) {
  return g * h * g.inverse();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace compositum
