#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace compositum {

using Point = std::uint16_t;

/// A bijection of {0, ..., n-1}. Printed and parsed 1-based in cycle notation.
///
/// Products compose right to left: (a * b)(x) = a(b(x)). Ordering is
/// lexicographic on the image sequence, which makes the identity the least
/// element of any group of the same degree.
class Permutation {
 public:
  using Images = boost::container::small_vector<Point, 12>;

  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(Images images);        // validated
  Permutation(std::initializer_list<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Parses cycle notation such as "(1 2)(3 4 5)" or "()" on {1..degree}.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(std::size_t x) const { return images_[x]; }
  const Images& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;
  Permutation pow(long long e) const;

  /// Acts as `this` on [0, degree) and as the identity on the padded points.
  Permutation padded(std::size_t degree) const;

  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

 private:
  Images images_;
};

/// g h g^-1
Permutation conjugate(const Permutation& h, const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace compositum
