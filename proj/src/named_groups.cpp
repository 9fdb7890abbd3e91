#include "compositum/named_groups.hpp"

#include <string>
#include <vector>

#include "compositum/error.hpp"

namespace compositum::named {

namespace {

Permutation cycle(std::size_t degree, std::size_t from, std::size_t to) {
  // (from from+1 ... to), 1-based
  std::string text = "(";
  for (std::size_t i = from; i <= to; ++i) {
    text += std::to_string(i);
    text += (i == to ? ")" : " ");
  }
  return Permutation::from_cycles(text, degree);
}

}  // namespace

PermGroup cyclic(std::size_t n) {
  if (n == 0) fail(ErrorKind::PreconditionFailed, "cyclic group of order 0");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup::generated(n, {cycle(n, 1, n)});
}

PermGroup symmetric(std::size_t n) {
  if (n <= 1) return PermGroup::trivial(1);
  return PermGroup::generated(n, {cycle(n, 1, 2), cycle(n, 1, n)});
}

PermGroup alternating(std::size_t n) {
  if (n <= 2) return PermGroup::trivial(n == 0 ? 1 : n);
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(cycle(n, k - 2, k));
  return PermGroup::generated(n, gens);
}

PermGroup dihedral(std::size_t n) {
  if (n < 3) fail(ErrorKind::PreconditionFailed, "dihedral needs n >= 3");
  Permutation::Images reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return PermGroup::generated(n, {cycle(n, 1, n), Permutation(std::move(reflection))});
}

PermGroup klein_four() {
  return PermGroup::generated(4, {Permutation::from_cycles("(1 2)", 4),
                                  Permutation::from_cycles("(3 4)", 4)});
}

PermGroup quaternion() {
  return PermGroup::generated(8, {Permutation::from_cycles("(1 2 3 4)(5 6 7 8)", 8),
                                  Permutation::from_cycles("(1 5 3 7)(2 8 4 6)", 8)});
}

PermGroup point_stabilizer(std::size_t n) {
  if (n < 2) fail(ErrorKind::PreconditionFailed, "point stabilizer needs n >= 2");
  if (n == 2) return PermGroup::trivial(2);
  return PermGroup::generated(n, {cycle(n, 1, 2), cycle(n, 1, n - 1)});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t da = a.degree();
  const std::size_t d = da + b.degree();
  auto embed = [&](const Permutation& x, const Permutation& y) {
    Permutation::Images im(d);
    for (std::size_t i = 0; i < da; ++i) im[i] = x(i);
    for (std::size_t i = 0; i < y.degree(); ++i) im[da + i] = static_cast<Point>(da + y(i));
    return Permutation(std::move(im));
  };
  std::vector<Permutation> elements;
  elements.reserve(a.order() * b.order());
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) elements.push_back(embed(x, y));
  }
  std::vector<Permutation> gens;
  for (const auto& x : a.generators()) gens.push_back(embed(x, b.identity()));
  for (const auto& y : b.generators()) gens.push_back(embed(a.identity(), y));
  return PermGroup::from_elements(d, std::move(elements), std::move(gens));
}

PermGroup relabeled(const PermGroup& g, const Permutation& relabel) {
  std::vector<Permutation> elements;
  for (const auto& x : g.elements()) elements.push_back(conjugate(x, relabel));
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(conjugate(x, relabel));
  return PermGroup::from_elements(g.degree(), std::move(elements), std::move(gens));
}

}  // namespace compositum::named
