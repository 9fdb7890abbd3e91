#include "compositum/quotient.hpp"

#include <limits>

#include "compositum/error.hpp"
#include "compositum/group_core.hpp"

namespace compositum {

QuotientGroup::QuotientGroup(const PermGroup& ambient, const PermGroup& normal_subgroup)
    : ambient_(ambient), normal_(normal_subgroup) {
  if (!is_normal(normal_, ambient_)) {
    fail(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  }
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  const auto& el = ambient_.elements();
  element_coset_.assign(el.size(), unset);
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (element_coset_[i] != unset) continue;
    const auto c = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(el[i]);
    for (const auto& n : normal_.elements()) {
      element_coset_[*ambient_.index_of(el[i] * n)] = c;
    }
  }
  const std::size_t q = reps_.size();
  table_.resize(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      table_[a * q + b] = static_cast<std::uint32_t>(coset_of(reps_[a] * reps_[b]));
    }
  }
}

std::vector<Permutation> QuotientGroup::coset(std::size_t i) const {
  std::vector<Permutation> out;
  for (const auto& n : normal_.elements()) out.push_back(reps_[i] * n);
  return out;
}

std::size_t QuotientGroup::coset_of(const Permutation& g) const {
  auto i = ambient_.index_of(g);
  if (!i) fail(ErrorKind::NotASubgroup, "element not in ambient group");
  return element_coset_[*i];
}

Permutation QuotientGroup::coset_permutation(std::size_t i) const {
  Permutation::Images images(order());
  for (std::size_t x = 0; x < order(); ++x) {
    images[x] = static_cast<Point>(multiply(i, x));
  }
  return Permutation(std::move(images));
}

PermGroup QuotientGroup::as_perm_group() const {
  std::vector<Permutation> elements;
  for (std::size_t i = 0; i < order(); ++i) elements.push_back(coset_permutation(i));
  return PermGroup::from_closed_set(order(), std::move(elements));
}

PermGroup QuotientGroup::preimage(const PermGroup& sub) const {
  std::vector<Permutation> gens = normal_.generators();
  for (const auto& g : sub.generators()) gens.push_back(reps_[g(0)]);
  return PermGroup::generated(ambient_.degree(), gens, ambient_.order());
}

}  // namespace compositum
