#include "compositum/goursat.hpp"

#include <algorithm>
#include <limits>

#include "compositum/error.hpp"
#include "compositum/group_core.hpp"
#include "compositum/named_groups.hpp"
#include "compositum/quotient.hpp"

namespace compositum {

ProductGroup::ProductGroup(PermGroup left, PermGroup right, const Caps& caps)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.order() * right_.order() > caps.closure) {
    fail(ErrorKind::CapExceeded, "direct product of order " +
                                     std::to_string(left_.order() * right_.order()) +
                                     " exceeds closure cap");
  }
  full_ = named::direct_product(left_, right_);
}

Permutation embed_pair(const Permutation& a, const Permutation& b) {
  const std::size_t da = a.degree();
  Permutation::Images im(da + b.degree());
  for (std::size_t i = 0; i < da; ++i) im[i] = a(i);
  for (std::size_t i = 0; i < b.degree(); ++i) im[da + i] = static_cast<Point>(da + b(i));
  return Permutation(std::move(im));
}

Permutation project_left(const Permutation& g, std::size_t left_degree) {
  Permutation::Images im(g.images().begin(), g.images().begin() + left_degree);
  return Permutation(std::move(im));
}

Permutation project_right(const Permutation& g, std::size_t left_degree) {
  Permutation::Images im(g.degree() - left_degree);
  for (std::size_t i = 0; i < im.size(); ++i) {
    im[i] = static_cast<Point>(g(left_degree + i) - left_degree);
  }
  return Permutation(std::move(im));
}

Permutation ProductGroup::embed(const Permutation& a, const Permutation& b) const {
  return embed_pair(a, b);
}

Permutation ProductGroup::project_left(const Permutation& g) const {
  return compositum::project_left(g, left_.degree());
}

Permutation ProductGroup::project_right(const Permutation& g) const {
  return compositum::project_right(g, left_.degree());
}

PermGroup ProductGroup::product_of(const PermGroup& h, const PermGroup& k) const {
  std::vector<Permutation> elements;
  elements.reserve(h.order() * k.order());
  for (const auto& x : h.elements()) {
    for (const auto& y : k.elements()) elements.push_back(embed(x, y));
  }
  std::vector<Permutation> gens;
  for (const auto& x : h.generators()) gens.push_back(embed(x, k.identity()));
  for (const auto& y : k.generators()) gens.push_back(embed(h.identity(), y));
  return PermGroup::from_elements(degree(), std::move(elements), std::move(gens));
}

void validate(const ProductGroup& ab, const Quintuple& q) {
  auto bad = [](const std::string& why) { fail(ErrorKind::InvalidQuintuple, why); };
  if (!q.a2.is_subgroup_of(ab.left())) bad("A2 is not a subgroup of A");
  if (!q.b2.is_subgroup_of(ab.right())) bad("B2 is not a subgroup of B");
  if (!q.a1.is_subgroup_of(q.a2)) bad("A1 is not a subgroup of A2");
  if (!q.b1.is_subgroup_of(q.b2)) bad("B1 is not a subgroup of B2");
  if (!is_normal(q.a1, q.a2)) bad("A1 is not normal in A2");
  if (!is_normal(q.b1, q.b2)) bad("B1 is not normal in B2");
  const QuotientGroup qa(q.a2, q.a1);
  const QuotientGroup qb(q.b2, q.b1);
  if (qa.order() != qb.order() || q.phi.size() != qa.order()) {
    bad("quotients have different orders");
  }
  std::vector<bool> hit(qb.order(), false);
  for (auto v : q.phi) {
    if (v >= qb.order() || hit[v]) bad("phi is not a bijection");
    hit[v] = true;
  }
  for (std::size_t i = 0; i < qa.order(); ++i) {
    for (std::size_t j = 0; j < qa.order(); ++j) {
      if (q.phi[qa.multiply(i, j)] != qb.multiply(q.phi[i], q.phi[j])) {
        bad("phi is not a homomorphism");
      }
    }
  }
}

PermGroup quintuple_to_subgroup(const ProductGroup& ab, const Quintuple& q) {
  validate(ab, q);
  const QuotientGroup qa(q.a2, q.a1);
  const QuotientGroup qb(q.b2, q.b1);
  std::vector<Permutation> elements;
  elements.reserve(q.a2.order() * q.b1.order());
  for (std::size_t i = 0; i < qa.order(); ++i) {
    const auto left = qa.coset(i);
    const auto right = qb.coset(q.phi[i]);
    for (const auto& a : left) {
      for (const auto& b : right) elements.push_back(ab.embed(a, b));
    }
  }
  std::vector<Permutation> gens;
  const auto& ea = ab.left().identity();
  const auto& eb = ab.right().identity();
  for (const auto& a : q.a1.generators()) gens.push_back(ab.embed(a, eb));
  for (const auto& b : q.b1.generators()) gens.push_back(ab.embed(ea, b));
  for (const auto& a : q.a2.generators()) {
    gens.push_back(ab.embed(a, qb.representative(q.phi[qa.coset_of(a)])));
  }
  return PermGroup::from_elements(ab.degree(), std::move(elements), std::move(gens));
}

Quintuple subgroup_to_quintuple(const ProductGroup& ab, const PermGroup& g) {
  if (!g.is_subgroup_of(ab.full())) {
    fail(ErrorKind::NotASubgroup, "group is not a subgroup of A x B");
  }
  std::vector<Permutation> left, right, left_kernel, right_kernel;
  for (const auto& x : g.elements()) {
    Permutation a = ab.project_left(x);
    Permutation b = ab.project_right(x);
    if (b.is_identity()) left_kernel.push_back(a);
    if (a.is_identity()) right_kernel.push_back(b);
    left.push_back(std::move(a));
    right.push_back(std::move(b));
  }
  auto unique_sorted = [](std::vector<Permutation> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const std::size_t da = ab.left().degree();
  const std::size_t db = ab.right().degree();
  Quintuple q{PermGroup::from_closed_set(da, unique_sorted(left_kernel)),
              PermGroup::from_closed_set(da, unique_sorted(left)),
              PermGroup::from_closed_set(db, unique_sorted(right_kernel)),
              PermGroup::from_closed_set(db, unique_sorted(right)),
              {}};
  const QuotientGroup qa(q.a2, q.a1);
  const QuotientGroup qb(q.b2, q.b1);
  q.phi.assign(qa.order(), 0);
  for (const auto& x : g.elements()) {
    q.phi[qa.coset_of(ab.project_left(x))] = qb.coset_of(ab.project_right(x));
  }
  return q;
}

GoursatEnumerator::GoursatEnumerator(const ProductGroup& ab,
                                     std::shared_ptr<const SubgroupLattice> left,
                                     std::shared_ptr<const SubgroupLattice> right,
                                     const Caps& caps)
    : ab_(ab), caps_(caps), left_(std::move(left)), right_(std::move(right)) {
  if (left_->group() != ab_.left() || right_->group() != ab_.right()) {
    fail(ErrorKind::PreconditionFailed, "lattices do not match the product factors");
  }
  left_pairs_ = normal_pairs(*left_);
  right_pairs_ = normal_pairs(*right_);
}

GoursatEnumerator::GoursatEnumerator(const ProductGroup& ab, const Caps& caps)
    : GoursatEnumerator(ab, std::make_shared<SubgroupLattice>(ab.left(), caps),
                        std::make_shared<SubgroupLattice>(ab.right(), caps), caps) {}

std::vector<GoursatEnumerator::NormalPair> GoursatEnumerator::normal_pairs(
    const SubgroupLattice& l) {
  const auto& t = l.table();
  std::vector<NormalPair> out;
  for (std::size_t sup = 0; sup < l.size(); ++sup) {
    const auto sup_elems = l[sup].mask.indices();
    for (std::size_t sub = 0; sub <= sup; ++sub) {
      if (!l[sub].mask.subset_of(l[sup].mask) || !l.normal_in(sub, sup)) continue;
      NormalPair p{sub, sup, {}, {}};
      const auto sub_elems = l[sub].mask.indices();
      constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
      std::vector<std::uint32_t> coset_of(t.size(), unset);
      for (auto x : sup_elems) {
        if (coset_of[x] != unset) continue;
        const auto c = static_cast<std::uint32_t>(p.cosets.size());
        std::vector<std::uint32_t> coset;
        for (auto n : sub_elems) {
          const auto y = t.mul(x, n);
          coset_of[y] = c;
          coset.push_back(y);
        }
        std::sort(coset.begin(), coset.end());
        p.cosets.push_back(std::move(coset));
      }
      const std::size_t q = p.cosets.size();
      p.quotient.n = q;
      p.quotient.mul.resize(q * q);
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
          p.quotient.mul[i * q + j] = coset_of[t.mul(p.cosets[i][0], p.cosets[j][0])];
        }
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<GoursatEnumerator::Task> GoursatEnumerator::tasks(const GoursatFloor& floor) const {
  auto floor_mask = [](const SubgroupLattice& l, const std::optional<PermGroup>& f)
      -> std::optional<ElementMask> {
    if (!f) return std::nullopt;
    if (!f->is_subgroup_of(l.group())) {
      fail(ErrorKind::NotASubgroup, "floor is not a subgroup of its factor");
    }
    return l.table().mask_of(*f);
  };
  const auto lf = floor_mask(*left_, floor.left);
  const auto rf = floor_mask(*right_, floor.right);
  std::vector<Task> out;
  for (std::size_t i = 0; i < left_pairs_.size(); ++i) {
    const auto& lp = left_pairs_[i];
    if (lf && !lf->subset_of((*left_)[lp.sub].mask)) continue;
    for (std::size_t j = 0; j < right_pairs_.size(); ++j) {
      const auto& rp = right_pairs_[j];
      if (lp.quotient.n != rp.quotient.n) continue;
      if (rf && !rf->subset_of((*right_)[rp.sub].mask)) continue;
      out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Bijection> GoursatEnumerator::isomorphisms(const Task& t) const {
  return find_isomorphisms(left_pairs_[t.left].quotient, right_pairs_[t.right].quotient,
                           caps_.iso);
}

Quintuple GoursatEnumerator::quintuple(const Task& t, const Bijection& phi) const {
  const auto& lp = left_pairs_[t.left];
  const auto& rp = right_pairs_[t.right];
  return Quintuple{left_->subgroup(lp.sub), left_->subgroup(lp.sup),
                   right_->subgroup(rp.sub), right_->subgroup(rp.sup), phi};
}

PermGroup GoursatEnumerator::build(const Task& t, const Bijection& phi) const {
  const auto& lp = left_pairs_[t.left];
  const auto& rp = right_pairs_[t.right];
  const auto& ael = left_->group().elements();
  const auto& bel = right_->group().elements();

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t c = 0; c < lp.cosets.size(); ++c) {
    for (auto a : lp.cosets[c]) {
      for (auto b : rp.cosets[phi[c]]) pairs.emplace_back(a, b);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Permutation> elements;
  elements.reserve(pairs.size());
  for (auto [a, b] : pairs) elements.push_back(ab_.embed(ael[a], bel[b]));

  std::vector<Permutation> gens;
  for (auto a : (*left_)[lp.sub].generators) gens.push_back(ab_.embed(ael[a], bel[0]));
  for (auto b : (*right_)[rp.sub].generators) gens.push_back(ab_.embed(ael[0], bel[b]));
  for (auto a : (*left_)[lp.sup].generators) {
    std::size_t c = 0;
    while (!std::binary_search(lp.cosets[c].begin(), lp.cosets[c].end(), a)) ++c;
    gens.push_back(ab_.embed(ael[a], bel[rp.cosets[phi[c]][0]]));
  }
  return PermGroup::from_elements(ab_.degree(), std::move(elements), std::move(gens));
}

void GoursatEnumerator::for_each(
    const GoursatFloor& floor,
    const std::function<bool(const Quintuple&, const PermGroup&)>& visit) const {
  for (const auto& t : tasks(floor)) {
    for (const auto& phi : isomorphisms(t)) {
      if (!visit(quintuple(t, phi), build(t, phi))) return;
    }
  }
}

std::vector<PermGroup> GoursatEnumerator::subgroups(const GoursatFloor& floor,
                                                    Execution exec) const {
  const auto work = tasks(floor);
  std::vector<std::vector<PermGroup>> per_task(work.size());
  const auto n = static_cast<long>(work.size());
  auto body = [&](long i) {
    const auto& t = work[static_cast<std::size_t>(i)];
    for (const auto& phi : isomorphisms(t)) {
      per_task[static_cast<std::size_t>(i)].push_back(build(t, phi));
    }
  };
  if (exec == Execution::Parallel) {
    // Exceptions must not escape an OpenMP region; collect the first one.
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
#pragma omp critical(goursat_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (long i = 0; i < n; ++i) body(i);
  }

  std::vector<PermGroup> out;
  for (auto& batch : per_task) {
    for (auto& g : batch) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    fail(ErrorKind::Internal, "two Goursat quintuples produced the same subgroup");
  }
  return out;
}

std::size_t GoursatEnumerator::count(const GoursatFloor& floor) const {
  std::size_t total = 0;
  for (const auto& t : tasks(floor)) total += isomorphisms(t).size();
  return total;
}

std::vector<PermGroup> enumerate_product_subgroups(const PermGroup& a, const PermGroup& b,
                                                   const Caps& caps) {
  const ProductGroup ab(a, b, caps);
  return GoursatEnumerator(ab, caps).subgroups({}, Execution::Parallel);
}

std::vector<PermGroup> enumerate_product_subgroups_serial(const PermGroup& a,
                                                          const PermGroup& b,
                                                          const Caps& caps) {
  const ProductGroup ab(a, b, caps);
  auto left = std::make_shared<SubgroupLattice>(a, caps, Execution::Serial);
  auto right = std::make_shared<SubgroupLattice>(b, caps, Execution::Serial);
  return GoursatEnumerator(ab, left, right, caps).subgroups({}, Execution::Serial);
}

}  // namespace compositum
