#include "doctest.h"

#include <random>

#include "compositum/error.hpp"
#include "compositum/galois_bridge.hpp"
#include "compositum/group_core.hpp"
#include "compositum/named_groups.hpp"

using namespace compositum;

namespace {

PermGroup gen(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> g;
  for (const char* c : cycles) g.push_back(Permutation::from_cycles(c, degree));
  return PermGroup::generated(degree, g);
}

GaloisDatum quadratic() { return GaloisDatum(named::cyclic(2), PermGroup::trivial(2)); }
GaloisDatum s3_cubic() { return GaloisDatum(named::symmetric(3), gen(3, {"(1 2)"})); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::vector<GaloisDatum> data_of(const PermGroup& t) {
  std::vector<GaloisDatum> out;
  const SubgroupLattice l(t);
  for (std::size_t i = 0; i + 1 < l.size(); ++i) out.emplace_back(t, l.subgroup(i), true);
  return out;
}

}  // namespace

TEST_CASE("Galois datum validation") {
  CHECK(quadratic().degree() == 2);
  CHECK(s3_cubic().degree() == 3);
  CHECK(kind_of([] { GaloisDatum(named::cyclic(2), named::cyclic(2)); }) ==
        ErrorKind::NotAProperSubgroup);
  // V4 over an order-2 subgroup: normal, so the core is that subgroup.
  const auto v4 = named::klein_four();
  CHECK(kind_of([&] { GaloisDatum(v4, gen(4, {"(1 2)"})); }) == ErrorKind::PreconditionFailed);
  CHECK_FALSE(GaloisDatum(v4, gen(4, {"(1 2)"}), true).core_trivial());
}

TEST_CASE("quadratic times quadratic") {
  const auto c = classify_intermediates(quadratic(), quadratic());
  CHECK(c.intermediates.size() == 5);
  CHECK(c.contains_k == 2);
  CHECK(c.subfield_of_l == 2);
  CHECK(c.diagonal == 1);
  // The full group fixes Q, a subfield of L; the trivial group fixes KL.
  CHECK(c.intermediates.front().group.is_trivial());
  CHECK(c.intermediates.front().label == IntermediateLabel::ContainsK);
  CHECK(c.intermediates.back().group.order() == 4);
  CHECK(c.intermediates.back().label == IntermediateLabel::SubfieldOfL);
  for (const auto& g : c.intermediates) {
    if (g.label == IntermediateLabel::Diagonal) CHECK(g.group.order() == 2);
  }
  CHECK_FALSE(verify_bridge(quadratic(), quadratic()));
}

TEST_CASE("cubic with S3 closure never yields a diagonal") {
  const auto c = classify_intermediates(s3_cubic(), quadratic());
  CHECK(c.diagonal == 0);
  CHECK(verify_bridge(s3_cubic(), quadratic()));
  const GaloisDatum c3(named::cyclic(3), PermGroup::trivial(3));
  CHECK(verify_bridge(c3, quadratic()));
  const GaloisDatum s4(named::symmetric(4), named::point_stabilizer(4));
  for (const auto& l : data_of(named::dihedral(4))) {
    CHECK(classify_intermediates(s4, l).diagonal == 0);
  }
}

TEST_CASE("hypothesis checker") {
  const HypothesisFlags ok{Tri::Yes, Tri::Yes};
  const auto a = check_theorem_hypotheses(s3_cubic(), 2, ok);
  CHECK(a.cond_iii);
  CHECK(a.cond_iv);
  CHECK(a.overall == Tri::Yes);
  CHECK(a.readings_agree);
  const auto b = check_theorem_hypotheses(quadratic(), 2, ok);
  CHECK(b.cond_iii);
  CHECK_FALSE(b.cond_iv);
  CHECK(b.overall == Tri::No);
  const auto c = check_theorem_hypotheses(quadratic(), 3, ok);
  CHECK(c.cond_iv);
  CHECK(c.overall == Tri::Yes);
  CHECK(check_theorem_hypotheses(quadratic(), 3).overall == Tri::Unknown);
  CHECK(check_theorem_hypotheses(quadratic(), 3, {Tri::No, Tri::Yes}).overall == Tri::No);
  // C4 over 1: no intermediate field fails (iii).
  const auto d = check_theorem_hypotheses(GaloisDatum(named::cyclic(4), PermGroup::trivial(4)), 3, ok);
  CHECK_FALSE(d.cond_iii);
  CHECK(d.overall == Tri::No);
  // Malformed datum: the two readings of (iv) split.
  const GaloisDatum bad(named::klein_four(), gen(4, {"(1 2)"}), true);
  const auto e = check_theorem_hypotheses(bad, 2, ok);
  CHECK_FALSE(e.cond_iv);
  CHECK(e.cond_iv_galois_reading);
  CHECK_FALSE(e.readings_agree);
  CHECK(parse_tri("yes") == Tri::Yes);
  CHECK(kind_of([] { parse_tri("maybe"); }) == ErrorKind::ParseError);
}

TEST_CASE("maximal non-normal stabilizers pass (iii) and (iv) for every l") {
  const std::vector<PermGroup> groups = {named::symmetric(3), named::symmetric(4),
                                         named::alternating(4), named::dihedral(4),
                                         named::dihedral(5)};
  for (const auto& t : groups) {
    for (const auto& k : data_of(t)) {
      if (!is_maximal(k.stabilizer(), t) || is_normal(k.stabilizer(), t)) continue;
      for (std::uint64_t ell = 1; ell <= 12; ++ell) {
        const auto r = check_theorem_hypotheses(k, ell);
        CHECK(r.cond_iii);
        CHECK(r.cond_iv);
      }
    }
  }
}

TEST_CASE("bridge agrees with decide") {
  const std::vector<PermGroup> groups = {named::cyclic(2), named::cyclic(3), named::cyclic(4),
                                         named::klein_four(), named::symmetric(3)};
  std::size_t checked = 0;
  for (const auto& t : groups) {
    for (const auto& v : groups) {
      for (const auto& k : data_of(t)) {
        for (const auto& l : data_of(v)) {
          const bool none = verify_bridge(k, l);
          const auto d = decide(DiagonalInstance(k.stabilizer(), t, l.stabilizer(), v));
          CHECK(none == (d.verdict == Verdict::NoDiagonal));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("label counts are invariant under relabeling") {
  std::mt19937 rng(4);
  const std::vector<std::pair<PermGroup, PermGroup>> cases = {
      {named::symmetric(3), gen(3, {"(1 2)"})},
      {named::cyclic(4), PermGroup::trivial(4)},
      {named::dihedral(4), gen(4, {"(2 4)"})}};
  for (const auto& [t, s] : cases) {
    for (const auto& [v, u] : cases) {
      const auto base = classify_intermediates(GaloisDatum(t, s), GaloisDatum(v, u));
      for (int round = 0; round < 3; ++round) {
        Permutation::Images pt(t.degree()), pv(v.degree());
        for (std::size_t i = 0; i < pt.size(); ++i) pt[i] = static_cast<Point>(i);
        for (std::size_t i = 0; i < pv.size(); ++i) pv[i] = static_cast<Point>(i);
        std::shuffle(pt.begin(), pt.end(), rng);
        std::shuffle(pv.begin(), pv.end(), rng);
        const Permutation a(pt), b(pv);
        const auto moved = classify_intermediates(
            GaloisDatum(named::relabeled(t, a), named::relabeled(s, a)),
            GaloisDatum(named::relabeled(v, b), named::relabeled(u, b)));
        CHECK(moved.contains_k == base.contains_k);
        CHECK(moved.subfield_of_l == base.subfield_of_l);
        CHECK(moved.diagonal == base.diagonal);
      }
    }
  }
}
