#include "doctest.h"

#include "compositum/diagonal.hpp"
#include "compositum/error.hpp"
#include "compositum/group_core.hpp"
#include "compositum/named_groups.hpp"
#include "oracles/brute_groups.hpp"

using namespace compositum;

namespace {

PermGroup gen(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> g;
  for (const char* c : cycles) g.push_back(Permutation::from_cycles(c, degree));
  return PermGroup::generated(degree, g);
}

PermGroup c2() { return named::cyclic(2); }
PermGroup triv(std::size_t d) { return PermGroup::trivial(d); }

// Order-2 subgroup generated by an element that is not central.
PermGroup noncentral_involution(const PermGroup& g) {
  for (const auto& x : g.elements()) {
    if (x.order() != 2) continue;
    for (const auto& y : g.elements()) {
      if (x * y != y * x) return PermGroup::generated(g.degree(), {x});
    }
  }
  throw std::logic_error("no non-central involution");
}

// Diagonal existence by subset filtering of T x V, independent of Goursat.
bool oracle_has_diagonal(const DiagonalInstance& inst) {
  const ProductGroup tv = inst.product();
  const std::size_t dt = inst.t().degree();
  for (const auto& sub : oracle::subgroups_by_subset_filter(tv.full())) {
    auto has = [&](const Permutation& x) {
      return std::binary_search(sub.begin(), sub.end(), x);
    };
    bool floor = true, has_tu = true, inside_sv = true;
    for (const auto& s : inst.s().elements()) floor &= has(tv.embed(s, inst.v().identity()));
    for (const auto& u : inst.u().elements()) floor &= has(tv.embed(inst.t().identity(), u));
    if (!floor) continue;
    for (const auto& t : inst.t().elements()) has_tu &= has(tv.embed(t, inst.v().identity()));
    for (const auto& x : sub) inside_sv &= inst.s().contains(project_left(x, dt));
    if (!has_tu && !inside_sv) return true;
  }
  return false;
}

std::vector<std::pair<PermGroup, PermGroup>> proper_pairs(const PermGroup& g) {
  std::vector<std::pair<PermGroup, PermGroup>> out;
  const SubgroupLattice l(g);
  for (std::size_t i = 0; i + 1 < l.size(); ++i) out.emplace_back(l.subgroup(i), g);
  return out;
}

}  // namespace

TEST_CASE("instance construction requires proper subgroups") {
  CHECK_NOTHROW(DiagonalInstance(triv(2), c2(), triv(2), c2()));
  try {
    DiagonalInstance(c2(), c2(), triv(2), c2());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAProperSubgroup);
  }
  CHECK_THROWS_AS(DiagonalInstance(triv(2), c2(), c2(), c2()), Error);
}

TEST_CASE("is_diagonal on C2 x C2") {
  DiagonalInstance inst(triv(2), c2(), triv(2), c2());
  const ProductGroup tv = inst.product();
  const auto diag = PermGroup::generated(4, {Permutation::from_cycles("(1 2)(3 4)", 4)});
  CHECK(is_diagonal(diag, inst));
  CHECK_FALSE(is_diagonal(tv.full(), inst));
  CHECK_FALSE(is_diagonal(triv(4), inst));
  CHECK_FALSE(is_diagonal(tv.product_of(c2(), triv(2)), inst));
  CHECK_FALSE(is_diagonal(tv.product_of(triv(2), c2()), inst));
  // Not inside T x V: swaps the blocks.
  const auto swap = PermGroup::generated(4, {Permutation::from_cycles("(1 3)(2 4)", 4)});
  CHECK_THROWS_AS(is_diagonal(swap, inst), Error);
  // Misses the floor.
  DiagonalInstance floor_inst(triv(2), c2(), triv(2), c2());
  CHECK_THROWS_AS(is_diagonal(PermGroup::trivial(3), floor_inst), Error);
}

TEST_CASE("is_diagonal rejects groups missing S x U") {
  const auto c4 = named::cyclic(4);
  const auto c4_2 = gen(4, {"(1 3)(2 4)"});
  DiagonalInstance inst(triv(2), c2(), c4_2, c4);
  try {
    is_diagonal(PermGroup::trivial(6), inst);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIntermediate);
  }
}

TEST_CASE("decide_brute fixed instances") {
  {
    DiagonalInstance inst(triv(2), c2(), triv(2), c2());
    const auto r = decide_brute(inst);
    CHECK(r.verdict == Verdict::Diagonal);
    REQUIRE(r.witness);
    CHECK(r.witness->order() == 2);
    CHECK(r.certificate_checked);
  }
  {
    const auto s3 = named::symmetric(3);
    const auto s2 = gen(3, {"(1 2)"});
    DiagonalInstance inst(s2, s3, triv(2), c2());
    const auto r = decide_brute(inst);
    CHECK(r.verdict == Verdict::NoDiagonal);
    CHECK_FALSE(r.witness);
    CHECK(r.intermediates_scanned > 0);
  }
  {
    DiagonalInstance inst(triv(2), c2(), triv(3), named::cyclic(3));
    CHECK(decide_brute(inst).verdict == Verdict::NoDiagonal);
  }
}

TEST_CASE("criterion_max_nonnormal") {
  const auto s3 = named::symmetric(3);
  const auto s2 = gen(3, {"(1 2)"});
  const auto r = criterion_max_nonnormal(DiagonalInstance(s2, s3, triv(2), c2()));
  REQUIRE(r);
  CHECK(r->verdict == Verdict::NoDiagonal);
  CHECK(r->method == Method::MaxNonNormal);
  // Normal: inapplicable.
  CHECK_FALSE(criterion_max_nonnormal(DiagonalInstance(triv(2), c2(), triv(2), c2())));
  // Non-normal but not maximal: S4 > S2 (inside S3).
  const auto s4 = named::symmetric(4);
  CHECK_FALSE(criterion_max_nonnormal(DiagonalInstance(gen(4, {"(1 2)"}), s4, triv(2), c2())));
}

TEST_CASE("criterion_index") {
  {
    const auto r = criterion_index(DiagonalInstance(triv(2), c2(), triv(3), named::cyclic(3)));
    REQUIRE(r);
    CHECK(r->verdict == Verdict::NoDiagonal);
    CHECK(r->method == Method::IndexDivisibility);
  }
  {
    const auto r = criterion_index(DiagonalInstance(triv(2), c2(), triv(4), named::cyclic(4)));
    REQUIRE(r);
    CHECK(r->verdict == Verdict::Diagonal);
    REQUIRE(r->pair);
    CHECK(r->pair->r.order() == r->pair->n.order() * 2);
    CHECK(r->certificate_checked);
  }
  // Index 4 in C4: not prime.
  CHECK_FALSE(criterion_index(DiagonalInstance(triv(4), named::cyclic(4), triv(2), c2())));
  // S2 < S3 is not normal.
  CHECK_FALSE(criterion_index(
      DiagonalInstance(gen(3, {"(1 2)"}), named::symmetric(3), triv(2), c2())));
}

TEST_CASE("construct_from_nr") {
  const auto c3 = named::cyclic(3);
  DiagonalInstance inst(triv(3), c3, triv(3), c3);
  const auto g0 = construct_from_nr(inst, triv(3), c3, 0);
  const auto g1 = construct_from_nr(inst, triv(3), c3, 1);
  CHECK(g0 != g1);
  CHECK(g0.order() == 3);
  CHECK(g1.order() == 3);
  CHECK(is_diagonal(g0, inst));
  CHECK(is_diagonal(g1, inst));

  auto kind_of = [&](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind_of([&] { construct_from_nr(inst, triv(3), c3, 2); }) == ErrorKind::InvalidWitness);
  CHECK(kind_of([&] { construct_from_nr(inst, c3, c3); }) == ErrorKind::InvalidWitness);
  const auto c4 = named::cyclic(4);
  DiagonalInstance bad_floor(triv(2), c2(), gen(4, {"(1 3)(2 4)"}), c4);
  CHECK(kind_of([&] { construct_from_nr(bad_floor, triv(4), gen(4, {"(1 3)(2 4)"})); }) ==
        ErrorKind::InvalidWitness);
  CHECK(kind_of([&] { construct_from_nr(bad_floor, gen(4, {"(1 3)(2 4)"}), c4); }) !=
        ErrorKind::InvalidWitness);
}

TEST_CASE("witness searches") {
  SUBCASE("U normal in V") {
    const auto w = normal_case_witness(triv(2), c2(), 2);
    CHECK(w.n == triv(2));
    CHECK(w.r == c2());
    const auto inst = DiagonalInstance(triv(2), c2(), triv(2), c2());
    CHECK(witness_normal_case(inst) == w);
  }
  SUBCASE("V nilpotent") {
    const auto c4 = named::cyclic(4);
    const auto w = nilpotent_case_witness(triv(4), c4, 2);
    CHECK(w.r.order() == 2 * w.n.order());
    CHECK(is_normal(w.n, w.r));
    DiagonalInstance inst(triv(2), c2(), triv(4), c4);
    CHECK(is_diagonal(construct_from_nr(inst, w.n, w.r), inst));
  }
  SUBCASE("U a p-group in D4") {
    const auto d4 = named::dihedral(4);
    const auto u = noncentral_involution(d4);
    CHECK_FALSE(is_normal(u, d4));
    CHECK_FALSE(witness_normal_case(DiagonalInstance(triv(2), c2(), u, d4)));
    const auto w = pgroup_case_witness(u, d4, 2);
    CHECK(u.is_subgroup_of(w.n));
    CHECK(is_normal(w.n, w.r));
    CHECK(w.r.order() == 2 * w.n.order());
    DiagonalInstance inst(triv(2), c2(), u, d4);
    REQUIRE(witness_pgroup_case(inst));
    CHECK(report_from_witness(inst, w).certificate_checked);
  }
  SUBCASE("p-group case inside S3") {
    const auto s3 = named::symmetric(3);
    DiagonalInstance inst(triv(2), c2(), gen(3, {"(1 2)"}), s3);
    // p = 2 does not divide [S3 : S2] = 3.
    CHECK_FALSE(witness_pgroup_case(inst));
    CHECK_THROWS_AS(pgroup_case_witness(gen(3, {"(1 2)"}), s3, 2), Error);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(normal_case_witness(triv(3), named::cyclic(3), 2), Error);
    CHECK_THROWS_AS(normal_case_witness(triv(2), c2(), 4), Error);
    CHECK_THROWS_AS(normal_case_witness(gen(3, {"(1 2)"}), named::symmetric(3), 3), Error);
    CHECK_THROWS_AS(nilpotent_case_witness(triv(3), named::symmetric(3), 2), Error);
    CHECK_THROWS_AS(pgroup_case_witness(gen(4, {"(1 2 3)"}), named::alternating(4), 2),
                    Error);
  }
}

TEST_CASE("decide falls through to brute force") {
  const auto c4 = named::cyclic(4);
  const auto r = decide(DiagonalInstance(triv(4), c4, triv(2), c2()));
  CHECK(r.method == Method::BruteForce);
  CHECK(r.verdict == Verdict::Diagonal);
  CHECK(r.certificate_checked);
}

TEST_CASE("non-maximal S with a maximal overgroup never blocks on its own") {
  // S < M < T with M maximal non-normal: the shortcut does not fire for S.
  const auto s4 = named::symmetric(4);
  const auto s2 = gen(4, {"(1 2)"});
  const auto inst = DiagonalInstance(s2, s4, triv(2), c2());
  CHECK_FALSE(criterion_max_nonnormal(inst));
  CHECK(decide(inst).verdict == decide_brute(inst).verdict);
}

TEST_CASE("decide agrees with the subset-filter oracle") {
  using namespace named;
  const std::vector<PermGroup> groups = {c2(), cyclic(3), cyclic(4), klein_four(),
                                         symmetric(3), cyclic(6)};
  std::size_t diagonals = 0, checked = 0;
  for (const auto& t : groups) {
    for (const auto& [s, tt] : proper_pairs(t)) {
      for (const auto& v : groups) {
        if (t.order() * v.order() > 16) continue;
        for (const auto& [u, vv] : proper_pairs(v)) {
          DiagonalInstance inst(s, tt, u, vv);
          const bool expected = oracle_has_diagonal(inst);
          const auto r = decide(inst);
          CHECK((r.verdict == Verdict::Diagonal) == expected);
          CHECK(decide_brute(inst).verdict == r.verdict);
          if (r.witness) CHECK(is_diagonal(*r.witness, inst));
          diagonals += expected;
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 50);
  CHECK(diagonals > 0);
  CHECK(diagonals < checked);
}
