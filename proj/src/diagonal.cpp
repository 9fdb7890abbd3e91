#include "compositum/diagonal.hpp"

#include "compositum/arith.hpp"
#include "compositum/error.hpp"
#include "compositum/group_core.hpp"
#include "compositum/quotient.hpp"

namespace compositum {

DiagonalInstance::DiagonalInstance(PermGroup s, PermGroup t, PermGroup u, PermGroup v,
                                   const Caps& caps)
    : s_(std::move(s)), t_(std::move(t)), u_(std::move(u)), v_(std::move(v)), caps_(caps) {
  if (!s_.is_subgroup_of(t_) || s_.order() == t_.order()) {
    fail(ErrorKind::NotAProperSubgroup, "S must be a proper subgroup of T");
  }
  if (!u_.is_subgroup_of(v_) || u_.order() == v_.order()) {
    fail(ErrorKind::NotAProperSubgroup, "U must be a proper subgroup of V");
  }
}

DiagonalInstance DiagonalInstance::with_lattices(
    std::shared_ptr<const SubgroupLattice> t_lattice,
    std::shared_ptr<const SubgroupLattice> v_lattice) const {
  if (t_lattice->group() != t_ || v_lattice->group() != v_) {
    fail(ErrorKind::PreconditionFailed, "lattice does not belong to T or V");
  }
  DiagonalInstance copy = *this;
  copy.t_lattice_ = std::move(t_lattice);
  copy.v_lattice_ = std::move(v_lattice);
  return copy;
}

std::shared_ptr<const SubgroupLattice> DiagonalInstance::t_lattice() const {
  return t_lattice_ ? t_lattice_ : std::make_shared<SubgroupLattice>(t_, caps_);
}

std::shared_ptr<const SubgroupLattice> DiagonalInstance::v_lattice() const {
  return v_lattice_ ? v_lattice_ : std::make_shared<SubgroupLattice>(v_, caps_);
}

std::string_view to_string(Verdict v) {
  return v == Verdict::Diagonal ? "Diagonal" : "NoDiagonal";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::MaxNonNormal: return "MaxNonNormal";
    case Method::IndexDivisibility: return "IndexDivisibility";
    case Method::BruteForce: return "BruteForce";
    case Method::WitnessConstruction: return "WitnessConstruction";
  }
  return "?";
}

bool is_diagonal(const PermGroup& g, const DiagonalInstance& inst) {
  const std::size_t dt = inst.t().degree();
  if (g.degree() != dt + inst.v().degree()) {
    fail(ErrorKind::NotIntermediate, "group does not act on the product domain");
  }
  bool inside_sv = true;
  for (const auto& x : g.elements()) {
    const auto a = project_left(x, dt);
    const auto b = project_right(x, dt);
    // Elements of G must be pairs, i.e. preserve both blocks.
    if (embed_pair(a, b) != x || !inst.t().contains(a) || !inst.v().contains(b)) {
      fail(ErrorKind::NotIntermediate, "G is not contained in T x V");
    }
    if (!inst.s().contains(a)) inside_sv = false;
  }
  const auto& et = inst.t().identity();
  const auto& ev = inst.v().identity();
  for (const auto& s : inst.s().generators()) {
    if (!g.contains(embed_pair(s, ev))) fail(ErrorKind::NotIntermediate, "S x 1 not in G");
  }
  for (const auto& u : inst.u().generators()) {
    if (!g.contains(embed_pair(et, u))) fail(ErrorKind::NotIntermediate, "1 x U not in G");
  }
  bool contains_tu = true;
  for (const auto& t : inst.t().generators()) {
    if (!g.contains(embed_pair(t, ev))) {
      contains_tu = false;
      break;
    }
  }
  return !contains_tu && !inside_sv;
}

DecisionReport decide_brute(const DiagonalInstance& inst) {
  const ProductGroup tv = inst.product();
  const GoursatEnumerator e(tv, inst.t_lattice(), inst.v_lattice(), inst.caps());
  DecisionReport report;
  report.method = Method::BruteForce;
  report.verdict = Verdict::NoDiagonal;
  e.for_each({inst.s(), inst.u()}, [&](const Quintuple& q, const PermGroup& g) {
    ++report.intermediates_scanned;
    if (!is_diagonal(g, inst)) return true;
    report.verdict = Verdict::Diagonal;
    report.witness = g;
    if (is_prime(q.a2.order() / q.a1.order()) && q.a1 == inst.s() && q.a2 == inst.t()) {
      report.pair = NRPair{q.b1, q.b2};
    }
    report.certificate_checked = true;
    return false;
  });
  return report;
}

std::optional<DecisionReport> criterion_max_nonnormal(const DiagonalInstance& inst) {
  if (!is_maximal(inst.s(), inst.t(), inst.caps().closure) || is_normal(inst.s(), inst.t())) {
    return std::nullopt;
  }
  DecisionReport r;
  r.verdict = Verdict::NoDiagonal;
  r.method = Method::MaxNonNormal;
  return r;
}

namespace {

// [T : S] when S is normal of prime index in T.
std::optional<std::uint64_t> prime_normal_index(const DiagonalInstance& inst) {
  if (!is_normal(inst.s(), inst.t())) return std::nullopt;
  const std::uint64_t p = inst.t().order() / inst.s().order();
  if (!is_prime(p)) return std::nullopt;
  return p;
}

void require(bool ok, const std::string& why) {
  if (!ok) fail(ErrorKind::PreconditionFailed, why);
}

void require_divides(std::uint64_t p, const PermGroup& u, const PermGroup& v) {
  require(is_prime(p), std::to_string(p) + " is not prime");
  require(u.is_subgroup_of(v), "U is not a subgroup of V");
  require((v.order() / u.order()) % p == 0, "p does not divide [V : U]");
}

}  // namespace

std::optional<DecisionReport> criterion_index(const DiagonalInstance& inst) {
  const auto p = prime_normal_index(inst);
  if (!p) return std::nullopt;
  DecisionReport r;
  r.method = Method::IndexDivisibility;
  r.verdict = Verdict::NoDiagonal;
  if ((inst.v().order() / inst.u().order()) % *p != 0) return r;

  const auto lattice = inst.v_lattice();
  const auto& l = *lattice;
  const auto floor = l.table().mask_of(inst.u());
  for (std::size_t n = 0; n < l.size(); ++n) {
    if (!floor.subset_of(l[n].mask)) continue;
    for (std::size_t rr = n + 1; rr < l.size(); ++rr) {
      if (l[rr].order != l[n].order * *p || !l[n].mask.subset_of(l[rr].mask)) continue;
      if (!l.normal_in(n, rr)) continue;
      NRPair nr{l.subgroup(n), l.subgroup(rr)};
      r.witness = construct_from_nr(inst, nr.n, nr.r);
      r.certificate_checked = is_diagonal(*r.witness, inst);
      if (!r.certificate_checked) fail(ErrorKind::Internal, "constructed witness is not diagonal");
      r.verdict = Verdict::Diagonal;
      r.pair = std::move(nr);
      return r;
    }
  }
  return r;
}

PermGroup construct_from_nr(const DiagonalInstance& inst, const PermGroup& n,
                            const PermGroup& r, std::size_t phi_choice) {
  auto bad = [](const std::string& why) { fail(ErrorKind::InvalidWitness, why); };
  const auto p = prime_normal_index(inst);
  if (!p) bad("T/S is not of prime order");
  if (!inst.u().is_subgroup_of(n)) bad("U is not contained in N");
  if (!n.is_subgroup_of(r)) bad("N is not contained in R");
  if (!r.is_subgroup_of(inst.v())) bad("R is not contained in V");
  if (r.order() != n.order() * *p) bad("[R : N] differs from [T : S]");
  if (!is_normal(n, r)) bad("N is not normal in R");
  if (phi_choice + 1 >= *p) bad("there are only p - 1 isomorphisms of C_p");

  // Both quotients have prime order, hence are cyclic: send a generator
  // coset to the (phi_choice+1)-th power of a generator coset.
  const QuotientGroup qt(inst.t(), inst.s());
  const QuotientGroup qr(r, n);
  Quintuple q{inst.s(), inst.t(), n, r, std::vector<std::size_t>(*p, 0)};
  std::size_t target_gen = 1;
  for (std::size_t k = 0; k < phi_choice; ++k) target_gen = qr.multiply(target_gen, 1);
  std::size_t src = 0, dst = 0;
  for (std::uint64_t k = 0; k < *p; ++k) {
    q.phi[src] = dst;
    src = qt.multiply(src, 1);
    dst = qr.multiply(dst, target_gen);
  }
  PermGroup g = quintuple_to_subgroup(inst.product(), q);
  if (!is_diagonal(g, inst)) bad("constructed group is not diagonal");
  return g;
}

DecisionReport report_from_witness(const DiagonalInstance& inst, const NRPair& nr) {
  DecisionReport r;
  r.verdict = Verdict::Diagonal;
  r.method = Method::WitnessConstruction;
  r.witness = construct_from_nr(inst, nr.n, nr.r);
  r.pair = nr;
  r.certificate_checked = is_diagonal(*r.witness, inst);
  return r;
}

DecisionReport decide(const DiagonalInstance& inst) {
  if (auto r = criterion_max_nonnormal(inst)) return *r;
  if (auto r = criterion_index(inst)) return *r;
  return decide_brute(inst);
}

NRPair normal_case_witness(const PermGroup& u, const PermGroup& v, std::uint64_t p) {
  require_divides(p, u, v);
  require(is_normal(u, v), "U is not normal in V");
  const QuotientGroup q(v, u);
  const PermGroup regular = q.as_perm_group();
  const Permutation x = element_of_order_p(regular, p);
  const PermGroup cyclic = PermGroup::generated(regular.degree(), {x});
  return NRPair{u, q.preimage(cyclic)};
}

NRPair nilpotent_case_witness(const PermGroup& u, const PermGroup& v, std::uint64_t p) {
  require_divides(p, u, v);
  require(is_nilpotent(v), "V is not nilpotent");
  PermGroup n = u;
  for (;;) {
    PermGroup next = normalizer(n, v);
    if (next.order() == n.order()) {
      fail(ErrorKind::Internal, "normalizer chain stalled below a nilpotent group");
    }
    if ((next.order() / n.order()) % p == 0) return normal_case_witness(n, next, p);
    n = std::move(next);
  }
}

NRPair pgroup_case_witness(const PermGroup& u, const PermGroup& v, std::uint64_t p) {
  require_divides(p, u, v);
  require(is_p_group(u, p), "U is not a p-group");
  const PermGroup sylow = sylow_subgroup(v, p, u);
  return nilpotent_case_witness(u, sylow, p);
}

std::optional<NRPair> witness_normal_case(const DiagonalInstance& inst) {
  const auto p = prime_normal_index(inst);
  if (!p || (inst.v().order() / inst.u().order()) % *p != 0) return std::nullopt;
  if (!is_normal(inst.u(), inst.v())) return std::nullopt;
  return normal_case_witness(inst.u(), inst.v(), *p);
}

std::optional<NRPair> witness_nilpotent_case(const DiagonalInstance& inst) {
  const auto p = prime_normal_index(inst);
  if (!p || (inst.v().order() / inst.u().order()) % *p != 0) return std::nullopt;
  if (!is_nilpotent(inst.v())) return std::nullopt;
  return nilpotent_case_witness(inst.u(), inst.v(), *p);
}

std::optional<NRPair> witness_pgroup_case(const DiagonalInstance& inst) {
  const auto p = prime_normal_index(inst);
  if (!p || (inst.v().order() / inst.u().order()) % *p != 0) return std::nullopt;
  if (!is_p_group(inst.u(), *p)) return std::nullopt;
  return pgroup_case_witness(inst.u(), inst.v(), *p);
}

}  // namespace compositum
