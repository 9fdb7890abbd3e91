#include "compositum/galois_bridge.hpp"

#include "compositum/error.hpp"
#include "compositum/group_core.hpp"

namespace compositum {

GaloisDatum::GaloisDatum(PermGroup closure_group, PermGroup stabilizer,
                         bool allow_nontrivial_core)
    : t_(std::move(closure_group)), s_(std::move(stabilizer)) {
  if (!s_.is_subgroup_of(t_) || s_.order() == t_.order()) {
    fail(ErrorKind::NotAProperSubgroup, "the stabilizer must be a proper subgroup of the closure group");
  }
  core_trivial_ = normal_core(s_, t_).is_trivial();
  if (!core_trivial_ && !allow_nontrivial_core) {
    fail(ErrorKind::PreconditionFailed, "the stabilizer has a nontrivial core in the closure group");
  }
}

std::string_view to_string(IntermediateLabel l) {
  switch (l) {
    case IntermediateLabel::ContainsK: return "ContainsK";
    case IntermediateLabel::SubfieldOfL: return "SubfieldOfL";
    case IntermediateLabel::Diagonal: return "Diagonal";
  }
  return "?";
}

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

Tri parse_tri(std::string_view text) {
  if (text == "yes" || text == "true") return Tri::Yes;
  if (text == "no" || text == "false") return Tri::No;
  if (text == "unknown") return Tri::Unknown;
  fail(ErrorKind::ParseError, "expected yes, no or unknown, got '" + std::string(text) + "'");
}

namespace {

DiagonalInstance instance_of(const GaloisDatum& k, const GaloisDatum& l, const Caps& caps) {
  return DiagonalInstance(k.stabilizer(), k.closure_group(), l.stabilizer(), l.closure_group(), caps);
}

}  // namespace

Classification classify_intermediates(const GaloisDatum& k, const GaloisDatum& l,
                                      const Caps& caps) {
  const DiagonalInstance inst = instance_of(k, l, caps);
  const ProductGroup tv = inst.product();
  const GoursatEnumerator e(tv, inst.t_lattice(), inst.v_lattice(), caps);
  const std::size_t dt = inst.t().degree();
  const Permutation ev = inst.v().identity();
  Classification out;
  for (auto& g : e.subgroups({inst.s(), inst.u()})) {
    bool above_tu = true;  // U x 1 is already inside by the floor
    for (const auto& t : inst.t().generators()) above_tu &= g.contains(tv.embed(t, ev));
    bool inside_sv = true;
    for (const auto& x : g.generators()) inside_sv &= inst.s().contains(project_left(x, dt));
    IntermediateLabel label = IntermediateLabel::Diagonal;
    if (inside_sv) {
      label = IntermediateLabel::ContainsK;
      ++out.contains_k;
    } else if (above_tu) {
      label = IntermediateLabel::SubfieldOfL;
      ++out.subfield_of_l;
    } else {
      ++out.diagonal;
    }
    out.intermediates.push_back({std::move(g), label});
  }
  return out;
}

HypothesisReport check_theorem_hypotheses(const GaloisDatum& k, std::uint64_t ell,
                                          const HypothesisFlags& flags, const Caps& caps) {
  if (ell == 0) fail(ErrorKind::PreconditionFailed, "the degree of L must be positive");
  HypothesisReport r;
  r.k = k.degree();
  r.ell = ell;
  r.cond_i = flags.disc_bound_ok;
  r.cond_ii = flags.coprime_ok;
  r.cond_iii = is_maximal(k.stabilizer(), k.closure_group(), caps.closure);
  const bool coprime_degree = ell % r.k != 0;
  r.cond_iv = !is_normal(k.stabilizer(), k.closure_group()) || coprime_degree;
  r.cond_iv_galois_reading = !k.stabilizer().is_trivial() || coprime_degree;
  r.readings_agree = r.cond_iv == r.cond_iv_galois_reading;
  if (r.cond_i == Tri::No || r.cond_ii == Tri::No || !r.cond_iii || !r.cond_iv) {
    r.overall = Tri::No;
  } else if (r.cond_i == Tri::Yes && r.cond_ii == Tri::Yes) {
    r.overall = Tri::Yes;
  } else {
    r.overall = Tri::Unknown;
  }
  return r;
}

bool verify_bridge(const GaloisDatum& k, const GaloisDatum& l, const Caps& caps) {
  const Classification c = classify_intermediates(k, l, caps);
  const bool none = c.diagonal == 0;
  const DecisionReport d = decide(instance_of(k, l, caps));
  if (none != (d.verdict == Verdict::NoDiagonal)) {
    fail(ErrorKind::Internal, "intermediate classification disagrees with the diagonal decision");
  }
  return none;
}

}  // namespace compositum
