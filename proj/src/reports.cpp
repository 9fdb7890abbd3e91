#include "compositum/reports.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "compositum/error.hpp"

namespace compositum {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Builders

FieldReport field_report(const FieldFile& f, unsigned precision, const FieldFile* against) {
  FieldReport r;
  r.label = f.field.label();
  r.min_poly = f.field.min_poly();
  r.irreducibility = f.field.irreducibility();
  r.totally_real = f.field.is_totally_real();
  r.order_disc = order_discriminant(f.field);
  const Factorization fz = factor(r.order_disc);
  for (const auto& pe : fz.primes) r.prime_support.push_back(pe.first);
  r.support_complete = fz.complete();
  for (const auto& [name, a] : f.elements) {
    FieldElementReport e;
    e.name = name;
    e.residue = a.residue();
    e.trace = trace(a);
    e.norm = norm(a);
    e.delta = delta_element(a);
    if (r.totally_real) {
      e.totally_positive = is_totally_positive(a);
      if (f.field.degree() >= 2) {
        SchurReport s = schur_check(a, precision);
        if (s.verdict == SchurVerdict::Undecided) s = schur_check(a, 4 * precision);
        e.schur = s;
      }
    }
    r.elements.push_back(std::move(e));
  }
  if (against) {
    const CoprimeReport c = discs_coprime(f.field, against->field);
    r.coprime = CoprimeSummary{against->field.label(), c.verdict, c.shared, c.reason};
  }
  return r;
}

GoursatReport goursat_report(const PermGroup& a, const PermGroup& b, bool list, const Caps& caps) {
  GoursatReport r;
  r.left = a;
  r.right = b;
  const ProductGroup ab(a, b, caps);
  const GoursatEnumerator e(ab, caps);
  e.for_each({}, [&](const Quintuple& q, const PermGroup&) {
    ++r.count;
    if (list) r.quintuples.push_back(q);
    return true;
  });
  return r;
}

BridgeReport bridge_report(const GaloisDatum& k, const GaloisDatum& l, const Caps& caps) {
  BridgeReport r;
  r.classification = classify_intermediates(k, l, caps);
  r.no_diagonal = verify_bridge(k, l, caps);
  return r;
}

// ---------------------------------------------------------------------------
// Text

std::string scientific(const Rational& x, unsigned digits, bool round_up) {
  if (x == 0) return "0";
  if (x < 0) return "-" + scientific(-x, digits, !round_up);
  // Find e with 10^e <= x < 10^(e+1), then scale to `digits` digits.
  long e = static_cast<long>((static_cast<double>(bit_length(numerator(x))) -
                              static_cast<double>(bit_length(denominator(x)))) * 0.30103);
  auto ten = [](long k) { return Rational(boost::multiprecision::pow(Integer(10), static_cast<unsigned>(k))); };
  auto scaled = [&](long k) { return k >= 0 ? x * ten(k) : x / ten(-k); };
  while (scaled(-e) >= 10) ++e;
  while (scaled(-e) < 1) --e;
  const Rational s = scaled(static_cast<long>(digits) - 1 - e);
  Integer m = round_up ? ceil(s) : floor(s);
  if (m == boost::multiprecision::pow(Integer(10), digits)) {
    m /= 10;
    ++e;
  }
  std::string d = m.str();
  std::string out = d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  out += "e";
  out += e < 0 ? "-" : "+";
  const std::string ex = std::to_string(e < 0 ? -e : e);
  out += (ex.size() < 2 ? "0" : "") + ex;
  return out;
}

namespace {

std::string inline_group(const PermGroup& g) {
  std::string out = "<";
  if (g.generators().empty()) out += "()";
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (i) out += ", ";
    out += g.generators()[i].to_cycles();
  }
  return out + "> (order " + std::to_string(g.order()) + ")";
}

std::string interval_text(const BoundInterval& b) {
  if (b.is_exact()) return to_string(b.lo());
  return "[" + scientific(b.lo(), 16, false) + ", " + scientific(b.hi(), 16, true) + "]";
}

std::string pass(bool b) { return b ? "PASS" : "FAIL"; }

std::string tri_text(Tri t) {
  switch (t) {
    case Tri::Yes: return "PASS";
    case Tri::No: return "FAIL";
    case Tri::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::string prime_set(const std::vector<Integer>& v, bool complete) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  if (!complete) out += v.empty() ? "?" : ", ?";
  return out + "}";
}

}  // namespace

std::string to_text(const DecisionReport& r) {
  std::ostringstream o;
  o << to_string(r.verdict) << " (" << to_string(r.method) << ")\n";
  if (r.method == Method::BruteForce) o << "intermediate groups scanned: " << r.intermediates_scanned << "\n";
  if (r.witness) o << "witness: " << inline_group(*r.witness) << "\n";
  if (r.pair) {
    o << "N: " << inline_group(r.pair->n) << "\n";
    o << "R: " << inline_group(r.pair->r) << "\n";
  }
  if (r.witness) o << "certificate: " << (r.certificate_checked ? "verified" : "unchecked") << "\n";
  return o.str();
}

std::string to_text(const BoundReport& r) {
  std::ostringstream o;
  o << "C(L, k) for " << r.label << ": l = " << r.ell << ", k = " << r.k << ", T = " << to_string(r.T)
    << ", precision " << r.precision << " bits\n";
  o << std::left << std::setw(4) << "e" << std::setw(48) << "c_ke" << std::setw(10) << "exponent"
    << "term\n";
  for (const auto& t : r.terms) {
    o << std::setw(4) << t.e << std::setw(48) << interval_text(t.c) << std::setw(10)
      << to_string(t.exponent) << interval_text(t.term) << "\n";
  }
  o << "C in " << interval_text(r.C) << "\n";
  o << "certified threshold: " << scientific(r.C.hi(), 16, true) << "\n";
  return o.str();
}

std::string to_text(const FieldReport& r) {
  std::ostringstream o;
  o << "field " << r.label << ": " << r.min_poly.to_string() << "\n";
  o << "irreducibility: " << to_string(r.irreducibility) << "\n";
  o << (r.totally_real ? "totally real" : "not totally real") << "; order disc " << r.order_disc
    << "; prime support " << prime_set(r.prime_support, r.support_complete) << "\n";
  for (const auto& e : r.elements) {
    o << "element " << e.name << " = " << e.residue.to_string('a') << ": trace " << to_string(e.trace)
      << ", norm " << to_string(e.norm) << ", delta " << to_string(e.delta);
    if (e.totally_positive) o << ", totally positive " << (*e.totally_positive ? "yes" : "no");
    if (e.schur) {
      o << ", trace inequality " << to_string(e.schur->verdict);
      if (e.schur->verdict == SchurVerdict::Violated) o << " (INTERNAL ERROR: this must never happen)";
    }
    o << "\n";
  }
  if (r.coprime) {
    o << "discriminants vs " << r.coprime->other_label << ": " << to_string(r.coprime->verdict)
      << " (" << r.coprime->reason << ")\n";
  }
  return o.str();
}

std::string to_text(const GoursatReport& r) {
  std::ostringstream o;
  o << r.count << " subgroups\n";
  for (const auto& q : r.quintuples) {
    o << "A1 " << inline_group(q.a1) << ", A2 " << inline_group(q.a2) << ", B1 " << inline_group(q.b1)
      << ", B2 " << inline_group(q.b2) << ", phi [";
    for (std::size_t i = 0; i < q.phi.size(); ++i) o << (i ? " " : "") << q.phi[i];
    o << "]\n";
  }
  return o.str();
}

std::string to_text(const HypothesisReport& r) {
  std::ostringstream o;
  o << "k = " << r.k << ", l = " << r.ell << "\n";
  o << "(i) discriminant above C: " << tri_text(r.cond_i) << "\n";
  o << "(ii) coprime discriminants: " << tri_text(r.cond_ii) << "\n";
  o << "(iii) K has no proper intermediate field: " << pass(r.cond_iii) << "\n";
  o << "(iv) K not Galois or k does not divide l: " << pass(r.cond_iv) << "\n";
  o << "(iv) Galois reading (stabilizer nontrivial or k does not divide l): "
    << pass(r.cond_iv_galois_reading) << (r.readings_agree ? "" : " (readings disagree)") << "\n";
  o << "conditions (iii),(iv): " << pass(r.cond_iii && r.cond_iv) << "\n";
  o << "overall: " << tri_text(r.overall) << "\n";
  return o.str();
}

std::string to_text(const BridgeReport& r) {
  std::ostringstream o;
  const auto& c = r.classification;
  o << "intermediate groups: " << c.intermediates.size() << "\n";
  o << "ContainsK: " << c.contains_k << "\n";
  o << "SubfieldOfL: " << c.subfield_of_l << "\n";
  o << "Diagonal: " << c.diagonal << "\n";
  for (const auto& g : c.intermediates) {
    o << "  " << std::left << std::setw(12) << to_string(g.label) << inline_group(g.group) << "\n";
  }
  o << "every intermediate field lies in L or contains K: " << (r.no_diagonal ? "yes" : "no") << "\n";
  return o.str();
}

// ---------------------------------------------------------------------------
// Structured

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ParseError, what); }

const Json& at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j[key];
}

std::string str(const Json& j, const char* key) {
  const Json& v = at(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool boolean(const Json& j, const char* key) {
  const Json& v = at(j, key);
  if (!v.is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::uint64_t uint(const Json& j, const char* key) {
  const Json& v = at(j, key);
  if (!v.is_number_unsigned()) bad(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

Json rational_json(const Rational& q) { return to_string(q); }
Rational rational_of(const Json& j) {
  if (!j.is_string()) bad("rationals are encoded as strings");
  return parse_rational(j.get<std::string>());
}
Integer integer_of(const Json& j) {
  const Rational q = rational_of(j);
  if (!is_integer(q)) bad("expected an integer");
  return numerator(q);
}

Json poly_json(const RationalPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(rational_json(c));
  return a;
}
RationalPoly poly_of(const Json& j) {
  if (!j.is_array()) bad("polynomials are arrays of rationals");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_of(x));
  return RationalPoly(std::move(c));
}

Json integers_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}
std::vector<Integer> integers_of(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  std::vector<Integer> v;
  for (const auto& x : j) v.push_back(integer_of(x));
  return v;
}

Json group_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycles());
  return Json{{"degree", g.degree()}, {"order", g.order()}, {"generators", gens}};
}
PermGroup group_of(const Json& j) {
  const std::size_t degree = uint(j, "degree");
  std::vector<Permutation> gens;
  const Json& g = at(j, "generators");
  if (!g.is_array()) bad("generators must be an array");
  for (const auto& c : g) {
    if (!c.is_string()) bad("generators are cycle strings");
    gens.push_back(Permutation::from_cycles(c.get<std::string>(), degree));
  }
  PermGroup out = PermGroup::generated(degree, gens, Caps{}.closure * 50);
  if (j.contains("order") && out.order() != uint(j, "order")) bad("group order does not match its generators");
  return out;
}

Json interval_json(const BoundInterval& b) {
  return Json{{"lo", rational_json(b.lo())}, {"hi", rational_json(b.hi())}};
}
BoundInterval interval_of(const Json& j) {
  return BoundInterval(rational_of(at(j, "lo")), rational_of(at(j, "hi")));
}

template <class E, std::size_t N>
E enum_of(const Json& j, const char* key, const E (&values)[N]) {
  const std::string s = str(j, key);
  for (E v : values) {
    if (to_string(v) == s) return v;
  }
  bad("unknown value '" + s + "' for '" + key + "'");
}

constexpr Verdict kVerdicts[] = {Verdict::Diagonal, Verdict::NoDiagonal};
constexpr Method kMethods[] = {Method::MaxNonNormal, Method::IndexDivisibility, Method::BruteForce,
                               Method::WitnessConstruction};
constexpr SchurVerdict kSchur[] = {SchurVerdict::Holds, SchurVerdict::Violated, SchurVerdict::Undecided};
constexpr Coprimality kCoprime[] = {Coprimality::Coprime, Coprimality::NotCoprime,
                                    Coprimality::Inconclusive};
constexpr IrreducibilityStatus kIrr[] = {IrreducibilityStatus::Proven, IrreducibilityStatus::UserAsserted};
constexpr Tri kTri[] = {Tri::Yes, Tri::No, Tri::Unknown};
constexpr IntermediateLabel kLabels[] = {IntermediateLabel::ContainsK, IntermediateLabel::SubfieldOfL,
                                         IntermediateLabel::Diagonal};

Json parse_kind(const std::string& text, const char* kind) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(e.what());
  }
  if (str(j, "kind") != kind) bad(std::string("expected a ") + kind + " report");
  return j;
}

Json schur_json(const SchurReport& s) {
  return Json{{"verdict", to_string(s.verdict)},
              {"trace_square", rational_json(s.trace_square)},
              {"delta", rational_json(s.delta)},
              {"rhs", interval_json(s.rhs)}};
}
SchurReport schur_of(const Json& j) {
  SchurReport s;
  s.verdict = enum_of(j, "verdict", kSchur);
  s.trace_square = rational_of(at(j, "trace_square"));
  s.delta = rational_of(at(j, "delta"));
  s.rhs = interval_of(at(j, "rhs"));
  return s;
}

}  // namespace

std::string to_structured(const DecisionReport& r) {
  Json j{{"kind", "diagonal"},
         {"verdict", to_string(r.verdict)},
         {"method", to_string(r.method)},
         {"certificate_checked", r.certificate_checked},
         {"intermediates_scanned", r.intermediates_scanned}};
  j["witness"] = r.witness ? group_json(*r.witness) : Json();
  j["pair"] = r.pair ? Json{{"n", group_json(r.pair->n)}, {"r", group_json(r.pair->r)}} : Json();
  return j.dump(2) + "\n";
}

template <>
DecisionReport from_structured<DecisionReport>(const std::string& text) {
  const Json j = parse_kind(text, "diagonal");
  DecisionReport r;
  r.verdict = enum_of(j, "verdict", kVerdicts);
  r.method = enum_of(j, "method", kMethods);
  r.certificate_checked = boolean(j, "certificate_checked");
  r.intermediates_scanned = uint(j, "intermediates_scanned");
  if (!at(j, "witness").is_null()) r.witness = group_of(j["witness"]);
  if (!at(j, "pair").is_null()) r.pair = NRPair{group_of(at(j["pair"], "n")), group_of(at(j["pair"], "r"))};
  return r;
}

std::string to_structured(const BoundReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    terms.push_back(Json{{"e", t.e},
                         {"c", interval_json(t.c)},
                         {"exponent", rational_json(t.exponent)},
                         {"term", interval_json(t.term)}});
  }
  const Json j{{"kind", "bound"},     {"label", r.label},         {"ell", r.ell},
               {"k", r.k},            {"precision", r.precision}, {"T", rational_json(r.T)},
               {"terms", terms},      {"C", interval_json(r.C)}};
  return j.dump(2) + "\n";
}

template <>
BoundReport from_structured<BoundReport>(const std::string& text) {
  const Json j = parse_kind(text, "bound");
  BoundReport r;
  r.label = str(j, "label");
  r.ell = static_cast<unsigned>(uint(j, "ell"));
  r.k = static_cast<unsigned>(uint(j, "k"));
  r.precision = static_cast<unsigned>(uint(j, "precision"));
  r.T = rational_of(at(j, "T"));
  for (const auto& t : at(j, "terms")) {
    DivisorTerm d;
    d.e = static_cast<unsigned>(uint(t, "e"));
    d.c = interval_of(at(t, "c"));
    d.exponent = rational_of(at(t, "exponent"));
    d.term = interval_of(at(t, "term"));
    r.terms.push_back(std::move(d));
  }
  r.C = interval_of(at(j, "C"));
  return r;
}

std::string to_structured(const FieldReport& r) {
  Json elements = Json::array();
  for (const auto& e : r.elements) {
    Json x{{"name", e.name},
           {"residue", poly_json(e.residue)},
           {"trace", rational_json(e.trace)},
           {"norm", rational_json(e.norm)},
           {"delta", rational_json(e.delta)}};
    x["totally_positive"] = e.totally_positive ? Json(*e.totally_positive) : Json();
    x["schur"] = e.schur ? schur_json(*e.schur) : Json();
    elements.push_back(std::move(x));
  }
  Json j{{"kind", "field"},
         {"label", r.label},
         {"min_poly", poly_json(r.min_poly)},
         {"irreducibility", to_string(r.irreducibility)},
         {"totally_real", r.totally_real},
         {"order_disc", r.order_disc.str()},
         {"prime_support", integers_json(r.prime_support)},
         {"support_complete", r.support_complete},
         {"elements", elements}};
  j["coprime"] = r.coprime ? Json{{"other", r.coprime->other_label},
                                  {"verdict", to_string(r.coprime->verdict)},
                                  {"shared", integers_json(r.coprime->shared)},
                                  {"reason", r.coprime->reason}}
                           : Json();
  return j.dump(2) + "\n";
}

template <>
FieldReport from_structured<FieldReport>(const std::string& text) {
  const Json j = parse_kind(text, "field");
  FieldReport r;
  r.label = str(j, "label");
  r.min_poly = poly_of(at(j, "min_poly"));
  r.irreducibility = enum_of(j, "irreducibility", kIrr);
  r.totally_real = boolean(j, "totally_real");
  r.order_disc = integer_of(at(j, "order_disc"));
  r.prime_support = integers_of(at(j, "prime_support"));
  r.support_complete = boolean(j, "support_complete");
  for (const auto& x : at(j, "elements")) {
    FieldElementReport e;
    e.name = str(x, "name");
    e.residue = poly_of(at(x, "residue"));
    e.trace = rational_of(at(x, "trace"));
    e.norm = rational_of(at(x, "norm"));
    e.delta = rational_of(at(x, "delta"));
    if (!at(x, "totally_positive").is_null()) e.totally_positive = boolean(x, "totally_positive");
    if (!at(x, "schur").is_null()) e.schur = schur_of(x["schur"]);
    r.elements.push_back(std::move(e));
  }
  if (!at(j, "coprime").is_null()) {
    const Json& c = j["coprime"];
    r.coprime = CoprimeSummary{str(c, "other"), enum_of(c, "verdict", kCoprime),
                               integers_of(at(c, "shared")), str(c, "reason")};
  }
  return r;
}

std::string to_structured(const GoursatReport& r) {
  Json qs = Json::array();
  for (const auto& q : r.quintuples) {
    qs.push_back(Json{{"a1", group_json(q.a1)},
                      {"a2", group_json(q.a2)},
                      {"b1", group_json(q.b1)},
                      {"b2", group_json(q.b2)},
                      {"phi", q.phi}});
  }
  const Json j{{"kind", "goursat"},
               {"left", group_json(r.left)},
               {"right", group_json(r.right)},
               {"count", r.count},
               {"quintuples", qs}};
  return j.dump(2) + "\n";
}

template <>
GoursatReport from_structured<GoursatReport>(const std::string& text) {
  const Json j = parse_kind(text, "goursat");
  GoursatReport r;
  r.left = group_of(at(j, "left"));
  r.right = group_of(at(j, "right"));
  r.count = uint(j, "count");
  for (const auto& q : at(j, "quintuples")) {
    Quintuple x{group_of(at(q, "a1")), group_of(at(q, "a2")), group_of(at(q, "b1")),
                group_of(at(q, "b2")), {}};
    for (const auto& v : at(q, "phi")) {
      if (!v.is_number_unsigned()) bad("phi entries are coset indices");
      x.phi.push_back(v.get<std::size_t>());
    }
    r.quintuples.push_back(std::move(x));
  }
  return r;
}

std::string to_structured(const HypothesisReport& r) {
  const Json j{{"kind", "check"},
               {"k", r.k},
               {"ell", r.ell},
               {"cond_i", to_string(r.cond_i)},
               {"cond_ii", to_string(r.cond_ii)},
               {"cond_iii", r.cond_iii},
               {"cond_iv", r.cond_iv},
               {"cond_iv_galois_reading", r.cond_iv_galois_reading},
               {"readings_agree", r.readings_agree},
               {"overall", to_string(r.overall)}};
  return j.dump(2) + "\n";
}

template <>
HypothesisReport from_structured<HypothesisReport>(const std::string& text) {
  const Json j = parse_kind(text, "check");
  HypothesisReport r;
  r.k = uint(j, "k");
  r.ell = uint(j, "ell");
  r.cond_i = enum_of(j, "cond_i", kTri);
  r.cond_ii = enum_of(j, "cond_ii", kTri);
  r.cond_iii = boolean(j, "cond_iii");
  r.cond_iv = boolean(j, "cond_iv");
  r.cond_iv_galois_reading = boolean(j, "cond_iv_galois_reading");
  r.readings_agree = boolean(j, "readings_agree");
  r.overall = enum_of(j, "overall", kTri);
  return r;
}

std::string to_structured(const BridgeReport& r) {
  const auto& c = r.classification;
  Json groups = Json::array();
  for (const auto& g : c.intermediates) {
    groups.push_back(Json{{"label", to_string(g.label)}, {"group", group_json(g.group)}});
  }
  const Json j{{"kind", "bridge"},
               {"contains_k", c.contains_k},
               {"subfield_of_l", c.subfield_of_l},
               {"diagonal", c.diagonal},
               {"no_diagonal", r.no_diagonal},
               {"intermediates", groups}};
  return j.dump(2) + "\n";
}

template <>
BridgeReport from_structured<BridgeReport>(const std::string& text) {
  const Json j = parse_kind(text, "bridge");
  BridgeReport r;
  auto& c = r.classification;
  c.contains_k = uint(j, "contains_k");
  c.subfield_of_l = uint(j, "subfield_of_l");
  c.diagonal = uint(j, "diagonal");
  r.no_diagonal = boolean(j, "no_diagonal");
  for (const auto& g : at(j, "intermediates")) {
    c.intermediates.push_back({group_of(at(g, "group")), enum_of(g, "label", kLabels)});
  }
  return r;
}

}  // namespace compositum
