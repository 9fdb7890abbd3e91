#include "doctest.h"

#include "compositum/error.hpp"
#include "compositum/io.hpp"
#include "compositum/named_groups.hpp"
#include "compositum/reports.hpp"

using namespace compositum;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kQ2 = R"j({"label": "Q(sqrt2)", "min_poly": [-2, 0, 1],
  "elements": {"one": [1], "a": [2, 1], "r": ["0", "1"]}})j";

}  // namespace

TEST_CASE("group spec parsing") {
  const auto gs = parse_group_specs(
      "# S3 then its point stabilizer\n"
      "degree 3\n(1 2 3)\n(1 2)\n\n\n"
      "degree 3\n(1 2)\n\n"
      "degree 2\n()\n");
  REQUIRE(gs.size() == 3);
  CHECK(gs[0] == named::symmetric(3));
  CHECK(gs[1].order() == 2);
  CHECK(gs[2].is_trivial());
  CHECK(parse_group_specs("degree 4\n(1 2)(3 4)").front().order() == 2);
  CHECK(parse_group_specs("").empty());
  CHECK(parse_group_specs("degree 5\n").front().is_trivial());
  for (const auto& g : {named::dihedral(4), named::quaternion(), PermGroup::trivial(3)}) {
    CHECK(parse_group_specs(format_group_spec(g)).front() == g);
  }
}

TEST_CASE("group spec errors") {
  CHECK(kind_of([] { parse_group_specs("degree 3\n(1 2\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group_specs("(1 2)\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group_specs("degree x\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group_specs("degree 0\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group_specs("degree 3\n(1 4)\n"); }) == ErrorKind::InvalidPermutation);
  CHECK(message_of([] { parse_group_specs("degree 3\n(1 2)\n(1 2\n"); }).find("line 3") !=
        std::string::npos);
  Caps tiny;
  tiny.closure = 10;
  CHECK(kind_of([&] { parse_group_specs("degree 4\n(1 2 3 4)\n(1 2)\n", tiny); }) ==
        ErrorKind::CapExceeded);
  CHECK(kind_of([] { read_group_file("/nonexistent/group.txt"); }) == ErrorKind::ParseError);
}

TEST_CASE("field spec parsing") {
  const auto f = parse_field_spec(kQ2);
  CHECK(f.field.label() == "Q(sqrt2)");
  CHECK(f.field.min_poly() == RationalPoly{-2, 0, 1});
  REQUIRE(f.elements.size() == 3);
  CHECK(f.elements[0].first == "one");
  CHECK(f.elements[1].first == "a");
  CHECK(f.elements[2].second == AlgebraicNumber(f.field, RationalPoly{0, 1}));
  const auto g = parse_field_spec(
      R"j({"min_poly": [-1, -1, 1], "elements": {"x": ["1/2", "123456789012345678901234567/3"]}})j");
  CHECK(g.field.label() == "F");
  CHECK(g.elements[0].second.residue()[1] == Rational(Integer("123456789012345678901234567"), 3));
  CHECK(parse_field_spec(R"j({"min_poly": [-2, 0, 1]})j").elements.empty());
}

TEST_CASE("field spec errors") {
  for (const char* bad : {"{", "[]", R"j({"label": "x"})j", R"j({"min_poly": [-2, 0, 1.0]})j",
                          R"j({"min_poly": [-2, 0, "1/0"]})j", R"j({"min_poly": "x^2-2"})j",
                          R"j({"min_poly": [-2, 0, 1], "elements": {"a": [1, 2, 3]}})j",
                          R"j({"min_poly": [-2, 0, 1], "elements": [1]})j",
                          R"j({"label": 3, "min_poly": [-2, 0, 1]})j"}) {
    CHECK(kind_of([&] { parse_field_spec(bad); }) == ErrorKind::ParseError);
  }
  CHECK(kind_of([] { parse_field_spec(R"j({"min_poly": [-1, 0, 1]})j"); }) == ErrorKind::NotIrreducible);
  CHECK(kind_of([] { parse_field_spec(R"j({"min_poly": [-1, 0, 2]})j"); }) ==
        ErrorKind::PreconditionFailed);
}

TEST_CASE("scientific formatting rounds outward") {
  CHECK(scientific(Rational(1, 3), 5, false) == "3.3333e-01");
  CHECK(scientific(Rational(1, 3), 5, true) == "3.3334e-01");
  CHECK(scientific(Rational(12345), 3, true) == "1.24e+04");
  CHECK(scientific(Rational(99999), 3, true) == "1.00e+05");
  CHECK(scientific(Rational(-2, 3), 3, false) == "-6.67e-01");
  CHECK(scientific(Rational(1), 1, false) == "1e+00");
  CHECK(scientific(Rational(0), 4, false) == "0");
}

TEST_CASE("decision reports round-trip and print") {
  const auto s3 = named::symmetric(3);
  const auto s2 = PermGroup::generated(3, {Permutation::from_cycles("(1 2)", 3)});
  const auto c2 = named::cyclic(2), one = PermGroup::trivial(2);
  const auto a = decide(DiagonalInstance(s2, s3, one, c2));
  CHECK(to_text(a) == "NoDiagonal (MaxNonNormal)\n");
  const auto b = decide(DiagonalInstance(one, c2, one, c2));
  CHECK(to_text(b).rfind("Diagonal (IndexDivisibility)\nwitness: <(1 2)(3 4)> (order 2)\n", 0) == 0);
  const auto c = decide(DiagonalInstance(PermGroup::trivial(4), named::cyclic(4), one, c2));
  CHECK(c.method == Method::BruteForce);
  for (const auto& r : {a, b, c}) {
    CHECK(from_structured<DecisionReport>(to_structured(r)) == r);
    CHECK(to_text(r) == to_text(from_structured<DecisionReport>(to_structured(r))));
  }
  CHECK(kind_of([&] { from_structured<DecisionReport>("{}"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { from_structured<BoundReport>(to_structured(a)); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { from_structured<DecisionReport>("not json"); }) == ErrorKind::ParseError);
}

TEST_CASE("bound and field reports round-trip") {
  const auto f = parse_field_spec(R"j({"label": "Q(sqrt2)", "min_poly": [-2, 0, 1],
      "elements": {"one": [1], "a": [2, 1]}})j");
  const auto bound = capital_C(f.field, 3, f.values());
  CHECK(from_structured<BoundReport>(to_structured(bound)) == bound);
  CHECK(to_text(bound).find("T = 16") != std::string::npos);
  const auto g = parse_field_spec(kQ2);
  const auto other = parse_field_spec(R"j({"label": "Q(sqrt5)", "min_poly": [-5, 0, 1]})j");
  const auto fr = field_report(g, kDefaultPrecision, &other);
  CHECK(from_structured<FieldReport>(to_structured(fr)) == fr);
  CHECK(to_text(fr).find("totally real; order disc 8; prime support {2}") != std::string::npos);
  CHECK(to_text(fr).find("element r = a: trace 0, norm -2, delta 8, totally positive no") !=
        std::string::npos);
  const auto complex = parse_field_spec(R"j({"min_poly": [1, 0, 1], "elements": {"i": [0, 1]}})j");
  const auto cr = field_report(complex);
  CHECK_FALSE(cr.elements[0].totally_positive);
  CHECK(from_structured<FieldReport>(to_structured(cr)) == cr);
  CHECK(to_text(cr).find("not totally real; order disc -4; prime support {2}") != std::string::npos);
}

TEST_CASE("group-side reports round-trip") {
  const auto c2 = named::cyclic(2);
  const auto gr = goursat_report(c2, c2, true);
  CHECK(gr.count == 5);
  CHECK(to_text(gr).rfind("5 subgroups\n", 0) == 0);
  CHECK(from_structured<GoursatReport>(to_structured(gr)) == gr);
  const auto quiet = goursat_report(named::symmetric(3), named::cyclic(4), false);
  CHECK(quiet.quintuples.empty());
  CHECK(from_structured<GoursatReport>(to_structured(quiet)) == quiet);

  const GaloisDatum cubic(named::symmetric(3), PermGroup::generated(3, {Permutation::from_cycles("(1 2)", 3)}));
  const GaloisDatum quad(c2, PermGroup::trivial(2));
  const auto h = check_theorem_hypotheses(cubic, 2, {Tri::Yes, Tri::Yes});
  CHECK(to_text(h).find("conditions (iii),(iv): PASS") != std::string::npos);
  CHECK(from_structured<HypothesisReport>(to_structured(h)) == h);
  const auto br = bridge_report(quad, quad);
  CHECK(br.classification.diagonal == 1);
  CHECK(from_structured<BridgeReport>(to_structured(br)) == br);
  const auto br2 = bridge_report(cubic, quad);
  CHECK(br2.no_diagonal);
  CHECK(from_structured<BridgeReport>(to_structured(br2)) == br2);
}
