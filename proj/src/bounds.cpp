#include "compositum/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "compositum/arith.hpp"
#include "compositum/error.hpp"

namespace compositum {

namespace {

Integer pow2(long e) {
  Integer r = 1;
  return r << static_cast<unsigned>(e);
}

// x * 2^e for a signed e.
Rational scale2(const Rational& x, long e) {
  if (e >= 0) return x * Rational(pow2(e));
  return x / Rational(pow2(-e));
}

// floor(log2 |x|) up to one; enough to pick a grid.
long approx_log2(const Rational& x) {
  return static_cast<long>(bit_length(numerator(x))) -
         static_cast<long>(bit_length(denominator(x)));
}

}  // namespace

BoundInterval::BoundInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) fail(ErrorKind::PreconditionFailed, "interval with lo > hi");
}

Rational round_down(const Rational& x, unsigned precision) {
  if (x == 0) return x;
  const long k = static_cast<long>(precision) - approx_log2(x);
  const Rational scaled = scale2(x, k);
  if (is_integer(scaled)) return x;
  return scale2(Rational(floor(scaled)), -k);
}

Rational round_up(const Rational& x, unsigned precision) {
  return -round_down(-x, precision);
}

BoundInterval BoundInterval::rounded(unsigned precision) const {
  return BoundInterval(round_down(lo_, precision), round_up(hi_, precision));
}

BoundInterval operator+(const BoundInterval& a, const BoundInterval& b) {
  return BoundInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

BoundInterval operator-(const BoundInterval& a, const BoundInterval& b) {
  return BoundInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

BoundInterval operator*(const BoundInterval& a, const BoundInterval& b) {
  const Rational p[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return BoundInterval(*std::min_element(std::begin(p), std::end(p)),
                       *std::max_element(std::begin(p), std::end(p)));
}

BoundInterval operator/(const BoundInterval& a, const BoundInterval& b) {
  if (b.contains(Rational(0))) fail(ErrorKind::PreconditionFailed, "division by an interval containing 0");
  return a * BoundInterval(1 / b.hi_, 1 / b.lo_);
}

BoundInterval BoundInterval::pow(unsigned e) const {
  if (e == 0) return BoundInterval(Rational(1));
  const Rational a = compositum::pow(lo_, e), b = compositum::pow(hi_, e);
  if (lo_ >= 0) return BoundInterval(a, b);
  if (hi_ <= 0) return e % 2 ? BoundInterval(a, b) : BoundInterval(b, a);
  if (e % 2) return BoundInterval(a, b);
  return BoundInterval(Rational(0), std::max(a, b));
}

namespace {

// Dyadic enclosure [Y, Y + 1] / 2^k of x^(1/q), x > 0, or the exact root.
BoundInterval root_point(const Rational& x, unsigned q, unsigned precision) {
  if (x == 0) return BoundInterval(Rational(0));
  Integer rn, rd;
  if (exact_root(numerator(x), q, rn) && exact_root(denominator(x), q, rd)) {
    return BoundInterval(Rational(rn, rd));
  }
  const long k = static_cast<long>(precision) - approx_log2(x) / static_cast<long>(q);
  const Integer n = floor(scale2(x, k * static_cast<long>(q)));
  const Integer y = root_floor(n, q);
  return BoundInterval(scale2(Rational(y), -k), scale2(Rational(y + 1), -k));
}

}  // namespace

BoundInterval root(const BoundInterval& x, unsigned q, unsigned precision) {
  if (q == 0) fail(ErrorKind::PreconditionFailed, "zeroth root");
  if (x.lo() < 0) fail(ErrorKind::PreconditionFailed, "root of an interval reaching below 0");
  if (q == 1) return x;
  return BoundInterval(root_point(x.lo(), q, precision).lo(),
                       root_point(x.hi(), q, precision).hi());
}

BoundInterval rational_power(const BoundInterval& x, unsigned p, unsigned q, unsigned precision) {
  const unsigned g = static_cast<unsigned>(std::gcd(p, q));
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return root(x.pow(p), q, precision);
}

BoundInterval schur_constant(unsigned n, unsigned precision) {
  if (n < 2) fail(ErrorKind::BadDegree, "c_n needs n >= 2, got " + std::to_string(n));
  Integer product = 1;
  for (unsigned i = 2; i <= n; ++i) product *= boost::multiprecision::pow(Integer(i), i);
  const unsigned q = n * (n - 1) / 2;
  const BoundInterval r = root(BoundInterval(Rational(product)), q, precision);
  const Rational top = n * (n - 1);
  BoundInterval c(top / r.hi(), top / r.lo());
  return c.is_exact() ? c : c.rounded(precision);
}

Rational big_T(const NumberFieldSpec& field, const std::vector<AlgebraicNumber>& a) {
  if (a.size() < 2) {
    fail(ErrorKind::NeedTwoElements, "T is a maximum over pairs i < j; got " +
                                         std::to_string(a.size()) + " element(s)");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].field() == field)) fail(ErrorKind::FieldMismatch, "element from another field");
    if (!is_totally_positive(a[i])) {
      fail(ErrorKind::NotTotallyPositive,
           "element " + std::to_string(i + 1) + " (" + a[i].to_string() + ") is not totally positive");
    }
  }
  Rational best;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Rational t = trace(Rational(4) * (a[i] * a[j]));
      if (first || t > best) best = t;
      first = false;
    }
  }
  return best;
}

BoundReport capital_C(const NumberFieldSpec& field, unsigned k,
                      const std::vector<AlgebraicNumber>& a, unsigned precision) {
  if (k < 2) fail(ErrorKind::BadDegree, "k must be at least 2, got " + std::to_string(k));
  if (!field.is_totally_real()) fail(ErrorKind::FieldNotTotallyReal, field.label() + " is not totally real");
  BoundReport rep;
  rep.label = field.label();
  rep.ell = static_cast<unsigned>(field.degree());
  rep.k = k;
  rep.precision = precision;
  rep.T = big_T(field, a);
  bool first = true;
  for (const std::uint64_t e64 : divisors(rep.ell)) {
    const unsigned e = static_cast<unsigned>(e64);
    DivisorTerm t;
    t.e = e;
    t.c = schur_constant(k * e, precision);
    const unsigned twice = k * (k * e - 1);  // twice the exponent
    t.exponent = Rational(twice, 2);
    const Rational top = Rational(k * e) * rep.T / rep.ell;
    const BoundInterval base = BoundInterval(top) / t.c;
    t.term = twice % 2 == 0 ? base.pow(twice / 2) : rational_power(base, twice, 2, precision);
    if (!t.term.is_exact()) t.term = t.term.rounded(precision);
    if (first) {
      rep.C = t.term;
      first = false;
    } else {
      rep.C = BoundInterval(std::max(rep.C.lo(), t.term.lo()), std::max(rep.C.hi(), t.term.hi()));
    }
    rep.terms.push_back(std::move(t));
  }
  return rep;
}

std::string_view to_string(SchurVerdict v) {
  switch (v) {
    case SchurVerdict::Holds: return "Holds";
    case SchurVerdict::Violated: return "Violated";
    case SchurVerdict::Undecided: return "Undecided";
  }
  return "?";
}

SchurReport schur_check(const AlgebraicNumber& b, unsigned precision) {
  const unsigned n = static_cast<unsigned>(b.field().degree());
  if (n < 2) fail(ErrorKind::BadDegree, "the trace inequality needs degree >= 2");
  if (!b.field().is_totally_real()) {
    fail(ErrorKind::FieldNotTotallyReal, b.field().label() + " is not totally real");
  }
  SchurReport rep;
  rep.trace_square = trace(b * b);
  rep.delta = delta_element(b);
  const unsigned q = n * (n - 1) / 2;
  const BoundInterval d = root(BoundInterval(rep.delta), q, precision);
  rep.rhs = schur_constant(n, precision) * d;
  if (!rep.rhs.is_exact()) rep.rhs = rep.rhs.rounded(precision);
  if (rep.trace_square >= rep.rhs.hi()) {
    rep.verdict = SchurVerdict::Holds;
  } else if (rep.trace_square < rep.rhs.lo()) {
    rep.verdict = SchurVerdict::Violated;
  } else {
    rep.verdict = SchurVerdict::Undecided;
  }
  return rep;
}

CauchyReport cauchy_trace_check(const AlgebraicNumber& a1, const AlgebraicNumber& a2,
                                const AlgebraicNumber& b) {
  require_same_field(a1, a2);
  require_same_field(a1, b);
  const AlgebraicNumber lhs = Rational(4) * (a1 * a2);
  const AlgebraicNumber rhs = b * b;
  return CauchyReport{check_succeq(lhs, rhs), trace(lhs), trace(rhs)};
}

}  // namespace compositum
