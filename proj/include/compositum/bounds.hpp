#pragma once

#include <string>
#include <vector>

#include "compositum/numberfield.hpp"
#include "compositum/rational.hpp"

namespace compositum {

inline constexpr unsigned kDefaultPrecision = 128;

/// Closed interval [lo, hi] with exact rational endpoints enclosing a real
/// number. Inexact results are rounded outward to dyadic rationals with
/// `precision` significant bits.
class BoundInterval {
 public:
  BoundInterval() = default;
  BoundInterval(const Rational& value) : lo_(value), hi_(value) {}  // NOLINT: exact value
  /// Throws PreconditionFailed when lo > hi.
  BoundInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool is_exact() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const BoundInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  friend BoundInterval operator+(const BoundInterval& a, const BoundInterval& b);
  friend BoundInterval operator-(const BoundInterval& a, const BoundInterval& b);
  friend BoundInterval operator*(const BoundInterval& a, const BoundInterval& b);
  /// Throws PreconditionFailed when b contains zero.
  friend BoundInterval operator/(const BoundInterval& a, const BoundInterval& b);
  friend bool operator==(const BoundInterval&, const BoundInterval&) = default;

  BoundInterval pow(unsigned e) const;
  /// Outward rounding of both endpoints; exact endpoints that already fit
  /// are kept.
  BoundInterval rounded(unsigned precision) const;

 private:
  Rational lo_ = 0, hi_ = 0;
};

/// Largest dyadic <= x (resp. smallest >= x) with `precision` significant bits.
Rational round_down(const Rational& x, unsigned precision);
Rational round_up(const Rational& x, unsigned precision);

/// Enclosure of x^(1/q) for x >= 0; exact when x is a perfect q-th power.
BoundInterval root(const BoundInterval& x, unsigned q, unsigned precision);
/// Enclosure of x^(p/q) for x >= 0.
BoundInterval rational_power(const BoundInterval& x, unsigned p, unsigned q, unsigned precision);

/// c_n = (n^2 - n) / (1^1 2^2 ... n^n)^(2/(n^2 - n)). Throws BadDegree for n < 2.
BoundInterval schur_constant(unsigned n, unsigned precision = kDefaultPrecision);

/// max over i < j of Tr(4 a_i a_j). Throws NeedTwoElements, NotTotallyPositive,
/// FieldMismatch.
Rational big_T(const NumberFieldSpec& field, const std::vector<AlgebraicNumber>& a);

struct DivisorTerm {
  unsigned e = 0;
  BoundInterval c;        // c_{ke}
  Rational exponent;      // (k^2 e - k) / 2
  BoundInterval term;     // (k e T / (l c_{ke}))^exponent

  friend bool operator==(const DivisorTerm&, const DivisorTerm&) = default;
};

struct BoundReport {
  std::string label;
  unsigned ell = 0;
  unsigned k = 0;
  unsigned precision = kDefaultPrecision;
  Rational T;
  std::vector<DivisorTerm> terms;
  BoundInterval C;  // C.hi is the certified threshold

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// max over divisors e of l of (k e T / (l c_{ke}))^((k^2 e - k)/2).
/// Throws BadDegree for k < 2, plus the errors of big_T.
BoundReport capital_C(const NumberFieldSpec& field, unsigned k,
                      const std::vector<AlgebraicNumber>& a,
                      unsigned precision = kDefaultPrecision);

enum class SchurVerdict { Holds, Violated, Undecided };
std::string_view to_string(SchurVerdict v);

struct SchurReport {
  SchurVerdict verdict = SchurVerdict::Undecided;
  Rational trace_square;  // Tr(b^2)
  Rational delta;         // delta_element(b)
  BoundInterval rhs;      // c_n delta^(2/(n^2 - n))

  friend bool operator==(const SchurReport&, const SchurReport&) = default;
};

/// Tr(b^2) >= c_n delta(b)^(2/(n^2-n)). Undecided when Tr(b^2) falls inside the
/// enclosure of the right side; retry with more precision. Throws BadDegree
/// for degree 1 and FieldNotTotallyReal.
SchurReport schur_check(const AlgebraicNumber& b, unsigned precision = kDefaultPrecision);

struct CauchyReport {
  bool holds = false;     // 4 a1 a2 >= b^2 (totally)
  Rational trace_lhs;     // Tr(4 a1 a2)
  Rational trace_rhs;     // Tr(b^2)
};

/// Elementwise Cauchy-Schwarz consequence 4 a1 a2 >= b^2. Throws FieldMismatch.
CauchyReport cauchy_trace_check(const AlgebraicNumber& a1, const AlgebraicNumber& a2,
                                const AlgebraicNumber& b);

}  // namespace compositum
