#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "compositum/rational.hpp"

namespace compositum {

/// Dense polynomial over Q, coefficients low to high. The zero polynomial has
/// no coefficients and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);
  RationalPoly(std::initializer_list<long> coefficients);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, std::size_t degree);
  static RationalPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  /// Coefficient of x^i (zero past the degree).
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
  bool is_monic() const { return !is_zero() && c_.back() == 1; }
  bool has_integer_coefficients() const;

  Rational operator()(const Rational& x) const;
  /// Sign of p(x) without forming the full value's denominator twice.
  int sign_at(const Rational& x) const;

  RationalPoly derivative() const;
  RationalPoly monic() const;
  /// Integer polynomial with coprime coefficients and positive leading
  /// coefficient, a rational multiple of *this.
  RationalPoly primitive() const;

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& a);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  /// Euclidean division; throws PreconditionFailed on a zero divisor.
  static void divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& q,
                     RationalPoly& r);
  friend RationalPoly operator/(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator%(const RationalPoly& a, const RationalPoly& b);

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero when both inputs are zero).
RationalPoly gcd(RationalPoly a, RationalPoly b);
/// Product of the distinct irreducible factors, made monic.
RationalPoly squarefree_part(const RationalPoly& p);

/// Sign sequence of the remainder chain p, p', -rem, ...; counts distinct real
/// roots on intervals.
class SturmChain {
 public:
  explicit SturmChain(const RationalPoly& p);

  const RationalPoly& polynomial() const { return chain_.front(); }
  const std::vector<RationalPoly>& chain() const { return chain_; }

  /// Sign variations at x, at -infinity and at +infinity.
  std::size_t variations_at(const Rational& x) const;
  std::size_t variations_at_minus_infinity() const;
  std::size_t variations_at_plus_infinity() const;

  /// Distinct real roots in total, and in the half-open interval (a, b].
  std::size_t count_real_roots() const;
  std::size_t count_roots(const Rational& a, const Rational& b) const;
  /// Distinct roots in (a, +infinity).
  std::size_t count_roots_above(const Rational& a) const;

 private:
  std::vector<RationalPoly> chain_;
};

enum class Irreducibility { Proven, Reducible, Unknown };

struct IrreducibilityResult {
  Irreducibility status = Irreducibility::Unknown;
  std::optional<RationalPoly> factor;  // nontrivial factor when Reducible
  std::string reason;
};

/// Three-valued irreducibility over Q. Throws ConstantPolynomial.
IrreducibilityResult is_irreducible(const RationalPoly& f);
std::string_view to_string(Irreducibility i);

}  // namespace compositum
