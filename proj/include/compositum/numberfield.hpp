#pragma once

#include <memory>
#include <string>
#include <vector>

#include "compositum/matrix.hpp"
#include "compositum/polynomial.hpp"
#include "compositum/rational.hpp"

namespace compositum {

enum class IrreducibilityStatus { Proven, UserAsserted };
std::string_view to_string(IrreducibilityStatus s);

/// F = Q[x]/(f) for a monic irreducible integer polynomial f.
class NumberFieldSpec {
 public:
  /// Throws NotIrreducible when f is reducible, or when irreducibility is
  /// Unknown and not asserted; PreconditionFailed unless f is monic with
  /// integer coefficients; ConstantPolynomial for degree 0.
  NumberFieldSpec(std::string label, RationalPoly min_poly, bool assert_irreducible = false);

  const std::string& label() const { return data_->label; }
  const RationalPoly& min_poly() const { return data_->min_poly; }
  std::size_t degree() const { return static_cast<std::size_t>(data_->min_poly.degree()); }
  IrreducibilityStatus irreducibility() const { return data_->status; }
  bool is_totally_real() const { return data_->totally_real; }

  /// Same defining polynomial.
  friend bool operator==(const NumberFieldSpec& a, const NumberFieldSpec& b) {
    return a.data_ == b.data_ || a.min_poly() == b.min_poly();
  }

 private:
  struct Data {
    std::string label;
    RationalPoly min_poly;
    IrreducibilityStatus status;
    bool totally_real;
  };
  std::shared_ptr<const Data> data_;
};

bool is_totally_real(const NumberFieldSpec& field);

/// Element of a number field as a residue of degree < d.
class AlgebraicNumber {
 public:
  AlgebraicNumber(NumberFieldSpec field, RationalPoly residue);
  AlgebraicNumber(NumberFieldSpec field, const Rational& value);

  /// The class of x, a root of the defining polynomial.
  static AlgebraicNumber generator(const NumberFieldSpec& field);

  const NumberFieldSpec& field() const { return field_; }
  const RationalPoly& residue() const { return residue_; }
  /// Coordinates in the power basis 1, x, ..., x^(d-1).
  std::vector<Rational> coordinates() const;
  bool is_zero() const { return residue_.is_zero(); }
  bool is_rational() const { return residue_.degree() <= 0; }
  Rational rational_value() const { return residue_[0]; }

  AlgebraicNumber operator-() const;
  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const Rational& s, const AlgebraicNumber& a);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  /// Throws FieldMismatch when the fields differ.
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

  /// Throws PreconditionFailed for zero.
  AlgebraicNumber inverse() const;
  AlgebraicNumber pow(unsigned e) const;

  /// Column j holds the coordinates of a * x^j.
  RationalMatrix multiplication_matrix() const;
  RationalPoly characteristic_polynomial() const;

  std::string to_string() const { return residue_.to_string('a'); }

 private:
  NumberFieldSpec field_;
  RationalPoly residue_;
};

void require_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b);

Rational trace(const AlgebraicNumber& a);
Rational norm(const AlgebraicNumber& a);

/// det(Tr(a_i a_j)). Throws WrongArity unless exactly d elements are given.
Rational delta_tuple(const NumberFieldSpec& field, const std::vector<AlgebraicNumber>& elements);
/// delta_tuple(1, a, ..., a^(d-1)).
Rational delta_element(const AlgebraicNumber& a);
/// Discriminant of the order Z[x].
Integer order_discriminant(const NumberFieldSpec& field);

enum class Coprimality { Coprime, NotCoprime, Inconclusive };
std::string_view to_string(Coprimality c);

struct CoprimeReport {
  Coprimality verdict = Coprimality::Inconclusive;
  Integer disc_k, disc_l;         // order discriminants
  std::vector<Integer> shared;    // primes dividing both
  std::string reason;
};

/// Field discriminants compared through order discriminants. Coprime when the
/// order discriminants are coprime; NotCoprime when a shared prime is shown to
/// divide both field discriminants (odd valuation, or exactly for quadratic
/// fields); Inconclusive otherwise.
CoprimeReport discs_coprime(const NumberFieldSpec& k, const NumberFieldSpec& l);

/// Field discriminant of a quadratic field from its order discriminant.
Integer quadratic_field_discriminant(const Integer& order_disc);

/// All conjugates of a are positive. Throws FieldNotTotallyReal.
bool is_totally_positive(const AlgebraicNumber& a);
/// a - b totally positive or a = b. Throws FieldMismatch.
bool check_succeq(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace compositum
