#include "compositum/numberfield.hpp"

#include "compositum/error.hpp"

namespace compositum {

std::string_view to_string(IrreducibilityStatus s) {
  return s == IrreducibilityStatus::Proven ? "Proven" : "UserAsserted";
}

std::string_view to_string(Coprimality c) {
  switch (c) {
    case Coprimality::Coprime: return "Coprime";
    case Coprimality::NotCoprime: return "NotCoprime";
    case Coprimality::Inconclusive: return "Inconclusive";
  }
  return "?";
}

NumberFieldSpec::NumberFieldSpec(std::string label, RationalPoly min_poly,
                                 bool assert_irreducible) {
  if (min_poly.degree() <= 0) fail(ErrorKind::ConstantPolynomial, "constant minimal polynomial");
  if (!min_poly.is_monic() || !min_poly.has_integer_coefficients()) {
    fail(ErrorKind::PreconditionFailed, "minimal polynomial must be monic with integer coefficients");
  }
  const auto irr = is_irreducible(min_poly);
  IrreducibilityStatus status = IrreducibilityStatus::Proven;
  if (irr.status == Irreducibility::Reducible) {
    fail(ErrorKind::NotIrreducible, min_poly.to_string() + " has the factor " + irr.factor->to_string());
  }
  if (irr.status == Irreducibility::Unknown) {
    if (!assert_irreducible) {
      fail(ErrorKind::NotIrreducible,
           "irreducibility of " + min_poly.to_string() + " is unknown; assert it to proceed");
    }
    status = IrreducibilityStatus::UserAsserted;
  }
  const bool real = SturmChain(min_poly).count_real_roots() ==
                    static_cast<std::size_t>(min_poly.degree());
  data_ = std::make_shared<const Data>(Data{std::move(label), std::move(min_poly), status, real});
}

bool is_totally_real(const NumberFieldSpec& field) { return field.is_totally_real(); }

// ---------------------------------------------------------------------------

AlgebraicNumber::AlgebraicNumber(NumberFieldSpec field, RationalPoly residue)
    : field_(std::move(field)), residue_(std::move(residue) % field_.min_poly()) {}

AlgebraicNumber::AlgebraicNumber(NumberFieldSpec field, const Rational& value)
    : AlgebraicNumber(std::move(field), RationalPoly::constant(value)) {}

AlgebraicNumber AlgebraicNumber::generator(const NumberFieldSpec& field) {
  return AlgebraicNumber(field, RationalPoly::x());
}

std::vector<Rational> AlgebraicNumber::coordinates() const {
  std::vector<Rational> c(field_.degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = residue_[i];
  return c;
}

void require_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!(a.field() == b.field())) {
    fail(ErrorKind::FieldMismatch, "elements of " + a.field().label() + " and " + b.field().label());
  }
}

AlgebraicNumber AlgebraicNumber::operator-() const { return AlgebraicNumber(field_, -residue_); }

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  return AlgebraicNumber(a.field_, a.residue_ + b.residue_);
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  return AlgebraicNumber(a.field_, a.residue_ - b.residue_);
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  return AlgebraicNumber(a.field_, a.residue_ * b.residue_);
}

AlgebraicNumber operator*(const Rational& s, const AlgebraicNumber& a) {
  return AlgebraicNumber(a.field_, s * a.residue_);
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a * b.inverse();
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  return a.residue_ == b.residue_;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) fail(ErrorKind::PreconditionFailed, "inverse of zero");
  // Extended Euclid: s * residue + t * f = 1.
  RationalPoly r0 = field_.min_poly(), r1 = residue_;
  RationalPoly s0, s1 = RationalPoly::constant(1);
  while (!r1.is_zero()) {
    RationalPoly q, r;
    RationalPoly::divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    RationalPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) fail(ErrorKind::Internal, "residue shares a factor with the modulus");
  return AlgebraicNumber(field_, Rational(1) / r0.leading() * s0);
}

AlgebraicNumber AlgebraicNumber::pow(unsigned e) const {
  AlgebraicNumber r(field_, Rational(1)), b = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b;
    b = b * b;
  }
  return r;
}

RationalMatrix AlgebraicNumber::multiplication_matrix() const {
  const std::size_t d = field_.degree();
  RationalMatrix m(d, std::vector<Rational>(d));
  RationalPoly col = residue_;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    col = (RationalPoly::x() * col) % field_.min_poly();
  }
  return m;
}

RationalPoly AlgebraicNumber::characteristic_polynomial() const {
  return compositum::characteristic_polynomial(multiplication_matrix());
}

Rational trace(const AlgebraicNumber& a) { return trace(a.multiplication_matrix()); }
Rational norm(const AlgebraicNumber& a) { return determinant(a.multiplication_matrix()); }

Rational delta_tuple(const NumberFieldSpec& field, const std::vector<AlgebraicNumber>& elements) {
  const std::size_t d = field.degree();
  if (elements.size() != d) {
    fail(ErrorKind::WrongArity, "expected " + std::to_string(d) + " elements, got " +
                                    std::to_string(elements.size()));
  }
  for (const auto& e : elements) {
    if (!(e.field() == field)) fail(ErrorKind::FieldMismatch, "element from another field");
  }
  RationalMatrix g(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) g[i][j] = g[j][i] = trace(elements[i] * elements[j]);
  }
  return determinant(std::move(g));
}

Rational delta_element(const AlgebraicNumber& a) {
  std::vector<AlgebraicNumber> powers;
  AlgebraicNumber p(a.field(), Rational(1));
  for (std::size_t i = 0; i < a.field().degree(); ++i) {
    powers.push_back(p);
    p = p * a;
  }
  return delta_tuple(a.field(), powers);
}

Integer order_discriminant(const NumberFieldSpec& field) {
  const Rational d = delta_element(AlgebraicNumber::generator(field));
  if (!is_integer(d)) fail(ErrorKind::Internal, "order discriminant is not an integer");
  return numerator(d);
}

Integer quadratic_field_discriminant(const Integer& order_disc) {
  const Factorization fz = factor(order_disc);
  if (!fz.complete()) fail(ErrorKind::PreconditionFailed, "could not factor " + order_disc.str());
  Integer m = order_disc < 0 ? -1 : 1;
  for (const auto& [p, e] : fz.primes) {
    if (e % 2) m *= p;
  }
  Integer r = m % 4;
  if (r < 0) r += 4;
  return r == 1 ? m : Integer(4 * m);
}

namespace {

enum class Divides { Yes, No, Unknown };

Divides field_disc_divisible(const NumberFieldSpec& f, const Integer& order_disc,
                             const Integer& p) {
  if (f.degree() == 2) {
    return quadratic_field_discriminant(order_disc) % p == 0 ? Divides::Yes : Divides::No;
  }
  // disc(Z[a]) = disc_F * index^2: an odd valuation survives in disc_F.
  unsigned v = 0;
  for (Integer n = abs(order_disc); n % p == 0; n /= p) ++v;
  return v % 2 ? Divides::Yes : Divides::Unknown;
}

}  // namespace

CoprimeReport discs_coprime(const NumberFieldSpec& k, const NumberFieldSpec& l) {
  CoprimeReport rep;
  rep.disc_k = order_discriminant(k);
  rep.disc_l = order_discriminant(l);
  const Integer g = gcd(rep.disc_k, rep.disc_l);
  if (g == 1) {
    rep.verdict = Coprimality::Coprime;
    rep.reason = "order discriminants are coprime";
    return rep;
  }
  const Factorization fz = factor(g);
  for (const auto& pe : fz.primes) rep.shared.push_back(pe.first);
  if (!fz.complete()) {
    rep.verdict = Coprimality::Inconclusive;
    rep.reason = "could not factor the common part " + g.str();
    return rep;
  }
  bool all_excluded = true;
  for (const auto& p : rep.shared) {
    const Divides dk = field_disc_divisible(k, rep.disc_k, p);
    const Divides dl = field_disc_divisible(l, rep.disc_l, p);
    if (dk == Divides::Yes && dl == Divides::Yes) {
      rep.verdict = Coprimality::NotCoprime;
      rep.reason = p.str() + " divides both field discriminants";
      return rep;
    }
    if (dk != Divides::No && dl != Divides::No) all_excluded = false;
  }
  rep.verdict = all_excluded ? Coprimality::Coprime : Coprimality::Inconclusive;
  rep.reason = all_excluded ? "shared primes divide only the index of an order"
                            : "shared primes may divide only an index";
  return rep;
}

bool is_totally_positive(const AlgebraicNumber& a) {
  if (!a.field().is_totally_real()) {
    fail(ErrorKind::FieldNotTotallyReal, a.field().label() + " is not totally real");
  }
  if (a.is_zero()) return false;
  // The characteristic polynomial is a power of the minimal polynomial of a,
  // so its squarefree part carries every conjugate exactly once.
  const RationalPoly s = squarefree_part(a.characteristic_polynomial());
  if (s(0) == 0) return false;
  return SturmChain(s).count_roots_above(0) == static_cast<std::size_t>(s.degree());
}

bool check_succeq(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  return a == b || is_totally_positive(a - b);
}

}  // namespace compositum
