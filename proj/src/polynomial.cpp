#include "compositum/polynomial.hpp"

#include <cstdint>

#include "compositum/arith.hpp"
#include "compositum/error.hpp"

namespace compositum {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<long> coefficients) {
  for (long c : coefficients) c_.emplace_back(c);
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool RationalPoly::has_integer_coefficients() const {
  for (const auto& c : c_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int RationalPoly::sign_at(const Rational& x) const {
  const Rational v = (*this)(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

RationalPoly RationalPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return *this;
  return Rational(1) / leading() * *this;
}

RationalPoly RationalPoly::primitive() const {
  if (is_zero()) return *this;
  Integer l = 1;
  for (const auto& c : c_) l = lcm(l, denominator(c));
  Integer g = 0;
  for (const auto& c : c_) g = gcd(g, Integer(numerator(c) * (l / denominator(c))));
  Rational scale(l, g);
  if (leading() < 0) scale = -scale;
  return scale * *this;
}

RationalPoly RationalPoly::operator-() const { return Rational(-1) * *this; }

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return RationalPoly(std::move(r));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return RationalPoly(std::move(r));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPoly(std::move(r));
}

RationalPoly operator*(const Rational& s, const RationalPoly& a) {
  if (s == 0) return {};
  std::vector<Rational> r = a.c_;
  for (auto& c : r) c *= s;
  return RationalPoly(std::move(r));
}

void RationalPoly::divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& q,
                          RationalPoly& r) {
  if (b.is_zero()) fail(ErrorKind::PreconditionFailed, "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  if (a.degree() < db) {
    q = {};
    r = a;
    return;
  }
  std::vector<Rational> quo(a.degree() - db + 1);
  const Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = rem[i] * inv;
    quo[i - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  rem.resize(db);
  q = RationalPoly(std::move(quo));
  r = RationalPoly(std::move(rem));
}

RationalPoly operator/(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly q, r;
  RationalPoly::divmod(a, b, q, r);
  return q;
}

RationalPoly operator%(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly q, r;
  RationalPoly::divmod(a, b, q, r);
  return r;
}

std::string RationalPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) {
      out += compositum::to_string(mag);
      if (i > 0) out += "*";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

// ---------------------------------------------------------------------------

SturmChain::SturmChain(const RationalPoly& p) {
  if (p.is_zero()) fail(ErrorKind::PreconditionFailed, "Sturm chain of the zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (true) {
    // Positive rescaling keeps signs and stops coefficient growth.
    RationalPoly r = -(chain_[chain_.size() - 2] % chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(Rational(1) / abs(r.leading()) * r);
  }
}

namespace {

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::size_t SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(p.sign_at(x));
  return count_variations(s);
}

std::size_t SturmChain::variations_at_plus_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(p.leading() > 0 ? 1 : -1);
  return count_variations(s);
}

std::size_t SturmChain::variations_at_minus_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) {
    const int lead = p.leading() > 0 ? 1 : -1;
    s.push_back(p.degree() % 2 == 0 ? lead : -lead);
  }
  return count_variations(s);
}

std::size_t SturmChain::count_real_roots() const {
  return variations_at_minus_infinity() - variations_at_plus_infinity();
}

std::size_t SturmChain::count_roots(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return variations_at(a) - variations_at(b);
}

std::size_t SturmChain::count_roots_above(const Rational& a) const {
  return variations_at(a) - variations_at_plus_infinity();
}

// ---------------------------------------------------------------------------

namespace {

using Fp = std::vector<std::uint64_t>;  // low to high, trimmed

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (a %= p; e; e >>= 1, a = a * a % p) {
    if (e & 1) r = r * a % p;
  }
  return r;
}

void fp_trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp fp_mod(Fp a, const Fp& m, std::uint64_t p) {
  const std::uint64_t inv = powmod(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    const std::uint64_t f = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j) {
      a[shift + j] = (a[shift + j] + p - mulmod(f, m[j], p)) % p;
    }
    fp_trim(a);
  }
  return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(r);
  return fp_mod(std::move(r), m, p);
}

Fp fp_powmod(Fp base, std::uint64_t e, const Fp& m, std::uint64_t p) {
  Fp r{1};
  base = fp_mod(std::move(base), m, p);
  for (; e; e >>= 1) {
    if (e & 1) r = fp_mulmod(r, base, m, p);
    base = fp_mulmod(base, base, m, p);
  }
  return r;
}

Fp fp_gcd(Fp a, Fp b, std::uint64_t p) {
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod m
Fp frobenius_power(std::size_t k, const Fp& m, std::uint64_t p) {
  Fp x{0, 1};
  for (std::size_t i = 0; i < k; ++i) x = fp_powmod(x, p, m, p);
  return x;
}

Fp fp_sub_x(Fp a, std::uint64_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  fp_trim(a);
  return a;
}

// Rabin's test for a polynomial whose leading coefficient is a unit mod p.
bool irreducible_mod(const std::vector<Integer>& f, std::uint64_t p) {
  Fp m;
  for (const auto& c : f) {
    Integer r = c % p;
    if (r < 0) r += p;
    m.push_back(r.convert_to<std::uint64_t>());
  }
  fp_trim(m);
  const std::size_t n = m.size() - 1;
  if (fp_sub_x(frobenius_power(n, m, p), p) != Fp{}) return false;
  for (std::uint64_t q : prime_divisors(n)) {
    const Fp g = fp_gcd(m, fp_sub_x(frobenius_power(n / q, m, p), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<Integer> integer_coefficients(const RationalPoly& f) {
  std::vector<Integer> out;
  const RationalPoly p = f.primitive();
  for (const auto& c : p.coefficients()) out.push_back(numerator(c));
  return out;
}

// Positive divisors of |n|, n != 0; empty when |n| is too large to factor.
std::optional<std::vector<Integer>> integer_divisors(const Integer& n) {
  const Factorization fz = factor(n);
  if (!fz.complete()) return std::nullopt;
  std::vector<Integer> out{1};
  for (const auto& [p, e] : fz.primes) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
    if (out.size() > 100000) return std::nullopt;
  }
  return out;
}

std::optional<RationalPoly> rational_root_factor(const std::vector<Integer>& f,
                                                 bool& complete) {
  complete = true;
  if (f.front() == 0) return RationalPoly{0, 1};
  const auto num = integer_divisors(f.front());
  const auto den = integer_divisors(f.back());
  if (!num || !den) {
    complete = false;
    return std::nullopt;
  }
  std::vector<Rational> coeffs(f.begin(), f.end());
  const RationalPoly poly{coeffs};
  for (const auto& a : *num) {
    for (const auto& b : *den) {
      if (gcd(a, b) != 1) continue;
      for (int s : {1, -1}) {
        const Rational r(Integer(s * a), b);
        if (poly(r) == 0) return RationalPoly({Rational(-r), Rational(1)}).primitive();
      }
    }
  }
  return std::nullopt;
}

// Integer quadratic factors (a x^2 + b x + c) of a quartic with a > 0.
std::optional<RationalPoly> quadratic_factor(const std::vector<Integer>& f, bool& complete) {
  complete = true;
  const auto cs = integer_divisors(f[0]);
  const auto as = integer_divisors(f[4]);
  if (!cs || !as) {
    complete = false;
    return std::nullopt;
  }
  // Coefficients of a degree-2 factor are bounded by 2 * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  const Integer bound = 2 * (root_floor(norm2, 2) + 1);
  if (bound > 100000) {
    complete = false;
    return std::nullopt;
  }
  const RationalPoly target(std::vector<Rational>(f.begin(), f.end()));
  auto accept = [&](const Integer& a, const Integer& b, const Integer& c) -> std::optional<RationalPoly> {
    RationalPoly g({Rational(c), Rational(b), Rational(a)});
    RationalPoly q, r;
    RationalPoly::divmod(target, g, q, r);
    if (r.is_zero() && q.has_integer_coefficients()) return g;
    return std::nullopt;
  };
  for (const auto& a : *as) {
    const Integer d = f[4] / a;
    for (const auto& cabs : *cs) {
      for (int sc : {1, -1}) {
        const Integer c = sc * cabs;
        const Integer g = f[0] / c;
        // x^3: a e + b d = f3, x: b g + c e = f1.
        const Integer det = d * c - a * g;
        if (det != 0) {
          const Integer bn = f[3] * c - a * f[1];
          if (bn % det != 0) continue;
          if (auto h = accept(a, bn / det, c)) return h;
          continue;
        }
        for (Integer b = -bound; b <= bound; ++b) {
          if (auto h = accept(a, b, c)) return h;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Irreducibility i) {
  switch (i) {
    case Irreducibility::Proven: return "Proven";
    case Irreducibility::Reducible: return "Reducible";
    case Irreducibility::Unknown: return "Unknown";
  }
  return "?";
}

IrreducibilityResult is_irreducible(const RationalPoly& f) {
  if (f.degree() <= 0) fail(ErrorKind::ConstantPolynomial, "constant polynomial");
  if (f.degree() == 1) return {Irreducibility::Proven, std::nullopt, "degree 1"};
  const auto z = integer_coefficients(f);

  for (std::uint64_t p = 2; p <= 100; ++p) {
    if (!is_prime(p) || z.back() % p == 0) continue;
    if (irreducible_mod(z, p)) {
      return {Irreducibility::Proven, std::nullopt, "irreducible mod " + std::to_string(p)};
    }
  }

  bool complete = false;
  if (auto h = rational_root_factor(z, complete)) {
    return {Irreducibility::Reducible, h, "rational root"};
  }
  if (!complete) return {Irreducibility::Unknown, std::nullopt, "coefficients too large"};
  if (f.degree() <= 3) return {Irreducibility::Proven, std::nullopt, "no rational root"};
  if (f.degree() == 4) {
    if (auto h = quadratic_factor(z, complete)) {
      return {Irreducibility::Reducible, h, "quadratic factor"};
    }
    if (complete) {
      return {Irreducibility::Proven, std::nullopt, "no rational root or quadratic factor"};
    }
  }
  return {Irreducibility::Unknown, std::nullopt, "no strategy applies"};
}

}  // namespace compositum
