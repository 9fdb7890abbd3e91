#include "compositum/rational.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include <gmp.h>

#include "compositum/error.hpp"

namespace compositum {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  if (i == s.size()) fail(ErrorKind::ParseError, "bad rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      fail(ErrorKind::ParseError, "bad rational '" + std::string(whole) + "'");
    }
  }
  Integer n(std::string(s.substr(i)));
  return neg ? Integer(-n) : n;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const Integer num = parse_integer(trim(t.substr(0, slash)), text);
  const Integer den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.backend().data(), numerator(q).backend().data(), denominator(q).backend().data());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.backend().data(), numerator(q).backend().data(), denominator(q).backend().data());
  return r;
}

std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.backend().data(), 2);
}

bool exact_root(const Integer& n, unsigned q, Integer& root) {
  if (n < 0 && q % 2 == 0) return false;
  return mpz_root(root.backend().data(), n.backend().data(), q) != 0;
}

Integer root_floor(const Integer& n, unsigned q) {
  if (n < 0) fail(ErrorKind::PreconditionFailed, "root of a negative integer");
  Integer r;
  mpz_root(r.backend().data(), n.backend().data(), q);
  return r;
}

bool is_probable_prime(const Integer& n) {
  return n > 1 && mpz_probab_prime_p(n.backend().data(), 30) != 0;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
Integer rho(const Integer& n, unsigned long seed) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Integer c = 1 + Integer(rng()) % (n - 1);
    Integer y = Integer(rng()) % n, x, g = 1, q = 1, ys;
    const std::size_t m = 128;
    std::size_t r = 1;
    std::size_t budget = 1u << 22;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      for (std::size_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        g = gcd(q, n);
        budget = budget > m ? budget - m : 0;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

}  // namespace

Factorization factor(Integer n) {
  Factorization out;
  n = abs(n);
  if (n <= 1) return out;
  std::vector<Integer> found;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      found.emplace_back(p);
      n /= p;
    }
  }
  std::vector<Integer> work;
  if (n > 1) work.push_back(n);
  unsigned long seed = 1;
  while (!work.empty()) {
    Integer m = work.back();
    work.pop_back();
    if (is_probable_prime(m)) {
      found.push_back(m);
      continue;
    }
    Integer r;
    if (exact_root(m, 2, r)) {
      work.push_back(r);
      work.push_back(r);
      continue;
    }
    const Integer d = rho(m, seed++);
    if (d == 0) {
      out.unsplit *= m;
      continue;
    }
    work.push_back(d);
    work.push_back(m / d);
  }
  std::sort(found.begin(), found.end());
  for (const auto& p : found) {
    if (!out.primes.empty() && out.primes.back().first == p) {
      ++out.primes.back().second;
    } else {
      out.primes.emplace_back(p, 1);
    }
  }
  return out;
}

}  // namespace compositum
