#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace compositum {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p/q", "-p/q" or a plain integer. Throws ParseError; zero denominators
/// are rejected.
Rational parse_rational(std::string_view text);
/// Inverse of parse_rational: "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);

inline Rational pow(const Rational& q, unsigned e) {
  return Rational(boost::multiprecision::pow(numerator(q), e),
                  boost::multiprecision::pow(denominator(q), e));
}

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
/// Bit length of |n| (0 for n = 0).
std::size_t bit_length(const Integer& n);

/// Exact q-th root if it exists.
bool exact_root(const Integer& n, unsigned q, Integer& root);
/// floor(n^(1/q)) for n >= 0.
Integer root_floor(const Integer& n, unsigned q);

/// Prime factorization with multiplicities, ascending. Factors that could not
/// be split (beyond the trial and rho budgets) are returned in `unsplit`.
struct Factorization {
  std::vector<std::pair<Integer, unsigned>> primes;
  Integer unsplit = 1;
  bool complete() const { return unsplit == 1; }
};
Factorization factor(Integer n);
bool is_probable_prime(const Integer& n);

}  // namespace compositum
