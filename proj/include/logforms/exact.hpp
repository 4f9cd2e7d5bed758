#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace logforms {

using Integer = mpz_class;
using Rational = mpq_class;

/// Fraction over Z[i]. Both parts are canonical GMP rationals.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(long r) : re(r) {}
  GaussianRational(const Integer& r) : re(r) {}
  GaussianRational(const Rational& r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_gaussian_integer() const {
    return re.get_den() == 1 && im.get_den() == 1;
  }
  /// lcm of the denominators of both parts.
  Integer denominator() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator*(GaussianRational a, const GaussianRational& b);
GaussianRational operator/(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
bool operator==(const GaussianRational& a, const GaussianRational& b);
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

/// z^e for any integer e; z must be nonzero when e < 0.
GaussianRational pow(const GaussianRational& z, long e);
Rational pow(const Rational& q, long e);
Integer pow(const Integer& z, unsigned long e);

std::string to_string(const Rational& q);
std::string to_string(const GaussianRational& z);

/// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(const std::string& text);
/// Accepts a rational, "i", "x+yi", "x-y*i", "(x)+(y)i" style input.
GaussianRational parse_gaussian(const std::string& text);

/// D_n = lcm(1, ..., n); D_0 = 1.
Integer lcm_upto(unsigned long n);

/// ord_p(N!) by Legendre's formula. Throws std::invalid_argument if p is not prime.
unsigned long ordp_factorial(unsigned long p, unsigned long N);

/// ord_p(x) for x != 0. Throws for x == 0.
unsigned long ordp(const Integer& x, unsigned long p);

bool is_prime(std::uint64_t n);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

/// C(n, k), zero outside 0 <= k <= n.
Integer binomial(long n, long k);

Integer factorial(unsigned long n);

/// Smallest prime factor of |x| (x != 0, |x| > 1), found by trial division up to `limit`;
/// returns 0 if none found below the limit.
std::uint64_t smallest_prime_factor(const Integer& x, std::uint64_t limit);

}  // namespace logforms
