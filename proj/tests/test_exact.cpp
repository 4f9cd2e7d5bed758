#include <doctest.h>

#include <cmath>

#include "logforms/exact.hpp"
#include "support/oracles.hpp"

using namespace logforms;

TEST_CASE("lcm_upto small values") {
  CHECK(lcm_upto(1) == 1);
  CHECK(lcm_upto(6) == 60);
  CHECK(lcm_upto(10) == 2520);
  for (unsigned long n = 1; n <= 200; ++n) CHECK(lcm_upto(n) == oracle::lcm_fold(n));
}

TEST_CASE("lcm grows only at prime powers") {
  Integer prev = lcm_upto(1);
  for (unsigned long n = 1; n < 600; ++n) {
    Integer next = lcm_upto(n + 1);
    Integer ratio = next / prev;
    CHECK(next % prev == 0);
    if (ratio != 1) {
      CHECK(ratio.fits_ulong_p());
      CHECK(oracle::trial_division_prime(ratio.get_ui()));
      // n + 1 is then a power of that prime
      unsigned long m = n + 1, p = ratio.get_ui();
      while (m % p == 0) m /= p;
      CHECK(m == 1);
    }
    prev = next;
  }
}

TEST_CASE("log D_n / n approaches 1") {
  auto rate = [](unsigned long n) {
    Integer d = lcm_upto(n);
    long e = 0;
    double m = mpz_get_d_2exp(&e, d.get_mpz_t());
    return (std::log(m) + static_cast<double>(e) * std::log(2.0)) / static_cast<double>(n);
  };
  CHECK(std::fabs(rate(1000) - 1) < 0.15);
  CHECK(std::fabs(rate(10000) - 1) < 0.05);
}

TEST_CASE("ordp_factorial") {
  CHECK(ordp_factorial(2, 4) == 3);
  CHECK(ordp_factorial(5, 4) == 0);
  CHECK(ordp_factorial(3, 9) == 4);
  CHECK_THROWS_AS(ordp_factorial(4, 10), std::invalid_argument);
  CHECK_THROWS_AS(ordp_factorial(1, 10), std::invalid_argument);
  for (unsigned long p = 2; p <= 50; ++p) {
    if (!oracle::trial_division_prime(p)) continue;
    for (unsigned long N = 0; N <= 500; ++N) REQUIRE(ordp_factorial(p, N) == oracle::ordp_bruteforce(p, N));
  }
}

TEST_CASE("primes_in") {
  CHECK(primes_in(2, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_in(14, 16).empty());
  CHECK(primes_in(97, 97) == std::vector<std::uint64_t>{97});
  auto ps = primes_in(2, 5000);
  std::vector<std::uint64_t> brute;
  for (std::uint64_t k = 2; k <= 5000; ++k)
    if (oracle::trial_division_prime(k)) brute.push_back(k);
  CHECK(ps == brute);
  // Miller-Rabin range above the sieve limit.
  auto big = primes_in(10'000'000 - 100, 10'000'000 + 200);
  for (auto p : big) CHECK(oracle::trial_division_prime(p));
  std::size_t count = 0;
  for (std::uint64_t k = 10'000'000 - 100; k <= 10'000'000 + 200; ++k) count += oracle::trial_division_prime(k);
  CHECK(big.size() == count);
  CHECK(is_prime(18446744073709551557ull));
  CHECK_FALSE(is_prime(3215031751ull));
}

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational z(Rational(1, 2), Rational(-3, 4));
  CHECK(z.conj().conj() == z);
  CHECK((z / z) == GaussianRational(1));
  CHECK(pow(GaussianRational(1, 1), 2) == GaussianRational(0, 2));
  CHECK(pow(GaussianRational(1, 1), -1) == GaussianRational(Rational(1, 2), Rational(-1, 2)));
  CHECK(GaussianRational(3, 4).is_gaussian_integer());
  CHECK_FALSE(z.is_gaussian_integer());
  CHECK(parse_gaussian("1+i") == GaussianRational(1, 1));
  CHECK(parse_gaussian("3/2") == GaussianRational(Rational(3, 2)));
  CHECK(parse_gaussian("-1/2-3/4*i") == GaussianRational(Rational(-1, 2), Rational(-3, 4)));
  CHECK(parse_gaussian("i") == GaussianRational(0, 1));
  CHECK(to_string(GaussianRational(1, 1)) == "1+i");
}

TEST_CASE("norm is multiplicative on random inputs") {
  oracle::Gen gen(20241017);
  for (int k = 0; k < 500; ++k) {
    GaussianRational x(gen.rational(50, 30), gen.rational(50, 30));
    GaussianRational y(gen.rational(50, 30), gen.rational(50, 30));
    GaussianRational xy = x * y;
    CHECK(xy * xy.conj() == (x * x.conj()) * (y * y.conj()));
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(factorial(5) == 120);
  CHECK(ordp(Integer(48), 2) == 4);
}

TEST_CASE("parse_rational rejects junk") {
  CHECK(parse_rational(" 3/ 2 ") == Rational(3, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
}
