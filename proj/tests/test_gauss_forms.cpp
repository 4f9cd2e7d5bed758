#include <doctest.h>

#include "logforms/gauss_forms.hpp"
#include "support/oracles.hpp"

using namespace logforms;

namespace {

Rational R(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// n1!/m! (t+1)..(t+m) / ((t+n0+1)..(t+n0+n1+1)), evaluated exactly.
Rational rational_integrand(const HGParams& h, const Rational& t) {
  Rational v = Rational(factorial(static_cast<unsigned long>(h.n1))) / Rational(factorial(static_cast<unsigned long>(h.m)));
  for (long j = 1; j <= h.m; ++j) v *= t + j;
  for (long j = h.n0 + 1; j <= h.n0 + h.n1 + 1; ++j) v /= t + j;
  return v;
}

Rational random_a(oracle::Gen& gen) {
  static const std::vector<Rational> pool{R(2, 1), R(3, 2), R(4, 3), R(2, 3), R(1, 2), R(5, 4), R(3, 4)};
  return gen.pick(pool);
}

HGParams random_params(oracle::Gen& gen, long max_n1) {
  long n1 = gen.uniform(0, max_n1);
  return HGParams::make(gen.uniform(0, n1), gen.uniform(0, n1), n1, random_a(gen));
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(HGParams::make(1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(HGParams::make(2, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(HGParams::make(1, 2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(HGParams::make(1, 1, 1, R(5, 2)), std::invalid_argument);
  CHECK_THROWS_AS(HGParams::make(-1, 1, 1, 2), std::invalid_argument);
  CHECK_NOTHROW(HGParams::relaxed(1, 2, 1, 2));
}

TEST_CASE("partial fractions of small tuples") {
  auto pf = partial_fractions(HGParams::make(1, 1, 1, 2));
  REQUIRE(pf.terms.size() == 2);
  CHECK(pf.terms[0].k == 1);
  CHECK(pf.terms[0].A == -1);
  CHECK(pf.terms[1].k == 2);
  CHECK(pf.terms[1].A == 2);
  auto zero = partial_fractions(HGParams::make(0, 0, 0, 2));
  REQUIRE(zero.terms.size() == 1);
  CHECK(zero.terms[0].A == 1);
}

TEST_CASE("partial fractions reproduce the rational function") {
  // Cleared numerators have degree <= n0+n1+1, so agreement at n0+n1+3 points is an identity.
  oracle::Gen gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    HGParams h = random_params(gen, 25);
    auto pf = partial_fractions(h);
    for (long i = 0; i < h.n0 + h.n1 + 3; ++i) {
      Rational t = R(2 * i + 1, 3);
      Rational sum = 0;
      for (const auto& term : pf.terms) sum += term.A / (t + term.k + 1);
      REQUIRE(sum == rational_integrand(h, t));
    }
  }
}

TEST_CASE("exact forms of small tuples") {
  auto f0 = linear_form(HGParams::make(0, 0, 0, 2));
  CHECK(f0.log_coeff == 1);
  CHECK(f0.const_coeff == 0);
  auto f1 = linear_form(HGParams::make(1, 1, 1, 2));
  CHECK(f1.log_coeff == 3);
  CHECK(f1.const_coeff == -2);
  auto h = HGParams::make(7, 6, 8, 2);
  // with c = -1 every term of -sum A_k c^-(k+1) has sign -1
  Integer expected = 0;
  for (long k = 7; k <= 14; ++k) expected += binomial(k, 7) * binomial(8, k - 6);
  CHECK(linear_form(h).log_coeff == Rational(Integer(-expected)));
}

TEST_CASE("exact forms agree with quadrature") {
  oracle::Gen gen(2024);
  const Precision p(40);
  for (int trial = 0; trial < 40; ++trial) {
    HGParams h = random_params(gen, 20);
    BigFloat exact = form_value(linear_form(h), p);
    BigFloat quad = integral_value(h, p);
    CAPTURE(h.to_string());
    CHECK(exact.sign() > 0);
    CHECK(agreeing_digits(exact, quad) >= 30);
  }
  auto big = HGParams::make(7, 6, 8, 2);
  CHECK(agreeing_digits(form_value(linear_form(big), Precision(50)), integral_value(big, Precision(50))) >= 40);
}

TEST_CASE("inclusion of small tuples") {
  auto r = inclusion_check(HGParams::make(1, 1, 1, 2), false);
  REQUIRE(r.integral);
  CHECK(r.log_coeff == -3);  // scale is (1-a)^3 = -1
  CHECK(r.const_coeff == 2);
  CHECK(inclusion_check(HGParams::make(0, 0, 0, R(3, 2)), false).integral);
  CHECK(inclusion_check(HGParams::make(7, 6, 8, 2), true).integral);
}

TEST_CASE("inclusion holds for random tuples, plain and improved") {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    HGParams h = random_params(gen, 40);
    CAPTURE(h.to_string());
    auto plain = inclusion_check(h, false);
    CHECK(plain.integral);
    auto improved = inclusion_check(h, true);
    CHECK(improved.integral);
  }
}

TEST_CASE("a too-small scale is reported with a prime") {
  // Dividing by the full factorial ratio denominator times 2 must break integrality somewhere.
  auto h = HGParams::make(7, 6, 8, 2);
  auto r = inclusion_check(h, true);
  Rational B = linear_form(h).log_coeff * r.scale / 7;
  Rational A = linear_form(h).const_coeff * r.scale / 7;
  CHECK((B.get_den() != 1 || A.get_den() != 1));
}

TEST_CASE("log coefficient sign alternates along (7n,6n,8n;2)") {
  for (long n = 1; n <= 8; ++n) {
    auto f = linear_form(HGParams::make(7 * n, 6 * n, 8 * n, 2));
    CHECK(sgn(f.log_coeff) == ((n % 2 == 0) ? 1 : -1));
  }
}

TEST_CASE("symmetry of the tuple swap") {
  CHECK(symmetry_check(HGParams::make(1, 1, 1, 2)));
  CHECK(symmetry_check(HGParams::make(2, 1, 2, 2)));
  CHECK_THROWS_AS(symmetry_check(HGParams::relaxed(1, 2, 1, 2)), std::invalid_argument);
  oracle::Gen gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    HGParams h = random_params(gen, 30);
    CAPTURE(h.to_string());
    CHECK(symmetry_check(h));
  }
}
