#include <doctest.h>

#include "logforms/gauss_forms.hpp"
#include "logforms/hyper_oracle.hpp"
#include "logforms/quadrature.hpp"
#include "support/oracles.hpp"

using namespace logforms;

namespace {

Rational R(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Complex C(const GaussianRational& z, Precision p) { return Complex(z, p); }

// int_1^a (z-1)^n0 (z-a)^n1 (z-b)^n2 z^-(m+1) dz along the segment
Complex segment_integral(long m, long n0, long n1, long n2, const GaussianRational& a, const GaussianRational& b,
                         Precision p) {
  QuadOptions opts;
  opts.target = p;
  Precision w = p + opts.guard_digits;
  Complex ca = C(a, w), cb = C(b, w), one(BigFloat(1L, w));
  auto f = [&](const Complex& z) {
    return pow(z - one, n0) * pow(z - ca, n1) * pow(z - cb, n2) / pow(z, m + 1);
  };
  return integrate_path(f, {one, ca}, opts).value;
}

}  // namespace

TEST_CASE("pochhammer recurrence") {
  oracle::Gen gen(1);
  for (int k = 0; k < 200; ++k) {
    Rational a = gen.rational(20, 12);
    long n = gen.uniform(0, 30);
    CHECK(pochhammer(a, n + 1) == pochhammer(a, n) * (a + n));
  }
  CHECK(pochhammer(R(1, 2), 3) == R(15, 8));
  CHECK(pochhammer(-2, 3) == 0);
}

TEST_CASE("2F1 classical values") {
  Precision p(50);
  BigFloat v = gauss_2f1(1, 1, 2, R(1, 2), p);
  CHECK(agreeing_digits(v, log(BigFloat(2L, p)) * 2) >= 48);
  // (1,1,1;2): Gamma(2)Gamma(2)/Gamma(4) 2F1(2,2;4;-1) = 3 log 2 - 2
  BigFloat w = gauss_2f1(2, 2, 4, -1, p) / 6;
  CHECK(agreeing_digits(w, log(BigFloat(2L, p)) * 3 - 2) >= 45);
  CHECK(agreeing_digits(w, form_value(linear_form(HGParams::make(1, 1, 1, 2)), p)) >= 45);
}

TEST_CASE("direct summation rejects divergent arguments") {
  Precision p(30);
  CHECK_THROWS_AS(gauss_2f1_series(1, 1, 2, Complex(BigFloat(-1L, p)), p), DivergentSeries);
  CHECK_THROWS_AS(gauss_2f1(1, 1, 2, Complex(BigFloat(1L, p)), p), DivergentSeries);
  CHECK_THROWS_AS(gauss_2f1(1, 1, 2, Complex(BigFloat(2L, p)), p), DivergentSeries);
  auto term = gauss_2f1_series(-3, 2, 5, Complex(BigFloat(7L, p)), p);
  CHECK(term.terms == 4);
  CHECK(term.tail_bound.is_zero());
}

TEST_CASE("Euler transform agrees with direct summation") {
  Precision p(40);
  for (Rational z : {R(-1, 2), R(-9, 10), R(1, 3), R(-3, 4)}) {
    Complex zc(BigFloat(z, p));
    Complex direct = gauss_2f1_series(R(3, 2), 2, R(7, 2), zc, p).value;
    Complex euler = gauss_2f1_euler(R(3, 2), 2, R(7, 2), zc, p);
    CHECK(agreeing_digits(direct.re, euler.re) >= 35);
  }
  // at z = -1 only the transformed series converges fast; compare with quadrature of (2,1,2;2)
  Complex at_minus_one = gauss_2f1_euler(3, 2, 5, Complex(BigFloat(-1L, p)), p);
  BigFloat weighted = at_minus_one.re / 12;  // 1! 2! / 4!
  CHECK(agreeing_digits(weighted, integral_value(HGParams::make(2, 1, 2, 2), p)) >= 35);
}

TEST_CASE("2F1 is symmetric in the upper parameters") {
  oracle::Gen gen(8);
  Precision p(30);
  for (int k = 0; k < 50; ++k) {
    Rational A = gen.rational(20, 6), B = gen.rational(20, 6);
    Rational Cc = R(gen.uniform(1, 40), gen.uniform(1, 6));
    Complex z(BigFloat(R(gen.uniform(-60, 60), 100), p), BigFloat(R(gen.uniform(-60, 60), 100), p));
    auto x = gauss_2f1_series(A, B, Cc, z, p);
    auto y = gauss_2f1_series(B, A, Cc, z, p);
    CHECK(x.terms == y.terms);
    CHECK(x.value.re == y.value.re);
    CHECK(x.value.im == y.value.im);
  }
}

TEST_CASE("Euler integral equals the gamma-weighted 2F1") {
  oracle::Gen gen(20);
  const std::vector<Rational> as{R(2, 1), R(3, 2), R(4, 3), R(2, 3), R(1, 2)};
  Precision p(40);
  for (int trial = 0; trial < 20; ++trial) {
    long n1 = gen.uniform(0, 12);
    HGParams h = HGParams::make(gen.uniform(0, n1), gen.uniform(0, n1), n1, gen.pick(as));
    CAPTURE(h.to_string());
    CHECK(agreeing_digits(euler_integral_2f1(h.m, h.n0, h.n1, h.a, p), integral_value(h, p)) >= 32);
  }
}

TEST_CASE("Appell F1 collapses to 2F1 when Y = 0") {
  Precision p(40);
  Complex X(BigFloat(R(1, 3), p), BigFloat(R(1, 4), p));
  Complex zero(p);
  Complex f1 = appell_f1(R(3, 2), 2, R(5, 3), 4, X, zero, p);
  Complex f = gauss_2f1(R(3, 2), 2, 4, X, p);
  CHECK(agreeing_digits(f1.re, f.re) >= 35);
  CHECK(agreeing_digits(f1.im, f.im) >= 35);
}

TEST_CASE("F1 double series against the terminating route") {
  // B' = -2 can be summed both ways when |X|, |Y| < 1
  Precision p(40);
  Complex X(BigFloat(R(-1, 2), p)), Y(BigFloat(R(1, 3), p), BigFloat(R(1, 5), p));
  Complex fin = appell_f1(2, R(3, 2), -2, R(9, 2), X, Y, p);
  Complex dbl = appell_f1(2, R(3, 2), R(-19, 10) - R(1, 10), R(9, 2), X, Y, p);
  CHECK(agreeing_digits(fin.re, dbl.re) >= 35);
  CHECK_THROWS_AS(appell_f1(1, R(1, 2), R(1, 2), 3, Complex(BigFloat(1L, p)), Y, p), DivergentSeries);
}

TEST_CASE("F1 representation of the two-point integral") {
  Precision p(35);
  GaussianRational a = R(3, 2), b = R(4, 3);
  Complex f1 = two_point_integral_f1(1, 1, 1, 1, a, b, p);
  Complex quad = segment_integral(1, 1, 1, 1, a, b, p);
  CHECK(agreeing_digits(f1.re, quad.re) >= 30);
  GaussianRational two(2), oi(Rational(1), Rational(1));
  Complex g = two_point_integral_f1(3, 2, 2, 2, two, oi, p);
  Complex gq = segment_integral(3, 2, 2, 2, two, oi, p);
  CHECK(abs(g - gq).log10_abs() - abs(gq).log10_abs() < -30);
}

TEST_CASE("arguments of the second F1 at a = 2, b = 1 + i") {
  GaussianRational a(2), b(Rational(1), Rational(1)), one(1);
  CHECK((one - a) / (one - b) == GaussianRational(Rational(0), Rational(-1)));
  GaussianRational x = b * (one - a) / (a * (one - b));
  CHECK(x == GaussianRational(R(1, 2), R(-1, 2)));
  CHECK(x.norm() == R(1, 2));
}

TEST_CASE("second integral representation at a = 2, b = 1 + i") {
  Precision p(35);
  const long n0 = 2, n1 = 2, n2 = 2, m = 3;
  GaussianRational a(2), b(Rational(1), Rational(1)), one(1);
  QuadOptions opts;
  opts.target = p;
  Precision w = p + opts.guard_digits;
  Complex P = C(a * (one - b), w), Q = C(b * (one - a), w), U = C(one - b, w), V = C(one - a, w);
  Complex uno(BigFloat(1L, w));
  auto f = [&](const Complex& y) {
    return pow(y, n1) * pow(uno - y, n0) / (pow(P - Q * y, m + 1) * pow(U - V * y, n0 + n1 + n2 - m + 1));
  };
  Complex integral = integrate_path(f, {Complex(w), uno}, opts).value;
  GaussianRational pre = pow(one - a, n0 + n1 + 1) * pow(one - b, n0 + n2 + 1) * pow(a - b, n1 + n2 + 1);
  if ((n0 + m) % 2 != 0) pre = GaussianRational(0) - pre;
  Complex rep = C(pre, w) * integral;
  Complex j = two_point_integral_f1(m, n0, n1, n2, a, b, p);
  CHECK(abs(rep - j).log10_abs() - abs(j).log10_abs() < -30);
}

TEST_CASE("Ramanujan series") {
  Precision p(60);
  BigFloat four_over_pi = BigFloat(4L, p) / pi(p);
  BigFloat s1 = ramanujan_pi(RamanujanSeries::kSeries39, 1, p);
  CHECK(ramanujan_partial_sum(RamanujanSeries::kSeries39, 1) == R(1123, 882));
  CHECK(agreeing_digits(s1, four_over_pi) >= 5);
  CHECK(agreeing_digits(ramanujan_pi(RamanujanSeries::kSeries39, 5, p), four_over_pi) >= 25);
  BigFloat target44 = BigFloat(1L, p) / (pi(p) * sqrt(BigFloat(2L, p)) * 2);
  CHECK(agreeing_digits(ramanujan_pi(RamanujanSeries::kSeries44, 4, p), target44) >= 30);
  CHECK_THROWS_AS(ramanujan_pi(RamanujanSeries::kSeries39, 0, p), std::invalid_argument);
}

TEST_CASE("Ramanujan partial sums gain digits with every term") {
  Precision p(200);
  BigFloat t39 = BigFloat(4L, p) / pi(p);
  BigFloat t44 = BigFloat(1L, p) / (pi(p) * sqrt(BigFloat(2L, p)) * 2);
  for (long N = 1; N <= 8; ++N) {
    CHECK(agreeing_digits(ramanujan_pi(RamanujanSeries::kSeries39, N + 1, p), t39) >
          agreeing_digits(ramanujan_pi(RamanujanSeries::kSeries39, N, p), t39));
    CHECK(agreeing_digits(ramanujan_pi(RamanujanSeries::kSeries44, N + 1, p), t44) >
          agreeing_digits(ramanujan_pi(RamanujanSeries::kSeries44, N, p), t44));
  }
}
