#include <doctest.h>

#include <cmath>

#include "logforms/gauss_forms.hpp"
#include "logforms/quadrature.hpp"
#include "logforms/rhin_forms.hpp"
#include "support/oracles.hpp"

using namespace logforms;

namespace {

Rational R(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

IntPolynomial ip(std::vector<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

IntPolynomial product_of_roots(const std::vector<long>& roots, long n) {
  IntPolynomial p = ip({1});
  for (long r : roots) p = p * ip({-r, 1}).pow(static_cast<unsigned long>(n));
  return p;
}

// int_0^1 G(x(1-x)/(1+x)) dx/(1+x) by quadrature
BigFloat gn_quadrature(const IntPolynomial& G, Precision p) {
  const Precision w = p + 10;
  QuadOptions o;
  o.target = p + 2;
  auto f = [&](const BigFloat& x) {
    BigFloat one(1L, w), y = x * (one - x) / (one + x);
    return eval(G, y) / (one + x);
  };
  return integrate(f, BigFloat(0L, w), BigFloat(1L, w), o).value.at(p);
}

double oracle_sup(const IntPolynomial& G, double lo, double hi) {
  std::vector<double> c;
  for (const auto& x : G.coeffs()) c.push_back(x.get_d());
  double best = 0;
  for (int i = 0; i <= 20000; ++i) {
    double y = lo + (hi - lo) * i / 20000.0, v = 0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * y + c[k];
    best = std::max(best, std::fabs(v));
  }
  return best;
}

}  // namespace

TEST_CASE("G = 1 and G = y") {
  auto one = gn_linear_form(ip({1}), 0);
  CHECK(one.form.log_coeff == 1);
  CHECK(one.form.const_coeff == 0);
  CHECK(one.integral);
  auto y = gn_linear_form(ip({0, 1}), 1);
  CHECK(y.form.log_coeff == 3);
  CHECK(y.form.const_coeff == -2);
  CHECK(y.form == linear_form(HGParams::make(1, 1, 1, Rational(2))));
  CHECK_THROWS_AS(gn_linear_form(ip({0, 0, 1}), 1), std::invalid_argument);
}

TEST_CASE("the first nontrivial polynomial gives an inclusion") {
  IntPolynomial G = ip({0, 0, 0, 0, 0, 0, -1, 6});
  auto g = gn_linear_form(G, 7);
  CHECK(g.scale == 420);
  CHECK(g.integral);
  Precision p(40);
  CHECK(agreeing_digits(form_value(g.form, p), gn_quadrature(G, p)) >= 32);
}

TEST_CASE("gn_linear_form is linear and matches quadrature") {
  oracle::Gen gen(77);
  Precision p(30);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> a(7), b(7);
    for (auto& x : a) x = gen.uniform(-9, 9);
    for (auto& x : b) x = gen.uniform(-9, 9);
    IntPolynomial A = ip(a), B = ip(b);
    auto fa = gn_linear_form(A, 6), fb = gn_linear_form(B, 6), fs = gn_linear_form(A + B, 6);
    CHECK(fs.form.log_coeff == fa.form.log_coeff + fb.form.log_coeff);
    CHECK(fs.form.const_coeff == fa.form.const_coeff + fb.form.const_coeff);
    CHECK(fa.integral);
    if (trial < 6 && !A.is_zero()) CHECK(agreeing_digits(form_value(fa.form, p), gn_quadrature(A, p)) >= 20);
  }
}

TEST_CASE("segments and sup norms") {
  CHECK_THROWS_AS(SegmentUnion::make({}), std::invalid_argument);
  CHECK_THROWS_AS(SegmentUnion::make({{R(1, 1), R(0, 1)}}), std::invalid_argument);
  CHECK_THROWS_AS(SegmentUnion::make({{R(0, 1), R(2, 1)}, {R(1, 1), R(3, 1)}}), std::invalid_argument);
  auto seg = log2_saddle_segment();
  const double s = 3 - 2 * std::sqrt(2.0);
  CHECK(std::fabs(seg.parts[0].second.get_d() - s) < 1e-15);
  CHECK(seg.parts[0].second.get_d() >= s);
  Precision p(30);
  CHECK(sup_norm(ip({1}), seg, p) == BigFloat(1L, p));
  CHECK(std::fabs(sup_norm(ip({-1, 6}), seg, p).to_double() - 1) < 1e-15);
  // y^6 (6y - 1) peaks at 1/7 with value 7^-7
  CHECK(agreeing_digits(sup_norm(ip({0, 0, 0, 0, 0, 0, -1, 6}), seg, p), pow(BigFloat(7L, p), -7)) >= 28);
  auto two = SegmentUnion::make({{R(-1, 1), R(0, 1)}, {R(1, 2), R(2, 1)}});
  CHECK(std::fabs(sup_norm(ip({0, -3, 0, 1}), two, p).to_double() - 2) < 1e-25);   // y^3 - 3y: 2 at y = -1 and y = 2
}

TEST_CASE("degree-one search") {
  auto g = search_gstar(1, 6, log2_saddle_segment());
  // y itself beats 6y - 1, whose sup on the segment is 1 (at y = 0)
  CHECK(g.best == ip({0, 1}));
  CHECK(std::fabs(g.sup_root.to_double() - (3 - 2 * std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("degree-seven search finds y^6(6y-1)") {
  auto g = search_gstar(7, 10, log2_saddle_segment());
  CHECK(g.best == ip({0, 0, 0, 0, 0, 0, -1, 6}));
  CHECK(agreeing_digits(g.sup_root, BigFloat(1L, Precision(30)) / 7) >= 25);
  CHECK(g.box_size > 1000000);
}

TEST_CASE("search is a true lower envelope on small boxes") {
  struct Case {
    int degree;
    long bound;
    SegmentUnion seg;
  };
  std::vector<Case> cases{{3, 3, log2_saddle_segment()},
                          {2, 4, SegmentUnion::single(R(1, 3), R(2, 3))},
                          {3, 2, SegmentUnion::make({{R(-1, 2), R(-1, 4)}, {R(1, 4), R(1, 2)}})}};
  for (const auto& c : cases) {
    auto g = search_gstar(c.degree, c.bound, c.seg);
    // full scan with a sampled sup
    double best = 1e300;
    std::vector<long> co(static_cast<std::size_t>(c.degree) + 1, -c.bound);
    while (true) {
      IntPolynomial G = ip(co);
      if (G.degree() >= 1) {
        double v = 0;
        for (const auto& [lo, hi] : c.seg.parts) v = std::max(v, oracle_sup(G, lo.get_d(), hi.get_d()));
        best = std::min(best, v);
      }
      std::size_t k = 0;
      while (k < co.size() && co[k] == c.bound) co[k++] = -c.bound;
      if (k == co.size()) break;
      ++co[k];
    }
    CHECK(g.sup.to_double() <= best * (1 + 1e-9));
    CHECK(g.sup.to_double() >= best * (1 - 1e-6));
  }
}

TEST_CASE("search rejects empty boxes") {
  CHECK_THROWS_AS(search_gstar(0, 5, log2_saddle_segment()), std::invalid_argument);
  CHECK_THROWS_AS(search_gstar(3, 0, log2_saddle_segment()), std::invalid_argument);
  CHECK_THROWS_AS(search_gstar(9, 1, log2_saddle_segment()), std::invalid_argument);
}

TEST_CASE("representation of H") {
  IntPolynomial H = product_of_roots({1, 2}, 3);
  auto f = hn_validate(H, 3, Integer(2));
  CHECK(f.reconstruct() == H);
  try {
    hn_validate(ip({1, 1}), 1, Integer(6));
    FAIL("expected a divisibility failure");
  } catch (const HnFormError& e) {
    CHECK(e.nu == 0);
  }
  try {
    hn_validate(product_of_roots({1, 2}, 3), 2, Integer(2));
    FAIL("expected a degree failure");
  } catch (const HnFormError& e) {
    CHECK(e.nu == -1);
  }
  auto fam = RhinFamily::log3();
  CHECK(fam.d() == 3);
  CHECK(fam.delta() == 12);
  CHECK(fam.exponents(10) == std::vector<long>{7, 5, 4, 1, 0, 0});
  IntPolynomial H10 = fam.at(10);
  CHECK(hn_validate(H10, 10, fam.delta()).reconstruct() == H10);
}

TEST_CASE("floor exponents are exact") {
  RhinFamily f;
  f.points = {Rational(2)};
  f.factors = {{RatPolynomial::linear(Rational(1), Rational(-1)), R(7, 10)}};
  CHECK(f.exponents(10) == std::vector<long>{7});
  CHECK(f.exponents(9) == std::vector<long>{6});
  CHECK(f.exponents(1000000) == std::vector<long>{700000});
}

TEST_CASE("H = (z-1)^n (z-2)^n gives the (n,n,n;2) forms") {
  for (long n = 1; n <= 6; ++n) {
    auto s = hn_simultaneous_forms(hn_validate(product_of_roots({1, 2}, n), n, Integer(2)), {Rational(2)});
    auto g = linear_form(HGParams::make(n, n, n, Rational(2)));
    Rational sign = n % 2 ? 1 : -1;
    CHECK(s.forms[0].log_coeff * sign == g.log_coeff);
    CHECK(s.forms[0].const_coeff * sign == g.const_coeff);
    CHECK(s.integral);
  }
}

TEST_CASE("forms for the log 3 family") {
  auto fam = RhinFamily::log3();
  for (long n = 1; n <= 12; ++n) {
    auto s = hn_simultaneous_forms(hn_validate(fam.at(n), n, fam.delta()), fam.points);
    CAPTURE(n);
    CHECK(s.d == 3);
    CHECK(s.integral);
    CHECK(s.forms[0].log_coeff == s.forms[1].log_coeff);
  }
  CHECK_THROWS_AS(hn_simultaneous_forms(hn_validate(fam.at(4), 4, Integer(6)), fam.points), std::invalid_argument);
  CHECK_THROWS_AS(hn_simultaneous_forms(hn_validate(fam.at(4), 4, Integer(12)), {Rational(1)}), std::invalid_argument);
}

TEST_CASE("forms agree with quadrature for n <= 8") {
  Precision p(30);
  auto fam = RhinFamily::log3();
  for (long n = 1; n <= 8; ++n) {
    IntPolynomial H = fam.at(n);
    auto s = hn_simultaneous_forms(hn_validate(H, n, fam.delta()), fam.points);
    for (const auto& f : s.forms) {
      CAPTURE(n);
      CHECK(agreeing_digits(form_value(f, p), hn_integral_value(H, n, fam.d(), f.target, p)) >= p.digits - 8);
    }
  }
}

TEST_CASE("bounds") {
  Precision p(30);
  auto simple = rhin_bound(RhinFamily::simple_log2(), p);
  CHECK(std::fabs(simple.report.mu.to_double() - 4.62210083) < 1e-8);
  CHECK(!simple.report.C0_prime.has_value());
  REQUIRE(simple.saddle.has_value());
  CHECK(std::fabs(simple.saddle->point.re.to_double() + std::sqrt(2.0)) < 1e-20);

  auto rh = rhin_bound(RhinFamily::log3(), p);
  CHECK(std::fabs(rh.report.mu.to_double() - 8.616) < 0.05);
  REQUIRE(rh.report.C0_prime.has_value());
  CHECK(rh.report.C0 < *rh.report.C0_prime);
  CHECK(rh.saddle.has_value());
  CHECK(rh.cauchy_rate >= rh.coefficient_rate - BigFloat(1e-7, p));
}

TEST_CASE("rates are per n") {
  // doubling every rate (and squaring the base) is the same family read at 2n
  auto fam = RhinFamily::log3();
  RhinFamily twice = fam;
  twice.base = fam.base * fam.base;
  for (auto& f : twice.factors) f.beta *= 2;
  for (long n = 1; n <= 6; ++n) CHECK(twice.at(n) == fam.at(2 * n));
}

TEST_CASE("finite-n decay approaches the envelope") {
  auto fam = RhinFamily::log3();
  auto b = rhin_bound(fam, Precision(30));
  const double limit = b.report.C0.to_double() + 1;
  double prev = -1e9;
  for (long n = 10; n <= 60; n += 10) {
    auto s = hn_simultaneous_forms(hn_validate(fam.at(n), n, fam.delta()), fam.points);
    double rate = -log(abs(form_value(s.forms[0], Precision(40)))).to_double() / static_cast<double>(n);
    CAPTURE(n);
    CHECK(rate >= prev - 0.1);
    CHECK(rate <= limit + 0.1);
    prev = rate;
  }
  // the fixed factor 2^14 3^7 still weighs log(constant)/n at n = 60
  CHECK(prev + log_of(fam.constant, Precision(20)).to_double() / 60 >= limit - 0.1);
}
