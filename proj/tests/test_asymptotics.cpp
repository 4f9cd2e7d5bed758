#include <doctest.h>

#include <cmath>

#include "logforms/asymptotics.hpp"
#include "support/oracles.hpp"

using namespace logforms;

namespace {

Rational R(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

ExponentProduct real_product(std::vector<std::pair<long, long>> root_exp) {
  ExponentProduct f;
  for (auto [r, e] : root_exp) f.factors.push_back({GaussianRational(r), Rational(e)});
  return f;
}

double eval_double(double x, const void* ctx) {
  const auto& f = *static_cast<const ExponentProduct*>(ctx);
  double v = 0;
  for (const auto& fac : f.merged()) v += fac.exponent.get_d() * std::log(std::fabs(x - fac.root.re.get_d()));
  return v;
}

BinomialPattern rukhadze_pattern() {
  // C(k, 7n) C(8n, k - 6n), k = y n
  return BinomialPattern{{{{1, 0}, {0, 7}}, {{0, 8}, {1, -6}}}, 1};
}

}  // namespace

TEST_CASE("maximum of x^6 (1-x)^8 / (1+x)^7 on (0,1)") {
  Precision p(60);
  auto f = real_product({{0, 6}, {1, 8}, {-1, -7}});
  auto m = log_max_on_interval(f, 0, 1, p);
  CHECK(std::fabs(m.value.to_double() + 11.84497806) < 1e-8);
  REQUIRE(m.argmax.has_value());
  Precision w(120);
  BigFloat closed = log(BigFloat(32L * 27L, w) *
                        (BigFloat(7734633L, w) * sqrt(BigFloat(393L, w)) - BigFloat(153333125L, w)) /
                        pow(BigFloat(7L, w), 7));
  CHECK(agreeing_digits(m.value, closed) >= 55);
}

TEST_CASE("maxima at the boundary and at the classical saddle") {
  Precision p(50);
  auto x = real_product({{0, 1}});
  auto m = log_max_on_interval(x, 0, 1, p);
  CHECK(m.value.is_zero());
  CHECK(!m.argmax.has_value());
  auto g = real_product({{0, 1}, {1, 1}, {-1, -1}});
  BigFloat expected = log(sqrt(BigFloat(2L, p)) - 1) * 2;
  CHECK(agreeing_digits(log_max_on_interval(g, 0, 1, p).value, expected) >= 45);
}

TEST_CASE("unbounded objectives are rejected") {
  CHECK_THROWS_AS(log_max_on_interval(real_product({{0, -1}}), 0, 1, Precision(30)), AsymptoticsError);
  CHECK_THROWS_AS(log_max_on_interval(real_product({{0, -1}, {2, 1}}), -1, 1, Precision(30)),
                  AsymptoticsError);
}

TEST_CASE("critical-point maxima agree with golden-section search") {
  std::vector<ExponentProduct> objectives{
      real_product({{0, 6}, {1, 8}, {-1, -7}}), real_product({{0, 1}, {1, 1}, {-1, -1}}),
      real_product({{0, 2}, {1, 3}, {-1, -1}}), real_product({{0, 5}, {1, 5}, {-2, -3}, {3, 1}})};
  for (const auto& f : objectives) {
    double at = 0;
    double ref = oracle::golden_max(eval_double, &f, 1e-12, 1 - 1e-12, &at);
    auto m = log_max_on_interval(f, 0, 1, Precision(40));
    CHECK(std::fabs(m.value.to_double() - ref) < 1e-10 * std::max(1.0, std::fabs(ref)));
  }
}

TEST_CASE("binomial growth for the (7,6,8) coefficient") {
  Precision p(60);
  auto m = binomial_growth_max(rukhadze_pattern(), 7, 14, p);
  CHECK(std::fabs(m.value.to_double() - 12.68147230) < 1e-8);
  Precision w(120);
  BigFloat closed = log(BigFloat(32L * 27L, w) *
                        (BigFloat(7734633L, w) * sqrt(BigFloat(393L, w)) + BigFloat(153333125L, w)) /
                        pow(BigFloat(7L, w), 7));
  CHECK(agreeing_digits(m.value, closed) >= 55);
}

TEST_CASE("central binomial growth is log 4") {
  Precision p(40);
  BinomialPattern central{{{{0, 2}, {0, 1}}}, 1};
  auto m = binomial_growth_max(central, 0, 1, p);
  CHECK(agreeing_digits(m.value, log(BigFloat(4L, p))) >= 38);
  // exact C(4000, 2000)^(1/2000), off by O(log n / n)
  double exact = log_of(binomial(4000, 2000), Precision(30)).to_double() / 2000;
  CHECK(exact < m.value.to_double());
  CHECK(m.value.to_double() - exact < 0.005);
}

TEST_CASE("binomial growth agrees with golden-section search") {
  auto pat = rukhadze_pattern();
  auto fn = [](double y, const void* ctx) {
    const auto& q = *static_cast<const BinomialPattern*>(ctx);
    return q.value(BigFloat(y, Precision(30))).to_double();
  };
  double ref = oracle::golden_max(fn, &pat, 7, 14);
  CHECK(std::fabs(binomial_growth_max(pat, 7, 14, Precision(30)).value.to_double() - ref) < 1e-10 * ref);
  BinomialPattern weighted{{{{1, 0}, {0, 1}}, {{0, 1}, {1, -1}}}, R(1, 3)};
  double ref2 = oracle::golden_max(fn, &weighted, 1, 2);
  CHECK(std::fabs(binomial_growth_max(weighted, 1, 2, Precision(30)).value.to_double() - ref2) < 1e-10);
}

TEST_CASE("saddles of the one-parameter log 2 integrand") {
  Precision p(50);
  ExponentProduct f = real_product({{1, 1}, {2, 1}});
  f.z_exponent = 1;
  auto s = saddle_points(f, p);
  CHECK(s.numerator == GaussPolynomial{GaussianRational(-2), GaussianRational(0), GaussianRational(1)});
  REQUIRE(s.saddles.size() == 2);
  BigFloat r2 = sqrt(BigFloat(2L, p));
  const Saddle& pos = s.saddles[1].point.re.sign() > 0 ? s.saddles[1] : s.saddles[0];
  CHECK(agreeing_digits(pos.point.re, r2) >= 45);
  CHECK(agreeing_digits(pos.value, log(r2 - 1) * 2) >= 45);
  CHECK(!s.degenerate);
}

TEST_CASE("saddles of the pi configuration") {
  Precision p(50);
  ExponentProduct f;
  f.factors = {{GaussianRational(1), 2}, {GaussianRational(2), 2}, {GaussianRational(1, 1), 2}};
  f.z_exponent = 3;
  auto s = saddle_points(f, p);
  REQUIRE(s.saddles.size() == 3);
  CHECK(!s.degenerate);
  // Vieta: the roots sum to -c2/c3
  GaussianRational ratio = s.numerator.coeff(2) / s.numerator.lead();
  Complex sum(p);
  for (const auto& x : s.saddles) {
    CHECK(x.residual.log10_abs() < -30);
    sum += x.point;
  }
  CHECK(abs(sum + Complex(ratio, p)).log10_abs() < -40);
}

TEST_CASE("scaling the exponents scales the saddle values") {
  Precision p(40);
  ExponentProduct f;
  f.factors = {{GaussianRational(1), 2}, {GaussianRational(2), 2}, {GaussianRational(1, 1), 2}};
  f.z_exponent = 3;
  auto a = saddle_points(f, p);
  auto b = saddle_points(f.scaled(5), p);
  REQUIRE(a.saddles.size() == b.saddles.size());
  for (std::size_t i = 0; i < a.saddles.size(); ++i) {
    CHECK(abs(a.saddles[i].point - b.saddles[i].point).log10_abs() < -30);
    CHECK(agreeing_digits(b.saddles[i].value, a.saddles[i].value * 5) >= 30);
  }
}

TEST_CASE("assembling bounds") {
  Precision p(40);
  auto r = assemble_bound({{"decay", BigFloat::parse("6.30273213", p), BigFloat::parse("18.22371823", p)}});
  CHECK(std::fabs(r.mu.to_double() - 3.89139977) < 1e-8);
  BigFloat L = log(sqrt(BigFloat(2L, p)) + 1) * 2;
  auto simple = assemble_bound({{"integral", L, L}, {"lcm", BigFloat(-1L, p), BigFloat(1L, p)}});
  CHECK(std::fabs(simple.mu.to_double() - 4.62210083) < 1e-8);
  CHECK(assemble_bound({{"unit", BigFloat(1L, p), BigFloat(1L, p)}}).mu == BigFloat(2L, p));
  CHECK_THROWS_AS(assemble_bound({{"bad", BigFloat(-1L, p), BigFloat(1L, p)}}), BoundError);
  CHECK_THROWS_AS(assemble_bound({{"x", BigFloat(2L, p), BigFloat(1L, p)}}, BigFloat(1L, p)), BoundError);
  CHECK(assemble_bound({{"x", BigFloat(1L, p), BigFloat(1L, p)}}, BigFloat(2L, p)).C0_prime.has_value());
}

TEST_CASE("mu decreases as any C0 term grows") {
  oracle::Gen gen(3);
  Precision p(30);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BoundTerm> terms;
    for (int k = 0; k < 4; ++k)
      terms.push_back({"t", BigFloat(Rational(gen.uniform(1, 100), 10), p), BigFloat(Rational(gen.uniform(1, 100), 10), p)});
    auto base = assemble_bound(terms);
    std::size_t j = static_cast<std::size_t>(gen.uniform(0, 3));
    terms[j].to_c0 += BigFloat(Rational(gen.uniform(1, 50), 100), p);
    CHECK(assemble_bound(terms).mu < base.mu);
  }
}
