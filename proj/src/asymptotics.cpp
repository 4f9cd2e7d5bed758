#include "logforms/asymptotics.hpp"

#include <algorithm>

#include "logforms/roots.hpp"

namespace logforms {

namespace {

BigFloat log_abs(const Rational& q, Precision p) { return log_of(Rational(abs(q)), p); }

BigFloat xlogx(const BigFloat& x) {
  if (x.is_zero()) return x;
  return x * log(x);
}

bool is_root_at(const std::vector<ExponentFactor>& fs, const Rational& x, Rational* exponent) {
  for (const auto& f : fs) {
    if (f.root.is_real() && f.root.re == x) {
      *exponent = f.exponent;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ExponentFactor> ExponentProduct::merged() const {
  std::vector<ExponentFactor> out;
  auto add = [&out](const GaussianRational& r, const Rational& e) {
    for (auto& f : out) {
      if (f.root == r) {
        f.exponent += e;
        return;
      }
    }
    out.push_back({r, e});
  };
  for (const auto& f : factors) add(f.root, f.exponent);
  if (sgn(z_exponent) != 0) add(GaussianRational(0), -z_exponent);
  out.erase(std::remove_if(out.begin(), out.end(), [](const ExponentFactor& f) { return sgn(f.exponent) == 0; }),
            out.end());
  return out;
}

ExponentProduct ExponentProduct::scaled(const Rational& c) const {
  ExponentProduct g = *this;
  for (auto& f : g.factors) f.exponent *= c;
  g.z_exponent *= c;
  if (c != 1 && abs(scale) != 1) throw std::invalid_argument("ExponentProduct::scaled: needs |scale| = 1");
  return g;
}

GaussPolynomial ExponentProduct::derivative_numerator() const {
  auto fs = merged();
  GaussPolynomial total;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    GaussPolynomial term = GaussPolynomial::constant(GaussianRational(fs[j].exponent));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i != j) term = term * GaussPolynomial::linear(GaussianRational(1), -fs[i].root);
    }
    total += term;
  }
  return total;
}

BigFloat ExponentProduct::value(const Complex& z) const {
  Precision p = z.precision();
  BigFloat v = log_abs(scale, p);
  for (const auto& f : merged()) {
    Complex d = z - Complex(f.root, p);
    v += BigFloat(f.exponent, p) * log(d.norm()) / 2;
  }
  return v;
}

BigFloat ExponentProduct::value(const BigFloat& x) const { return value(Complex(x)); }

Complex ExponentProduct::derivative(const Complex& z) const {
  Precision p = z.precision();
  Complex s(p);
  for (const auto& f : merged()) s += Complex(BigFloat(f.exponent, p)) / (z - Complex(f.root, p));
  return s;
}

IntervalMax log_max_on_interval(const ExponentProduct& f, const Rational& lo, const Rational& hi, Precision p) {
  if (!(lo < hi)) throw std::invalid_argument("log_max_on_interval: empty interval");
  auto fs = f.merged();
  for (const auto& fac : fs) {
    if (!fac.root.is_real()) throw std::invalid_argument("log_max_on_interval: non-real root");
    if (fac.root.re > lo && fac.root.re < hi && sgn(fac.exponent) < 0)
      throw AsymptoticsError("log_max_on_interval: pole inside the interval, unbounded");
  }
  const Precision w = p + 10;
  std::optional<IntervalMax> best;
  auto offer = [&](BigFloat v, std::optional<BigFloat> at) {
    if (!best || v > best->value) best = IntervalMax{std::move(v), std::move(at)};
  };
  RatPolynomial num = f.derivative_numerator().map<Rational>([](const GaussianRational& c) { return c.re; });
  if (!num.is_zero()) {
    for (const BigFloat& x : real_roots(num, lo, hi, w)) offer(f.value(x), x);
  }
  for (const Rational& end : {lo, hi}) {
    Rational e;
    if (is_root_at(fs, end, &e)) {
      if (sgn(e) < 0) throw AsymptoticsError("log_max_on_interval: unbounded at an endpoint");
      continue;  // f -> -infinity there
    }
    offer(f.value(BigFloat(end, w)), std::nullopt);
  }
  if (!best) throw AsymptoticsError("log_max_on_interval: no finite candidate");
  best->value = best->value.at(p);
  if (best->argmax) best->argmax = best->argmax->at(p);
  return *best;
}

BigFloat BinomialPattern::value(const BigFloat& y) const {
  Precision p = y.precision();
  BigFloat v = log_abs(base, p) * y;
  for (const auto& b : factors) {
    BigFloat T = y * b.top.slope + BigFloat(b.top.offset, p);
    BigFloat B = y * b.bottom.slope + BigFloat(b.bottom.offset, p);
    BigFloat D = T - B;
    if (T.sign() < 0 || B.sign() < 0 || D.sign() < 0) throw std::domain_error("BinomialPattern: outside the range");
    v += xlogx(T) - xlogx(B) - xlogx(D);
  }
  return v;
}

RatPolynomial BinomialPattern::critical_polynomial() const {
  // g'(y) = sum T' log T - B' log B - D' log D + log|base| vanishes iff the products below agree.
  RatPolynomial num = RatPolynomial::constant(Rational(abs(base.get_num())));
  RatPolynomial den = RatPolynomial::constant(Rational(base.get_den()));
  auto put = [&](long slope, const Rational& offset, long e) {
    RatPolynomial L = RatPolynomial::linear(Rational(slope), offset);
    if (e > 0) num = num * L.pow(static_cast<unsigned long>(e));
    if (e < 0) den = den * L.pow(static_cast<unsigned long>(-e));
  };
  for (const auto& b : factors) {
    put(b.top.slope, b.top.offset, b.top.slope);
    put(b.bottom.slope, b.bottom.offset, -b.bottom.slope);
    put(b.top.slope - b.bottom.slope, b.top.offset - b.bottom.offset, -(b.top.slope - b.bottom.slope));
  }
  return num - den;
}

IntervalMax binomial_growth_max(const BinomialPattern& pattern, const Rational& lo, const Rational& hi, Precision p) {
  if (lo > hi) throw std::invalid_argument("binomial_growth_max: empty range");
  const Precision w = p + 10;
  IntervalMax best{pattern.value(BigFloat(lo, w)), std::nullopt};
  BigFloat at_hi = pattern.value(BigFloat(hi, w));
  if (at_hi > best.value) best.value = at_hi;
  RatPolynomial P = pattern.critical_polynomial();
  if (!P.is_zero() && lo < hi) {
    for (const BigFloat& y : real_roots(P, lo, hi, w)) {
      BigFloat v = pattern.value(y);
      if (v > best.value) best = IntervalMax{v, y};
    }
  }
  best.value = best.value.at(p);
  if (best.argmax) best.argmax = best.argmax->at(p);
  return best;
}

SaddleSet saddle_points(const ExponentProduct& f, Precision p) {
  SaddleSet out;
  out.numerator = f.derivative_numerator();
  if (out.numerator.degree() < 1) return out;
  const Precision w = p + 10;
  ComplexRoots cr = complex_roots(out.numerator, w);
  out.degenerate = cr.repeated;
  for (const Complex& z : cr.roots) {
    Saddle s{z, f.value(z), abs(f.derivative(z))};
    s.point = Complex(s.point.re.at(p), s.point.im.at(p));
    s.value = s.value.at(p);
    s.residual = s.residual.at(p);
    out.saddles.push_back(std::move(s));
  }
  return out;
}

BoundReport assemble_bound(std::vector<BoundTerm> terms, std::optional<BigFloat> C0_prime) {
  if (terms.empty()) throw BoundError("assemble_bound: empty ledger");
  Precision p = terms.front().to_c0.precision();
  for (const auto& t : terms) p = Precision(std::max({p.digits, t.to_c0.precision().digits, t.to_c1.precision().digits}));
  BoundReport r;
  r.C0 = BigFloat(0L, p);
  r.C1 = BigFloat(0L, p);
  for (const auto& t : terms) {
    r.C0 += t.to_c0;
    r.C1 += t.to_c1;
  }
  if (r.C0.sign() <= 0) throw BoundError("construction proves nothing: C0 = " + r.C0.to_string(12) + " <= 0");
  if (C0_prime) {
    if (!(r.C0 < *C0_prime))
      throw BoundError("two-form bound needs C0 < C0': " + r.C0.to_string(12) + " >= " + C0_prime->to_string(12));
    r.C0_prime = C0_prime;
  }
  r.mu = BigFloat(1L, p) + r.C1 / r.C0;
  r.terms = std::move(terms);
  return r;
}

}  // namespace logforms
