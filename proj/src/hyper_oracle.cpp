#include "logforms/hyper_oracle.hpp"

#include <algorithm>

namespace logforms {

namespace {

constexpr long kMaxTerms = 2000000;

bool nonpositive_integer(const Rational& q) { return q.get_den() == 1 && sgn(q) <= 0; }

long terminating_length(const Rational& A, const Rational& B) {
  long n = -1;
  if (nonpositive_integer(A)) n = -A.get_num().get_si();
  if (nonpositive_integer(B)) {
    long m = -B.get_num().get_si();
    n = n < 0 ? m : std::min(n, m);
  }
  return n;
}

Rational pospart(const Rational& q) { return sgn(q) > 0 ? q : Rational(0); }

// Bound on |(A+k)(B+k) / ((C+k)(1+k))| over all k >= s; valid once A+s, B+s, C+s > 0.
// Both factors (A+k)/(1+k) and (B+k)/(C+k) are dominated by decreasing majorants.
std::optional<Rational> ratio_majorant(const Rational& A, const Rational& B, const Rational& C, long s) {
  if (A + s <= 0 || B + s <= 0 || C + s <= 0) return std::nullopt;
  Rational one(1);
  Rational x = (one + pospart(A - 1) / (s + 1)) * (one + pospart(B - C) / (C + s));
  Rational y = (one + pospart(B - 1) / (s + 1)) * (one + pospart(A - C) / (C + s));
  return std::min(x, y);
}

Complex cpow_rational(const Complex& base, const Rational& e, Precision w) {
  return exp(log(base) * BigFloat(e, w));
}

}  // namespace

Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational r = 1;
  for (long k = 0; k < n; ++k) r *= a + k;
  return r;
}

SeriesResult gauss_2f1_series(const Rational& A, const Rational& B, const Rational& C, const Complex& z, Precision p) {
  if (nonpositive_integer(C)) throw std::invalid_argument("2F1: C is a non-positive integer");
  const Precision w = p + 20;
  const long finite = terminating_length(A, B);
  Complex zw(z.re.at(w), z.im.at(w));
  BigFloat r = abs(zw);
  if (finite < 0 && !(r < BigFloat(1L, w))) throw DivergentSeries("2F1: |z| >= 1 outside the convergence disc");

  SeriesResult out;
  out.value = Complex(w);
  out.tail_bound = BigFloat(0L, w);
  Rational coef = 1;
  Complex zpow(BigFloat(1L, w), BigFloat(0L, w));
  const BigFloat eps = pow(BigFloat(10L, w), -(p.digits + 3));
  for (long nu = 0;; ++nu) {
    Complex term = zpow * BigFloat(coef, w);
    out.value += term;
    out.terms = nu + 1;
    if (finite >= 0) {
      if (nu == finite) break;
    } else {
      auto maj = ratio_majorant(A, B, C, nu);
      if (maj) {
        BigFloat rho = r * BigFloat(*maj, w);
        if (rho < BigFloat(1L, w)) {
          BigFloat tail = abs(term) * rho / (BigFloat(1L, w) - rho);
          BigFloat scale = max(abs(out.value), BigFloat(1L, w) * eps);
          if (tail <= eps * scale) {
            out.tail_bound = tail;
            break;
          }
        }
      }
      if (nu > kMaxTerms) throw DivergentSeries("2F1: term budget exhausted");
    }
    coef *= (A + nu) * (B + nu) / ((C + nu) * (nu + 1));
    if (sgn(coef) == 0 && finite < 0) break;
    zpow *= zw;
  }
  out.value = Complex(out.value.re.at(p), out.value.im.at(p));
  return out;
}

Complex gauss_2f1_euler(const Rational& A, const Rational& B, const Rational& C, const Complex& z, Precision p) {
  const Precision w = p + 20;
  Complex zw(z.re.at(w), z.im.at(w));
  Complex one(BigFloat(1L, w), BigFloat(0L, w));
  Complex t = zw / (zw - one);
  Complex f = gauss_2f1_series(A, C - B, C, t, w).value;
  Complex v = cpow_rational(one - zw, -A, w) * f;
  return {v.re.at(p), v.im.at(p)};
}

Complex gauss_2f1(const Rational& A, const Rational& B, const Rational& C, const Complex& z, Precision p) {
  if (terminating_length(A, B) >= 0) return gauss_2f1_series(A, B, C, z, p).value;
  const Precision w = p + 20;
  Complex zw(z.re.at(w), z.im.at(w));
  Complex one(BigFloat(1L, w), BigFloat(0L, w));
  if ((zw - one).is_zero()) throw DivergentSeries("2F1: z = 1 not supported");
  BigFloat r = abs(zw);
  BigFloat rt = abs(zw / (zw - one));
  BigFloat best = min(r, rt);
  if (!(best < BigFloat(1L, w))) throw DivergentSeries("2F1: argument outside the supported domain");
  if (r <= rt) return gauss_2f1_series(A, B, C, z, p).value;
  return gauss_2f1_euler(A, B, C, z, p);
}

BigFloat gauss_2f1(const Rational& A, const Rational& B, const Rational& C, const Rational& z, Precision p) {
  return gauss_2f1(A, B, C, Complex(BigFloat(z, p + 20)), p).re;
}

Complex appell_f1(const Rational& A, const Rational& B, const Rational& Bp, const Rational& C, const Complex& X,
                  const Complex& Y, Precision p) {
  if (nonpositive_integer(C)) throw std::invalid_argument("F1: C is a non-positive integer");
  const Precision w = p + 20;
  Complex Xw(X.re.at(w), X.im.at(w)), Yw(Y.re.at(w), Y.im.at(w));

  if (nonpositive_integer(Bp) || nonpositive_integer(B)) {
    const bool swap = !nonpositive_integer(Bp);
    const Rational& Bf = swap ? B : Bp;  // finite direction
    const Rational& Bi = swap ? Bp : B;
    const Complex& Zf = swap ? Xw : Yw;
    const Complex& Zi = swap ? Yw : Xw;
    const long N = -Bf.get_num().get_si();
    Complex sum(w);
    Complex zpow(BigFloat(1L, w), BigFloat(0L, w));
    Rational coef = 1;
    for (long mu = 0; mu <= N; ++mu) {
      sum += zpow * BigFloat(coef, w) * gauss_2f1(A + mu, Bi, C + mu, Zi, w);
      coef *= (A + mu) * (Bf + mu) / ((C + mu) * (mu + 1));
      zpow *= Zf;
    }
    return {sum.re.at(p), sum.im.at(p)};
  }

  BigFloat rx = abs(Xw), ry = abs(Yw);
  BigFloat r = max(rx, ry);
  if (!(r < BigFloat(1L, w))) throw DivergentSeries("F1: needs |X| < 1 and |Y| < 1");
  const Rational beta = abs(B) + abs(Bp);
  const BigFloat eps = pow(BigFloat(10L, w), -(p.digits + 3));

  // row[k] = (B)_k / k! X^k and col[k] = (B')_k / k! Y^k, extended one entry per diagonal
  std::vector<Complex> row, col;
  Rational cb = 1, cbp = 1, ac = 1;   // running (B)_k/k!, (B')_k/k!, (A)_s/(C)_s
  Complex xp(BigFloat(1L, w), BigFloat(0L, w)), yp = xp;
  BigFloat majorant(1L, w);   // |(A)_s/(C)_s| (beta)_s / s! r^s
  Complex sum(w);
  for (long s = 0;; ++s) {
    row.push_back(xp * BigFloat(cb, w));
    col.push_back(yp * BigFloat(cbp, w));
    Complex diag(w);
    for (long nu = 0; nu <= s; ++nu) diag += row[static_cast<std::size_t>(nu)] * col[static_cast<std::size_t>(s - nu)];
    sum += diag * BigFloat(ac, w);
    auto maj = ratio_majorant(A, beta, C, s);
    if (maj) {
      BigFloat rho = r * BigFloat(*maj, w);
      if (rho < BigFloat(1L, w)) {
        BigFloat tail = majorant * rho / (BigFloat(1L, w) - rho);
        if (tail <= eps * max(abs(sum), eps)) break;
      }
    }
    if (s > 20000) throw DivergentSeries("F1: term budget exhausted");
    cb *= (B + s) / (s + 1);
    cbp *= (Bp + s) / (s + 1);
    ac *= (A + s) / (C + s);
    majorant *= BigFloat(Rational(abs((A + s) / (C + s)) * (beta + s) / (s + 1)), w) * r;
    xp *= Xw;
    yp *= Yw;
  }
  return {sum.re.at(p), sum.im.at(p)};
}

BigFloat euler_integral_2f1(long m, long n0, long n1, const Rational& a, Precision p) {
  Rational gamma_ratio(factorial(static_cast<unsigned long>(n0)) * factorial(static_cast<unsigned long>(n1)),
                       factorial(static_cast<unsigned long>(n0 + n1 + 1)));
  gamma_ratio.canonicalize();
  BigFloat f = gauss_2f1(Rational(m + 1), Rational(n0 + 1), Rational(n0 + n1 + 2), Rational(1 - a), p + 5);
  return (f * BigFloat(gamma_ratio, p + 5)).at(p);
}

Complex two_point_integral_f1(long m, long n0, long n1, long n2, const GaussianRational& a, const GaussianRational& b,
                              Precision p) {
  const Precision w = p + 10;
  GaussianRational one(1);
  GaussianRational X = one - a;
  GaussianRational Y = (one - a) / (one - b);
  Rational gamma_ratio(factorial(static_cast<unsigned long>(n0)) * factorial(static_cast<unsigned long>(n1)),
                       factorial(static_cast<unsigned long>(n0 + n1 + 1)));
  gamma_ratio.canonicalize();
  GaussianRational pre = pow(X, n0 + n1 + 1) * pow(one - b, n2) * GaussianRational(gamma_ratio);
  if ((n0 + 1) % 2 != 0) pre = GaussianRational(0) - pre;
  Complex f = appell_f1(Rational(n0 + 1), Rational(m + 1), Rational(-n2), Rational(n0 + n1 + 2), Complex(X, w),
                        Complex(Y, w), w);
  Complex v = Complex(pre, w) * f;
  return {v.re.at(p), v.im.at(p)};
}

Rational ramanujan_partial_sum(RamanujanSeries id, long N) {
  if (N < 1) throw std::invalid_argument("ramanujan_pi: need at least one term");
  const bool s39 = id == RamanujanSeries::kSeries39;
  const Integer slope = s39 ? 21460 : 26390;
  const Integer offset = s39 ? 1123 : 1103;
  const Rational x = s39 ? Rational(-1, 882 * 882) : Rational(1, Integer(99 * 99) * Integer(99 * 99));
  const Rational lead = s39 ? Rational(1, 882) : Rational(1, 99 * 99);
  Rational sum = 0, c = 1, xp = 1;
  for (long nu = 0; nu < N; ++nu) {
    sum += c * Rational(slope * nu + offset) * xp;
    // (1/4)_nu (1/2)_nu (3/4)_nu / nu!^3 advanced by one step
    Rational step(Integer(4 * nu + 1) * (2 * nu + 1) * (4 * nu + 3), Integer(32) * (nu + 1) * (nu + 1) * (nu + 1));
    step.canonicalize();
    c *= step;
    xp *= x;
  }
  return sum * lead;
}

BigFloat ramanujan_pi(RamanujanSeries id, long N, Precision p) { return BigFloat(ramanujan_partial_sum(id, N), p); }

}  // namespace logforms
