#include "logforms/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logforms {

namespace {

std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
  std::vector<RatPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

long variations(const std::vector<RatPolynomial>& chain, const Rational& x) {
  long count = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void isolate(const std::vector<RatPolynomial>& chain, const RatPolynomial& p, Rational lo, const Rational& hi,
             long count, std::vector<RootInterval>& out) {
  // `count` distinct roots lie in (lo, hi]. Sturm counts stay valid when lo is itself a root.
  while (count > 0) {
    if (count == 1) {
      if (sgn(p(hi)) == 0) out.push_back({hi, hi});
      else out.push_back({lo, hi});
      return;
    }
    Rational mid = (lo + hi) / 2;
    long left = variations(chain, lo) - variations(chain, mid);
    isolate(chain, p, lo, mid, left, out);
    lo = mid;
    count -= left;
  }
}

}  // namespace

long sturm_count(const RatPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  auto q = squarefree_part(p);
  auto chain = sturm_chain(q);
  return variations(chain, lo) - variations(chain, hi);
}

std::vector<RootInterval> isolate_real_roots(const RatPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1 || !(lo < hi)) return out;
  RatPolynomial q = squarefree_part(p);
  auto chain = sturm_chain(q);
  long count = variations(chain, lo) - variations(chain, hi);
  isolate(chain, q, lo, hi, count, out);
  // The open interval excludes hi.
  if (!out.empty() && out.back().lo == hi) out.pop_back();
  return out;
}

std::vector<BigFloat> real_roots(const RatPolynomial& p, const Rational& lo, const Rational& hi, Precision prec) {
  std::vector<BigFloat> out;
  RatPolynomial q = squarefree_part(p);
  Precision work = prec + 10;
  for (const auto& iv : isolate_real_roots(p, lo, hi)) {
    if (iv.lo == iv.hi) {
      out.emplace_back(iv.lo, prec);
      continue;
    }
    BigFloat a(iv.lo, work), b(iv.hi, work);
    // Exactly one root in (lo, hi]; lo may itself be a (different) root.
    int sa = -sgn(q(iv.hi));
    BigFloat tol = pow(BigFloat(10L, work), -(prec.digits + 5));
    BigFloat scale = max(abs(a), abs(b));
    if (scale < BigFloat(1L, work)) scale = BigFloat(1L, work);
    tol = tol * scale;
    for (int iter = 0; iter < 100000 && (b - a) > tol; ++iter) {
      BigFloat mid = (a + b) / 2;
      int sm = eval(q, mid).sign();
      if (sm == 0) {
        a = mid;
        b = mid;
        break;
      }
      if (sm == sa) a = mid;
      else b = mid;
    }
    out.push_back(((a + b) / 2).at(prec));
  }
  return out;
}

Rational root_bound(const RatPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  for (long k = 0; k < p.degree(); ++k) m = std::max<Rational>(m, abs(p.coeff(k) / p.lead()));
  return m + 1;
}

ComplexRoots complex_roots(const GaussPolynomial& p, Precision prec) {
  if (p.degree() < 1) throw std::invalid_argument("complex_roots: degree must be positive");
  ComplexRoots result;
  GaussPolynomial g = gcd(p, p.derivative());
  result.repeated = g.degree() > 0;
  GaussPolynomial q = result.repeated ? divmod(p, g).first : p;
  q = q * (GaussianRational(1) / q.lead());
  const long d = q.degree();
  Precision work = prec + 20;
  GaussPolynomial dq = q.derivative();

  // Radius from the Cauchy bound on |coefficients|.
  double bound = 0;
  for (long k = 0; k < d; ++k) {
    double v = std::sqrt(q.coeff(k).norm().get_d());
    bound = std::max(bound, v);
  }
  bound += 1;

  std::vector<Complex> z;
  for (long k = 0; k < d; ++k) {
    double angle = 2 * M_PI * (static_cast<double>(k) + 0.25) / static_cast<double>(d) + 0.4;
    z.emplace_back(BigFloat(bound * 0.5 * std::cos(angle), work), BigFloat(bound * 0.5 * std::sin(angle), work));
  }
  BigFloat tol = pow(BigFloat(10L, work), -(prec.digits + 8));
  for (int iter = 0; iter < 2000; ++iter) {
    BigFloat worst(0L, work);
    for (long k = 0; k < d; ++k) {
      Complex pv = eval(q, z[k]);
      Complex dv = eval(dq, z[k]);
      if (pv.is_zero()) continue;
      Complex ratio = pv / dv;
      Complex s(work);
      for (long j = 0; j < d; ++j) {
        if (j == k) continue;
        s += Complex(BigFloat(1L, work)) / (z[k] - z[j]);
      }
      Complex denom = Complex(BigFloat(1L, work)) - ratio * s;
      Complex step = ratio / denom;
      z[k] -= step;
      BigFloat size = abs(step) / max(abs(z[k]), BigFloat(1L, work));
      if (size > worst) worst = size;
    }
    if (worst < tol) break;
  }
  // Newton polish.
  for (auto& r : z) {
    for (int it = 0; it < 5; ++it) {
      Complex dv = eval(dq, r);
      if (dv.is_zero()) break;
      r -= eval(q, r) / dv;
    }
  }
  BigFloat worst(0L, work);
  for (auto& r : z) {
    BigFloat res = abs(eval(q, r));
    if (res > worst) worst = res;
  }
  for (auto& r : z) result.roots.emplace_back(r.re.at(prec), r.im.at(prec));
  result.max_residual = worst.at(prec);
  // Deterministic order: by real part, then imaginary part.
  std::sort(result.roots.begin(), result.roots.end(), [](const Complex& a, const Complex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return result;
}

}  // namespace logforms
