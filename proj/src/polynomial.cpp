#include "logforms/polynomial.hpp"

namespace logforms {

RatPolynomial to_rational(const IntPolynomial& p) {
  return p.map<Rational>([](const Integer& x) { return Rational(x); });
}

GaussPolynomial to_gaussian(const RatPolynomial& p) {
  return p.map<GaussianRational>([](const Rational& x) { return GaussianRational(x); });
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return IntPolynomial();
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(ints.back()) < 0) content = -content;
  for (auto& v : ints) v /= content;
  return IntPolynomial(std::move(ints));
}

RatPolynomial from_roots(const std::vector<Rational>& roots) {
  RatPolynomial r = RatPolynomial::constant(Rational(1));
  for (const auto& x : roots) r = r * RatPolynomial::linear(Rational(1), -x);
  return r;
}

BigFloat eval(const RatPolynomial& p, const BigFloat& x) {
  Precision prec = x.precision();
  return p.eval<BigFloat>(x, [&](const Rational& c) { return BigFloat(c, prec); });
}

BigFloat eval(const IntPolynomial& p, const BigFloat& x) {
  Precision prec = x.precision();
  return p.eval<BigFloat>(x, [&](const Integer& c) { return BigFloat(c, prec); });
}

Complex eval(const GaussPolynomial& p, const Complex& z) {
  Precision prec = z.precision();
  return p.eval<Complex>(z, [&](const GaussianRational& c) { return Complex(c, prec); });
}

Complex eval(const RatPolynomial& p, const Complex& z) {
  Precision prec = z.precision();
  return p.eval<Complex>(z, [&](const Rational& c) { return Complex(BigFloat(c, prec)); });
}

namespace {

template <class T>
std::string render(const Poly<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    T c = p.coeff(k);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    T a = neg ? T(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    bool unit = (a == 1);
    if (!unit || k == 0) out += a.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) { return render(p, var); }
std::string to_string(const RatPolynomial& p, const std::string& var) { return render(p, var); }

}  // namespace logforms
