#include "logforms/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logforms {

mpfr_prec_t bits_for(Precision p) {
  if (p.digits < 1) throw std::invalid_argument("precision must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(p.digits) * 3.3219280948873623)) + 8;
}

BigFloat::BigFloat(long digits_tag, bool) : digits_(digits_tag) {
  mpfr_init2(v_, bits_for(Precision(digits_tag)));
}

BigFloat make_uninit(Precision p) { return BigFloat(p.digits, true); }

BigFloat::BigFloat(long x, Precision p) : BigFloat(p.digits, true) { mpfr_set_si(v_, x, MPFR_RNDN); }

BigFloat::BigFloat(double x, Precision p) : BigFloat(p.digits, true) { mpfr_set_d(v_, x, MPFR_RNDN); }

BigFloat::BigFloat(const Integer& x, Precision p) : BigFloat(p.digits, true) {
  mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& x, Precision p) : BigFloat(p.digits, true) {
  mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string& text, Precision p) {
  BigFloat r(p.digits, true);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("bad decimal number: " + text);
  return r;
}

BigFloat::BigFloat(const BigFloat& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  std::swap(digits_, o.digits_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::at(Precision p) const {
  BigFloat r(p.digits, true);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

double BigFloat::log10_abs() const {
  if (mpfr_zero_p(v_)) return -1e300;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

std::string BigFloat::to_string(int significant) const {
  if (is_zero()) return "0";   // no "-0"
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", std::max(1, significant), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {

Precision wider(const BigFloat& a, const BigFloat& b) {
  return Precision(std::max(a.precision().digits, b.precision().digits));
}

using Binary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BigFloat binary(const BigFloat& a, const BigFloat& b, Binary fn) {
  BigFloat r = make_uninit(wider(a, b));
  fn(r.raw(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat unary(const BigFloat& a, Unary fn) {
  BigFloat r = make_uninit(a.precision());
  fn(r.raw(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }
BigFloat BigFloat::operator-() const { return unary(*this, mpfr_neg); }

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }

BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r = make_uninit(a.precision());
  mpfr_mul_si(r.raw(), a.get(), b, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, long b) {
  BigFloat r = make_uninit(a.precision());
  mpfr_div_si(r.raw(), a.get(), b, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, long b) {
  BigFloat r = make_uninit(a.precision());
  mpfr_add_si(r.raw(), a.get(), b, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, long b) {
  BigFloat r = make_uninit(a.precision());
  mpfr_sub_si(r.raw(), a.get(), b, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log1p(const BigFloat& x) { return unary(x, mpfr_log1p); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat sinh(const BigFloat& x) { return unary(x, mpfr_sinh); }
BigFloat cosh(const BigFloat& x) { return unary(x, mpfr_cosh); }
BigFloat pow(const BigFloat& x, const BigFloat& y) { return binary(x, y, mpfr_pow); }
BigFloat atan2(const BigFloat& y, const BigFloat& x) { return binary(y, x, mpfr_atan2); }

BigFloat floor(const BigFloat& x) {
  BigFloat r = make_uninit(x.precision());
  mpfr_floor(r.raw(), x.get());
  return r;
}

BigFloat pow(const BigFloat& x, long e) {
  BigFloat r = make_uninit(x.precision());
  mpfr_pow_si(r.raw(), x.get(), e, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

BigFloat pi(Precision p) {
  BigFloat r = make_uninit(p);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat log_of(const Integer& x, Precision p) {
  if (sgn(x) <= 0) throw std::domain_error("log_of: non-positive argument");
  // mpfr_set_z keeps the full exponent range, so no overflow for large x.
  return log(BigFloat(x, p + 5)).at(p);
}

BigFloat log_of(const Rational& x, Precision p) {
  if (sgn(x) <= 0) throw std::domain_error("log_of: non-positive argument");
  return (log_of(x.get_num(), p + 5) - log_of(x.get_den(), p + 5)).at(p);
}

double agreeing_digits(const BigFloat& value, const BigFloat& reference) {
  BigFloat diff = abs(value - reference);
  double cap = static_cast<double>(std::min(value.precision().digits, reference.precision().digits));
  if (diff.is_zero()) return cap;
  double scale = reference.is_zero() ? 0.0 : reference.log10_abs();
  return std::min(cap, scale - diff.log10_abs());
}

Precision Complex::precision() const {
  return Precision(std::max(re.precision().digits, im.precision().digits));
}

std::string Complex::to_string(int significant) const {
  std::string r = re.to_string(significant);
  std::string i = im.to_string(significant);
  if (i[0] == '-') return r + " - " + i.substr(1) + "i";
  return r + " + " + i + "i";
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  BigFloat n = o.norm();
  if (n.is_zero()) throw std::domain_error("Complex: division by zero");
  BigFloat r = (re * o.re + im * o.im) / n;
  BigFloat i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(Complex a, const BigFloat& b) {
  a.re *= b;
  a.im *= b;
  return a;
}

BigFloat abs(const Complex& z) {
  BigFloat r = make_uninit(z.precision());
  mpfr_hypot(r.raw(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

BigFloat arg(const Complex& z) { return atan2(z.im, z.re); }

Complex log(const Complex& z) {
  if (z.is_zero()) throw std::domain_error("log of complex zero");
  return {log(abs(z)), arg(z)};
}

Complex exp(const Complex& z) {
  BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex pow(const Complex& z, long e) {
  if (e < 0) {
    Complex one(BigFloat(1L, z.precision()));
    return one / pow(z, -e);
  }
  Complex result(BigFloat(1L, z.precision()));
  Complex base = z;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  BigFloat r = abs(z);
  BigFloat a = sqrt((r + abs(z.re)) / 2);
  if (z.re.sign() >= 0) return {a, z.im / (a * 2)};
  BigFloat b = z.im.sign() < 0 ? -a : a;
  return {abs(z.im) / (a * 2), b};
}

}  // namespace logforms
