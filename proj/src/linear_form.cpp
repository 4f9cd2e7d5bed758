#include "logforms/linear_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logforms {

namespace {

double log10_size(const Rational& q) {
  if (sgn(q) == 0) return -1e300;
  return static_cast<double>(mpz_sizeinbase(q.get_num_mpz_t(), 10)) -
         static_cast<double>(mpz_sizeinbase(q.get_den_mpz_t(), 10)) + 1;
}

double log10_size(const GaussianRational& z) { return std::max(log10_size(z.re), log10_size(z.im)); }

constexpr long kMaxWorkingDigits = 200000;

// Evaluates at increasing working precision until the result keeps `digits` after cancellation.
template <class F, class V, class Eval, class Size>
V adaptive(const LinearForm<F>& form, Precision digits, Eval eval, Size size) {
  double scale = std::max(log10_size(form.log_coeff) + 1, log10_size(form.const_coeff));
  long work = digits.digits + 20;
  for (int attempt = 0; attempt < 64; ++attempt) {
    V v = eval(Precision(work));
    double mag = size(v);
    double lost = std::max(0.0, scale - mag);
    if (static_cast<double>(work) - lost >= static_cast<double>(digits.digits) + 5) return v;
    long next = static_cast<long>(std::ceil(lost)) + digits.digits + 20;
    work = std::max(next, work * 2);
    if (work > kMaxWorkingDigits) break;
  }
  throw std::runtime_error("form_value: cancellation exceeds the working precision cap");
}

}  // namespace

Complex log_of(const GaussianRational& z, Precision p) {
  if (z.is_zero()) throw std::domain_error("log of zero");
  Precision w = p + 5;
  BigFloat half_log_norm = log_of(z.norm(), w) / 2;
  BigFloat angle = atan2(BigFloat(z.im, w), BigFloat(z.re, w));
  return {half_log_norm.at(p), angle.at(p)};
}

BigFloat form_value(const LogLinearForm& form, Precision digits) {
  if (sgn(form.target) <= 0) throw std::domain_error("form_value: target must be positive");
  auto eval = [&](Precision w) {
    return BigFloat(form.log_coeff, w) * log_of(form.target, w) + BigFloat(form.const_coeff, w);
  };
  auto size = [](const BigFloat& v) { return v.log10_abs(); };
  return adaptive<Rational, BigFloat>(form, digits, eval, size).at(digits);
}

Complex form_value(const GaussianLogForm& form, Precision digits) {
  auto eval = [&](Precision w) {
    return Complex(form.log_coeff, w) * log_of(form.target, w) + Complex(form.const_coeff, w);
  };
  auto size = [](const Complex& v) { return abs(v).log10_abs(); };
  Complex v = adaptive<GaussianRational, Complex>(form, digits, eval, size);
  return {v.re.at(digits), v.im.at(digits)};
}

}  // namespace logforms
