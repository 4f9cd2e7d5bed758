#pragma once

#include <mpfr.h>

#include <string>

#include "logforms/exact.hpp"

namespace logforms {

/// Working precision in decimal digits.
struct Precision {
  long digits;
  constexpr explicit Precision(long d) : digits(d) {}
  friend constexpr bool operator==(Precision a, Precision b) { return a.digits == b.digits; }
  constexpr Precision operator+(long extra) const { return Precision(digits + extra); }
};

inline constexpr Precision kDefaultPrecision{60};

mpfr_prec_t bits_for(Precision p);

/// MPFR value that remembers the decimal precision it was created with.
/// Binary operations return the larger of the two operand precisions.
class BigFloat {
 public:
  BigFloat() : BigFloat(0L, kDefaultPrecision) {}
  BigFloat(long x, Precision p);
  BigFloat(int x, Precision p) : BigFloat(static_cast<long>(x), p) {}
  BigFloat(double x, Precision p);
  BigFloat(const Integer& x, Precision p);
  BigFloat(const Rational& x, Precision p);
  static BigFloat parse(const std::string& text, Precision p);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  Precision precision() const { return Precision(digits_); }
  /// Copy rounded (or extended) to another precision.
  BigFloat at(Precision p) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr raw() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  /// Base-10 exponent estimate, log10|x|; very negative for zero.
  double log10_abs() const;

  /// Significant-digit rendering, %g style.
  std::string to_string(int significant) const;
  std::string to_string() const { return to_string(static_cast<int>(digits_)); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);
  friend BigFloat operator+(const BigFloat& a, long b);
  friend BigFloat operator-(const BigFloat& a, long b);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !mpfr_equal_p(a.v_, b.v_); }

 private:
  explicit BigFloat(long digits_tag, bool);
  mpfr_t v_;
  long digits_;
  friend BigFloat make_uninit(Precision p);
};

BigFloat make_uninit(Precision p);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long e);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat floor(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat pi(Precision p);
/// log of an exact positive integer or rational, without overflow for huge values.
BigFloat log_of(const Integer& x, Precision p);
BigFloat log_of(const Rational& x, Precision p);

/// Number of leading decimal digits on which `value` agrees with `reference`:
/// -log10(|value - reference| / |reference|), capped at the working precision.
double agreeing_digits(const BigFloat& value, const BigFloat& reference);

/// Complex number over BigFloat.
struct Complex {
  BigFloat re;
  BigFloat im;

  Complex() = default;
  explicit Complex(Precision p) : re(0L, p), im(0L, p) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const BigFloat& r) : re(r), im(0L, r.precision()) {}
  Complex(const GaussianRational& z, Precision p) : re(z.re, p), im(z.im, p) {}

  Precision precision() const;
  Complex conj() const { return {re, -im}; }
  BigFloat norm() const { return re * re + im * im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::string to_string(int significant) const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(Complex a, const BigFloat& b);

BigFloat abs(const Complex& z);
BigFloat arg(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
Complex exp(const Complex& z);
Complex pow(const Complex& z, long e);
Complex sqrt(const Complex& z);

}  // namespace logforms
