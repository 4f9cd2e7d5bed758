#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logforms/bigfloat.hpp"
#include "logforms/exact.hpp"

namespace logforms {

/// Dense univariate polynomial, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient vector.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }
  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = v;
    return Poly(std::move(c));
  }
  /// The linear polynomial a*z + b.
  static Poly linear(const T& a, const T& b) { return Poly(std::vector<T>{b, a}); }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  T coeff(long k) const { return (k < 0 || k > degree()) ? T(0) : c_[static_cast<std::size_t>(k)]; }
  const T& lead() const { return c_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_value(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const T& s) {
    Poly r = a;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Poly(std::move(d));
  }

  Poly pow(unsigned long e) const {
    Poly r = constant(T(1)), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return r;
  }

  /// Horner evaluation in an arbitrary value ring V that accepts conversion from T.
  template <class V, class Convert>
  V eval(const V& x, Convert convert) const {
    if (c_.empty()) return convert(T(0));
    V acc = convert(c_.back());
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
      acc = acc * x;
      acc = acc + convert(c_[k]);
    }
    return acc;
  }

  T operator()(const T& x) const {
    return eval<T>(x, [](const T& v) { return v; });
  }

  template <class U, class F>
  Poly<U> map(F f) const {
    std::vector<U> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(f(x));
    return Poly<U>(std::move(c));
  }

 private:
  static bool is_zero_value(const T& v) { return v == T(0); }
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Poly<Integer>;
using RatPolynomial = Poly<Rational>;
using GaussPolynomial = Poly<GaussianRational>;

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> rem = a.coeffs();
  long db = b.degree();
  long da = a.degree();
  if (da < db) return {Poly<T>(), a};
  std::vector<T> q(static_cast<std::size_t>(da - db + 1), T(0));
  T inv = T(1) / b.lead();
  for (long k = da; k >= db; --k) {
    T f = rem[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = f;
    if (f == T(0)) continue;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<T>(std::move(q)), Poly<T>(std::move(rem))};
}

/// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (T(1) / a.lead());
}

/// p / gcd(p, p'): same roots, all simple.
template <class T>
Poly<T> squarefree_part(const Poly<T>& p) {
  if (p.degree() < 1) return p;
  Poly<T> g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

RatPolynomial to_rational(const IntPolynomial& p);
GaussPolynomial to_gaussian(const RatPolynomial& p);
/// Clears denominators and removes content; sign normalised so the leading coefficient is positive.
IntPolynomial primitive_part(const RatPolynomial& p);

/// Product of (z - r) over the given roots.
RatPolynomial from_roots(const std::vector<Rational>& roots);

BigFloat eval(const RatPolynomial& p, const BigFloat& x);
BigFloat eval(const IntPolynomial& p, const BigFloat& x);
Complex eval(const GaussPolynomial& p, const Complex& z);
Complex eval(const RatPolynomial& p, const Complex& z);

std::string to_string(const IntPolynomial& p, const std::string& var = "z");
std::string to_string(const RatPolynomial& p, const std::string& var = "z");

}  // namespace logforms
