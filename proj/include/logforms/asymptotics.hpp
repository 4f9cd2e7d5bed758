#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logforms/bigfloat.hpp"
#include "logforms/exact.hpp"
#include "logforms/polynomial.hpp"

namespace logforms {

struct ExponentFactor {
  GaussianRational root;
  Rational exponent;
};

/// f(z) = log|scale| + sum_j beta_j log|z - r_j| - z_exponent log|z|.
struct ExponentProduct {
  std::vector<ExponentFactor> factors;
  Rational z_exponent = 0;
  Rational scale = 1;

  /// Factors merged by root, with the z-denominator folded in and zero exponents dropped.
  std::vector<ExponentFactor> merged() const;
  ExponentProduct scaled(const Rational& c) const;  // every exponent times c
  /// Numerator of f'(z) = sum beta_j / (z - r_j), as a polynomial.
  GaussPolynomial derivative_numerator() const;
  BigFloat value(const Complex& z) const;
  BigFloat value(const BigFloat& x) const;
  Complex derivative(const Complex& z) const;
};

class AsymptoticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntervalMax {
  BigFloat value;                    // log of the supremum
  std::optional<BigFloat> argmax;    // interior critical point, when the sup is attained there
};

/// sup of f over the open interval (lo, hi), from the real roots of the derivative numerator.
/// All roots must be real. Throws AsymptoticsError when f is unbounded there.
IntervalMax log_max_on_interval(const ExponentProduct& f, const Rational& lo, const Rational& hi, Precision p);

/// u(y) = slope * y + offset.
struct Affine {
  long slope;
  Rational offset;
};

/// log C(top*n, bottom*n) / n -> T log T - B log B - (T - B) log(T - B) with T, B affine in y = k/n.
struct BinomialFactor {
  Affine top;
  Affine bottom;
};

/// sum of binomial entropies plus y log|base| (for a geometric weight base^k).
struct BinomialPattern {
  std::vector<BinomialFactor> factors;
  Rational base = 1;

  BigFloat value(const BigFloat& y) const;
  /// Critical points of value() solve a polynomial equation with rational coefficients.
  RatPolynomial critical_polynomial() const;
};

/// max of the pattern over [lo, hi], the range where all binomials are defined.
IntervalMax binomial_growth_max(const BinomialPattern& pattern, const Rational& lo, const Rational& hi,
                                Precision p);

struct Saddle {
  Complex point;
  BigFloat value;      // Re f at the point
  BigFloat residual;   // |f'(point)|
};

struct SaddleSet {
  std::vector<Saddle> saddles;
  bool degenerate = false;   // the derivative numerator had a repeated root
  GaussPolynomial numerator;
};

/// All solutions of f'(z) = 0 with Re f computed from moduli only.
SaddleSet saddle_points(const ExponentProduct& f, Precision p);

/// Named contribution to the decay constant C0 and the growth constant C1.
struct BoundTerm {
  std::string name;
  BigFloat to_c0;
  BigFloat to_c1;
};

struct BoundReport {
  BigFloat C0;
  BigFloat C1;
  std::optional<BigFloat> C0_prime;
  BigFloat mu;
  std::vector<BoundTerm> terms;
};

class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// mu = 1 + C1/C0 from the ledger. With C0_prime (two forms sharing the coefficient b_n) also
/// requires C0 < C0_prime.
BoundReport assemble_bound(std::vector<BoundTerm> terms, std::optional<BigFloat> C0_prime = std::nullopt);

}  // namespace logforms
