#pragma once

#include <array>
#include <optional>
#include <vector>

#include "logforms/bigfloat.hpp"
#include "logforms/exact.hpp"

namespace logforms {

/// One constant piece [lo, hi) of a step function on [0, 1).
struct StepPiece {
  Rational lo;
  Rational hi;
  long value;
  friend bool operator==(const StepPiece& a, const StepPiece& b) {
    return a.lo == b.lo && a.hi == b.hi && a.value == b.value;
  }
};

/// 1-periodic integer step function, zero outside the listed pieces.
/// Pieces are sorted, disjoint, nonzero, and adjacent pieces carry different values.
struct StepFunction {
  std::vector<StepPiece> pieces;

  long at(const Rational& x) const;  // evaluated at x mod 1
  bool is_zero() const { return pieces.empty(); }
  /// Restriction to [lo, 1).
  StepFunction clipped_below(const Rational& lo) const;
  friend bool operator==(const StepFunction& a, const StepFunction& b) { return a.pieces == b.pieces; }
};

/// Denominator of m!(n0+n1-m)!/(n0! n1!), from exact p-adic valuations.
Integer phi_denominator(long m, long n0, long n1);

/// The product over p of p^{phi(p) + phi(p^2) + ...} with each phi clipped at zero separately.
/// It is always a multiple of phi_denominator and usually, not always, equal to it.
Integer phi_clipped_product(long m, long n0, long n1);

/// Large-prime part of phi_denominator: primes p with p > threshold (default sqrt(n1)),
/// each raised to its exact exponent in phi_denominator.
Integer phi_tilde(long m, long n0, long n1, std::optional<double> threshold = std::nullopt);

/// Same range of primes, exponent phi(p) = max(0, [n0/p] + [n1/p] - [m/p] - [(n0+n1-m)/p]).
Integer phi_tilde_first_order(long m, long n0, long n1, std::optional<double> threshold = std::nullopt);

/// x -> max{0, [n0 x] + [n1 x] - [m x] - [(n0+n1-m) x]} on [0, 1).
StepFunction phi_step_profile(long m_rate, long n0_rate, long n1_rate);

/// Direct evaluation of the bracket expression above at a single point.
long phi_bracket(long m_rate, long n0_rate, long n1_rate, const Rational& x);

/// varpi(x, y) = sum_j ([a_j x] - [y_j] - [a_j x - y_j]) for y_j in [0, 1).
long varpi(const std::array<long, 3>& alphas, const Rational& x, const std::array<Rational, 3>& y);

struct VarpiWitness {
  Rational x;                   // a point of the piece
  std::array<Rational, 3> y;    // admissible y attaining the minimum at x
  long value;
};

struct VarpiProfile {
  StepFunction profile;
  std::vector<VarpiWitness> witnesses;  // one per constant cell of [0, 1), including zero cells
};

/// Pointwise minimum over admissible y of varpi, with y0 + y1 + y2 = alpha x (mod 1).
/// alpha2 = 0 gives the single-point version (y2 pinned to 0).
VarpiProfile minimize_varpi(long alpha0, long alpha1, long alpha2, long alpha);

/// Minimum at a single rational x, with an admissible witness.
VarpiWitness varpi_minimum_at(const std::array<long, 3>& alphas, long alpha, const Rational& x);

/// Digamma at a positive rational: recurrence shift, then the asymptotic series with exact Bernoulli numbers.
BigFloat digamma(const Rational& x, Precision p);

/// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(long n);

/// Integral of the profile against d psi: sum of value * (psi(hi) - psi(lo)).
BigFloat valuation_asymptotic(const StepFunction& profile, Precision p);

}  // namespace logforms
