#pragma once

#include <optional>
#include <stdexcept>

#include "logforms/bigfloat.hpp"
#include "logforms/exact.hpp"

namespace logforms {

class DivergentSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (a)_n = a (a+1) ... (a+n-1), exactly.
Rational pochhammer(const Rational& a, long n);

struct SeriesResult {
  Complex value;
  long terms = 0;
  BigFloat tail_bound;   // bound on the omitted tail; zero for a terminating series
};

/// Plain partial summation of 2F1(A, B; C; z), stopped once the certified tail drops
/// below the target. Needs |z| < 1 unless A or B is a non-positive integer.
SeriesResult gauss_2f1_series(const Rational& A, const Rational& B, const Rational& C, const Complex& z, Precision p);

/// 2F1 with Euler's transform (1-z)^(-A) 2F1(A, C-B; C; z/(z-1)) applied when that argument is smaller.
/// Covers |z| <= 1, z != 1.
Complex gauss_2f1(const Rational& A, const Rational& B, const Rational& C, const Complex& z, Precision p);
BigFloat gauss_2f1(const Rational& A, const Rational& B, const Rational& C, const Rational& z, Precision p);

/// Right-hand side of Euler's transform, always evaluated through the transformed argument.
Complex gauss_2f1_euler(const Rational& A, const Rational& B, const Rational& C, const Complex& z, Precision p);

/// Appell F1(A; B, B'; C; X, Y). Diagonal-by-diagonal double series for |X|, |Y| < 1; when B'
/// (or B) is a non-positive integer the finite direction is summed outright and each slice is a 2F1.
Complex appell_f1(const Rational& A, const Rational& B, const Rational& Bp, const Rational& C, const Complex& X,
                  const Complex& Y, Precision p);

/// int_0^1 x^n0 (1-x)^n1 / (1 - (1-a)x)^(m+1) dx = n0! n1! / (n0+n1+1)! * 2F1(m+1, n0+1; n0+n1+2; 1-a).
BigFloat euler_integral_2f1(long m, long n0, long n1, const Rational& a, Precision p);

/// int_1^a (z-1)^n0 (z-a)^n1 (z-b)^n2 z^-(m+1) dz through the F1 representation
/// (-1)^(n0+1) (1-a)^(n0+n1+1) (1-b)^n2 n0! n1!/(n0+n1+1)! F1(n0+1; m+1, -n2; n0+n1+2; 1-a, (1-a)/(1-b)).
Complex two_point_integral_f1(long m, long n0, long n1, long n2, const GaussianRational& a, const GaussianRational& b,
                              Precision p);

enum class RamanujanSeries { kSeries39, kSeries44 };

/// Partial sum of the first N terms: 4/pi for series 39, 1/(2 pi sqrt 2) for series 44.
BigFloat ramanujan_pi(RamanujanSeries id, long N, Precision p);
/// The same partial sum, exactly.
Rational ramanujan_partial_sum(RamanujanSeries id, long N);

}  // namespace logforms
