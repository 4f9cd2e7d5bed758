#pragma once

#include <vector>

#include "logforms/bigfloat.hpp"
#include "logforms/polynomial.hpp"

namespace logforms {

/// Isolating interval of one real root: exactly one root in (lo, hi], or lo == hi for an exact rational root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Number of distinct real roots of p in (lo, hi] by Sturm's theorem.
long sturm_count(const RatPolynomial& p, const Rational& lo, const Rational& hi);

/// Isolating intervals for the distinct real roots of p in the open interval (lo, hi), ascending.
std::vector<RootInterval> isolate_real_roots(const RatPolynomial& p, const Rational& lo, const Rational& hi);

/// Distinct real roots of p in (lo, hi), refined by bisection to the requested precision.
std::vector<BigFloat> real_roots(const RatPolynomial& p, const Rational& lo, const Rational& hi, Precision prec);

/// Cauchy bound: every complex root has modulus below this value.
Rational root_bound(const RatPolynomial& p);

struct ComplexRoots {
  std::vector<Complex> roots;       // distinct roots
  bool repeated = false;            // p had a multiple root
  BigFloat max_residual;            // max |p(root)| over the squarefree part
};

/// All distinct complex roots via Aberth iteration on the squarefree part, then Newton polish.
ComplexRoots complex_roots(const GaussPolynomial& p, Precision prec);

}  // namespace logforms
