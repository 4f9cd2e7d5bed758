#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logforms/asymptotics.hpp"
#include "logforms/bigfloat.hpp"
#include "logforms/exact.hpp"
#include "logforms/linear_form.hpp"
#include "logforms/polynomial.hpp"

namespace logforms {

/// D_n int_0^1 G(x(1-x)/(1+x)) dx/(1+x) for G in Z[y] of degree <= n.
struct GnForm {
  LogLinearForm form;   // the integral itself, target 2
  Integer scale;        // D_n
  bool integral = false;
  Integer log_coeff;    // scaled coefficients, valid when integral
  Integer const_coeff;
};

GnForm gn_linear_form(const IntPolynomial& G, long n);

/// Sorted, disjoint closed intervals with rational endpoints.
struct SegmentUnion {
  std::vector<std::pair<Rational, Rational>> parts;

  static SegmentUnion make(std::vector<std::pair<Rational, Rational>> parts);
  static SegmentUnion single(const Rational& lo, const Rational& hi) { return make({{lo, hi}}); }
  bool contains(const Rational& x) const;
};

/// [0, (sqrt2 - 1)^2], the right end rounded up at 10^-40.
SegmentUnion log2_saddle_segment();

/// max |G| over the union; interior maxima from the real roots of G'.
BigFloat sup_norm(const IntPolynomial& G, const SegmentUnion& seg, Precision p);

struct GStarResult {
  IntPolynomial best;
  BigFloat sup;          // max |best| on the segment
  BigFloat sup_root;     // sup^(1/degree)
  std::size_t box_size = 0;   // polynomials in the coefficient box
  std::size_t exact_checks = 0;
};

/// Exhaustive scan of 1 <= deg G <= degree, |coefficients| <= coeff_bound, minimizing
/// max_seg |G|^(1/degree). Candidates are discarded only when a sampled value already exceeds
/// the incumbent; on [0, s] the coefficient box is also cut by Markov's bound. Ties go to the
/// lexicographically smallest coefficient vector.
GStarResult search_gstar(int degree, long coeff_bound, const SegmentUnion& seg, Precision p = Precision(30),
                         unsigned threads = 0);

/// H(z) = sum_{nu<=n} B_nu Delta^(n-nu) z^nu + sum_{nu>n} B_nu z^nu.
struct HnForm {
  std::vector<Integer> B;
  Integer delta;
  long n = 0;

  IntPolynomial reconstruct() const;
};

class HnFormError : public std::invalid_argument {
 public:
  HnFormError(const std::string& what, long nu) : std::invalid_argument(what), nu(nu) {}
  long nu;   // first coefficient index violating the representation, -1 for a degree failure
};

HnForm hn_validate(const IntPolynomial& H, long n, const Integer& delta);

struct HnForms {
  Integer d;                          // common denominator of the points
  std::vector<LogLinearForm> forms;   // I(n; a_j) = -B_n log a_j + const_j
  Integer scale;                      // D_n
  bool integral = false;              // D_n * every coefficient is an integer
};

/// Exact forms of I(n;a) = (1-a) int_0^1 H(d - d(1-a)x) / (d^n (1-(1-a)x)^(n+1)) dx.
/// Requires a_j = c_j/d > 0, a_j != 1, with c_j and d dividing Delta.
HnForms hn_simultaneous_forms(const HnForm& form, const std::vector<Rational>& points);

/// Direct quadrature of the same integral.
BigFloat hn_integral_value(const IntPolynomial& H, long n, const Integer& d, const Rational& a, Precision p);

/// One factor f(t)^[beta n] of the unscaled polynomial K_n(t).
struct RhinFactor {
  RatPolynomial f;
  Rational beta;
};

/// K_n(t) = constant * base^n * prod f_j(t)^[beta_j n]; the polynomial in the scaled variable is H_n(z) = K_n(z/d).
struct RhinFamily {
  std::vector<Rational> points;
  Integer constant = 1;
  Integer base = 1;
  std::vector<RhinFactor> factors;

  Integer d() const;       // lcm of the point denominators
  Integer delta() const;   // lcm of d and the numerators
  std::vector<long> exponents(long n) const;   // exact floors
  IntPolynomial at(long n) const;              // throws std::domain_error when not integral

  /// The log 3 family: points 2/3, 4/3, six factors.
  static RhinFamily log3();
  /// (t-1)^n (t-2)^n, point 2.
  static RhinFamily simple_log2();
};

/// Sum beta_j log|f_j(t)| - log|t| and its pieces.
struct RhinEnvelope {
  const RhinFamily* family;

  BigFloat value(const BigFloat& t) const;
  BigFloat value(const Complex& t) const;
  /// t * E'(t) * prod f_j as a polynomial.
  RatPolynomial critical_numerator() const;
};

struct SegmentEnvelope {
  Rational a;
  BigFloat value;                  // sup of the envelope on [1, a]
  std::optional<BigFloat> argmax;
};

struct RhinBound {
  BoundReport report;
  std::vector<SegmentEnvelope> segments;   // slowest decay first
  BigFloat cauchy_rate;                    // min over r of max over |t| = r
  BigFloat cauchy_radius;
  std::optional<Saddle> saddle;            // the saddle matching the Cauchy estimate, if one does
  BigFloat coefficient_rate;               // the value used for C1
};

RhinBound rhin_bound(const RhinFamily& family, Precision precision);

}  // namespace logforms
