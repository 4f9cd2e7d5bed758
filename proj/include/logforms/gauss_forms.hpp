#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logforms/bigfloat.hpp"
#include "logforms/exact.hpp"
#include "logforms/linear_form.hpp"

namespace logforms {

/// Parameters of I(m, n0, n1; a) = int_0^1 x^n0 (1-x)^n1 / (1 - (1-a) x)^(m+1) dx.
struct HGParams {
  long m = 0;
  long n0 = 0;
  long n1 = 0;
  Rational a = 2;

  /// Standing condition max{m, n0} <= n1, a in (0, 2], a != 1.
  static HGParams make(long m, long n0, long n1, Rational a);
  /// Only m <= n1 (the partial fraction expansion stays proper), same range for a.
  static HGParams relaxed(long m, long n0, long n1, Rational a);

  long m_star() const { return m < n0 ? m : n0; }
  long n0_star() const { return m < n0 ? n0 : m; }
  bool strictly_valid() const;
  std::string to_string() const;
};

struct PartialFractionTerm {
  long k;
  Rational A;  // always an integer here
};

/// R(t) = sum_k A_k / (t + k + 1), k = n0* .. n0 + n1.
struct PartialFractionExpansion {
  std::vector<PartialFractionTerm> terms;
};

PartialFractionExpansion partial_fractions(const HGParams& params);

/// Exact form with I = log_coeff * log a + const_coeff.
LogLinearForm linear_form(const HGParams& params);

/// Quadrature of the defining integral (independent of linear_form).
BigFloat integral_value(const HGParams& params, Precision precision);

struct InclusionReport {
  bool integral = false;
  bool improved = false;
  Rational scale;                 // the factor multiplying the form
  Integer log_coeff;              // scaled coefficients, valid when integral
  Integer const_coeff;
  std::uint64_t offending_prime = 0;
  std::string detail;
};

/// Multiplies the form by (1-a)^(n0+n1+1) d^(n0+n1-m*) D_(n0+n1-m*), divided by Phi(m, n0, n1)
/// when `improved`, and checks that both coefficients are integers.
InclusionReport inclusion_check(const HGParams& params, bool improved);

/// I(m,n0,n1)/(n0! n1!) == I(n0,m,n0+n1-m)/(m! (n0+n1-m)!) as exact forms.
bool symmetry_check(const HGParams& params);

}  // namespace logforms
