#include "logforms/gauss_forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "logforms/quadrature.hpp"
#include "logforms/valuation.hpp"

namespace logforms {

namespace {

void check_common(long m, long n0, long n1, const Rational& a) {
  if (m < 0 || n0 < 0 || n1 < 0) throw std::invalid_argument("HGParams: exponents must be non-negative");
  if (sgn(a) <= 0 || a > 2) throw std::invalid_argument("HGParams: a must lie in (0, 2]");
  if (a == 1) throw std::invalid_argument("HGParams: a = 1 carries no information (log 1 = 0)");
}

}  // namespace

HGParams HGParams::make(long m, long n0, long n1, Rational a) {
  check_common(m, n0, n1, a);
  if (std::max(m, n0) > n1) throw std::invalid_argument("HGParams: need max{m, n0} <= n1");
  return HGParams{m, n0, n1, std::move(a)};
}

HGParams HGParams::relaxed(long m, long n0, long n1, Rational a) {
  check_common(m, n0, n1, a);
  if (m > n1) throw std::invalid_argument("HGParams: need m <= n1");
  return HGParams{m, n0, n1, std::move(a)};
}

bool HGParams::strictly_valid() const { return std::max(m, n0) <= n1; }

std::string HGParams::to_string() const {
  std::ostringstream s;
  s << "(" << m << "," << n0 << "," << n1 << ";" << a.get_str() << ")";
  return s.str();
}

PartialFractionExpansion partial_fractions(const HGParams& params) {
  PartialFractionExpansion out;
  const long m = params.m, n0 = params.n0, n1 = params.n1;
  for (long k = params.n0_star(); k <= n0 + n1; ++k) {
    Integer A = binomial(k, m) * binomial(n1, k - n0);
    if ((m + n0 - k) % 2 != 0) A = -A;
    out.terms.push_back({k, Rational(A)});
  }
  return out;
}

LogLinearForm linear_form(const HGParams& params) {
  if (params.a == 1) throw std::invalid_argument("linear_form: a = 1 rejected");
  const Rational c = 1 - params.a;
  const long mstar = params.m_star();
  auto pf = partial_fractions(params);

  // S(K) = sum_{l=1}^{K} c^l / l, extended incrementally as k grows.
  Rational S = 0, cpow = 1;
  long K = 0;
  Rational log_coeff = 0, const_coeff = 0;
  for (const auto& term : pf.terms) {
    Rational weight = term.A * pow(c, -(term.k + 1));
    log_coeff -= weight;
    long upto = term.k - mstar;
    while (K < upto) {
      ++K;
      cpow *= c;
      S += cpow / K;
    }
    if (upto >= 1) const_coeff -= weight * S;
  }
  return LogLinearForm{log_coeff, const_coeff, params.a};
}

BigFloat integral_value(const HGParams& params, Precision precision) {
  QuadOptions opts;
  opts.target = precision;
  const Precision w = opts.target + opts.guard_digits;
  const BigFloat c(Rational(1 - params.a), w);
  const BigFloat one(1L, w);
  auto f = [&](const BigFloat& x) {
    BigFloat v = pow(x, params.n0) * pow(one - x, params.n1);
    return v / pow(one - c * x, params.m + 1);
  };
  auto r = integrate(f, BigFloat(0L, w), one, opts);
  return r.value.at(precision);
}

InclusionReport inclusion_check(const HGParams& params, bool improved) {
  InclusionReport report;
  report.improved = improved;
  const Rational c = 1 - params.a;
  const Integer d = params.a.get_den();
  const long N = params.n0 + params.n1 - params.m_star();
  Rational scale = pow(c, params.n0 + params.n1 + 1) * Rational(pow(d, static_cast<unsigned long>(N))) *
                   Rational(lcm_upto(static_cast<unsigned long>(N)));
  if (improved) scale /= Rational(phi_denominator(params.m, params.n0, params.n1));
  report.scale = scale;
  auto form = linear_form(params);
  Rational B = form.log_coeff * scale, A = form.const_coeff * scale;
  report.integral = B.get_den() == 1 && A.get_den() == 1;
  if (report.integral) {
    report.log_coeff = B.get_num();
    report.const_coeff = A.get_num();
    return report;
  }
  Integer bad = B.get_den() != 1 ? Integer(B.get_den()) : Integer(A.get_den());
  std::uint64_t limit = static_cast<std::uint64_t>(params.n0 + params.n1 + 2) + 1000000;
  report.offending_prime = smallest_prime_factor(bad, limit);
  report.detail = "non-integral coefficient for " + params.to_string() + ", residual denominator " + bad.get_str();
  return report;
}

bool symmetry_check(const HGParams& params) {
  if (!params.strictly_valid()) throw std::invalid_argument("symmetry_check: tuple must satisfy max{m,n0} <= n1");
  HGParams swapped = HGParams::relaxed(params.n0, params.m, params.n0 + params.n1 - params.m, params.a);
  auto lhs = linear_form(params);
  auto rhs = linear_form(swapped);
  Rational left_scale = Rational(1) / Rational(factorial(static_cast<unsigned long>(params.n0)) *
                                               factorial(static_cast<unsigned long>(params.n1)));
  Rational right_scale = Rational(1) / Rational(factorial(static_cast<unsigned long>(params.m)) *
                                                factorial(static_cast<unsigned long>(swapped.n1)));
  return lhs.log_coeff * left_scale == rhs.log_coeff * right_scale &&
         lhs.const_coeff * left_scale == rhs.const_coeff * right_scale;
}

}  // namespace logforms
