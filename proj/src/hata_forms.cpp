#include "logforms/hata_forms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "logforms/polynomial.hpp"
#include "logforms/quadrature.hpp"
#include "logforms/valuation.hpp"

namespace logforms {

namespace {

const GaussianRational kOne(1);

GaussPolynomial integrand_numerator(const HataConfig& c) {
  GaussPolynomial P = GaussPolynomial::constant(kOne);
  auto roots = c.roots();
  for (std::size_t j = 0; j < roots.size(); ++j) {
    GaussPolynomial lin = GaussPolynomial::linear(kOne, GaussianRational(0) - roots[j]);
    P = P * lin.pow(static_cast<unsigned long>(c.exponents[j]));
  }
  return P;
}

void check_budget(const GaussPolynomial& P, std::size_t max_bits) {
  for (const auto& c : P.coeffs()) {
    for (const Rational* q : {&c.re, &c.im}) {
      if (mpz_sizeinbase(q->get_num_mpz_t(), 2) > max_bits || mpz_sizeinbase(q->get_den_mpz_t(), 2) > max_bits)
        throw std::length_error("expand_form: coefficient exceeds the configured size budget");
    }
  }
}

// int_1^t z^(k-m-1) dz summed against the coefficients of P.
GaussianLogForm form_from_numerator(const GaussPolynomial& P, long m, const GaussianRational& t) {
  GaussianLogForm form{GaussianRational(0), GaussianRational(0), t};
  const auto& c = P.coeffs();
  const long top = P.degree();
  // powers t^s for s = -m .. top - m
  std::vector<GaussianRational> tp(static_cast<std::size_t>(top + 1));
  GaussianRational tinv = kOne / t;
  GaussianRational acc = kOne;
  for (long s = 0; s <= top - m; ++s) {
    if (s >= -m) tp[static_cast<std::size_t>(s + m)] = acc;
    acc *= t;
  }
  acc = tinv;
  for (long s = -1; s >= -m; --s) {
    if (s <= top - m) tp[static_cast<std::size_t>(s + m)] = acc;
    acc *= tinv;
  }
  for (long k = 0; k <= top; ++k) {
    const GaussianRational& ck = c[static_cast<std::size_t>(k)];
    if (ck.is_zero()) continue;
    long s = k - m;
    if (s == 0) {
      form.log_coeff += ck;
    } else {
      form.const_coeff += ck * (tp[static_cast<std::size_t>(k)] - kOne) / GaussianRational(Rational(s));
    }
  }
  return form;
}

// Distance squared from 0 to the segment [u, v].
Rational dist2_to_origin(const GaussianRational& u, const GaussianRational& v) {
  GaussianRational d = v - u;
  Rational len2 = d.norm();
  if (sgn(len2) == 0) return u.norm();
  Rational t = -(u.re * d.re + u.im * d.im) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  GaussianRational p = u + d * GaussianRational(t);
  return p.norm();
}

void rational_prime_factors(Integer x, std::vector<std::uint64_t>& out) {
  x = abs(x);
  for (std::uint64_t p = 2; x > 1; ++p) {
    if (Integer(p) * p > x) {
      if (!x.fits_ulong_p()) throw std::invalid_argument("gaussian_primes_of: norm too large to factor");
      out.push_back(x.get_ui());
      break;
    }
    if (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(x.get_mpz_t(), p)) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    }
  }
}

}  // namespace

HataConfig HataConfig::make(std::vector<GaussianRational> points, std::vector<long> exponents, long m) {
  if (points.empty() || points.size() > 2) throw std::invalid_argument("HataConfig: k must be 1 or 2");
  if (exponents.size() != points.size() + 1) throw std::invalid_argument("HataConfig: need k + 1 exponents");
  for (const auto& a : points) {
    if (a.is_zero() || a == kOne) throw std::invalid_argument("HataConfig: points must differ from 0 and 1");
  }
  if (points.size() == 2 && points[0] == points[1]) throw std::invalid_argument("HataConfig: points must be distinct");
  for (long e : exponents) {
    if (e < 0) throw std::invalid_argument("HataConfig: exponents must be non-negative");
  }
  if (m < 0) throw std::invalid_argument("HataConfig: m must be non-negative");
  return HataConfig{std::move(points), std::move(exponents), m};
}

std::vector<GaussianRational> HataConfig::roots() const {
  std::vector<GaussianRational> r{kOne};
  r.insert(r.end(), points.begin(), points.end());
  return r;
}

bool HataConfig::is_target(const GaussianRational& t) const {
  return std::find(points.begin(), points.end(), t) != points.end();
}

std::string HataConfig::to_string() const {
  std::ostringstream s;
  s << "points (";
  for (std::size_t j = 0; j < points.size(); ++j) s << (j ? ", " : "") << logforms::to_string(points[j]);
  s << ") exponents (";
  for (std::size_t j = 0; j < exponents.size(); ++j) s << (j ? ", " : "") << exponents[j];
  s << ") m " << m;
  return s.str();
}

GaussianLogForm expand_form(const HataConfig& config, const GaussianRational& target, std::size_t max_bits) {
  if (!config.is_target(target)) throw std::invalid_argument("expand_form: target must be one of the points");
  GaussPolynomial P = integrand_numerator(config);
  check_budget(P, max_bits);
  return form_from_numerator(P, config.m, target);
}

SimultaneousForms simultaneous_forms(const HataConfig& config) {
  GaussPolynomial P = integrand_numerator(config);
  check_budget(P, kDefaultCoefficientBits);
  SimultaneousForms out;
  for (std::size_t j = 0; j < config.points.size(); ++j) {
    auto f = form_from_numerator(P, config.m, config.points[j]);
    if (j == 0) out.log_coeff = f.log_coeff;
    out.const_coeffs.push_back(f.const_coeff);
  }
  return out;
}

Complex contour_integral(const HataConfig& config, const GaussianRational& target, Precision precision,
                         std::optional<std::vector<GaussianRational>> path) {
  std::vector<GaussianRational> verts;
  if (path) {
    verts = *path;
    if (verts.size() < 2 || !(verts.front() == kOne) || !(verts.back() == target))
      throw std::invalid_argument("contour_integral: path must run from 1 to the target");
  } else {
    verts = {kOne, target};
    if (dist2_to_origin(kOne, target) < Rational(1, 1000000)) verts = {kOne, GaussianRational(Rational(1), Rational(1, 2)), target};
  }
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    if (sgn(dist2_to_origin(verts[i], verts[i + 1])) == 0) throw std::invalid_argument("contour_integral: path through 0");
  }
  QuadOptions opts;
  opts.target = precision;
  const Precision w = precision + opts.guard_digits;
  auto roots = config.roots();
  std::vector<Complex> croots;
  for (const auto& r : roots) croots.emplace_back(r, w);
  auto f = [&](const Complex& z) {
    Complex v(BigFloat(1L, w), BigFloat(0L, w));
    for (std::size_t j = 0; j < croots.size(); ++j) {
      if (config.exponents[j] > 0) v *= pow(z - croots[j], config.exponents[j]);
    }
    return v / pow(z, config.m + 1);
  };
  std::vector<Complex> cv;
  for (const auto& v : verts) cv.emplace_back(v, w);
  Complex r = integrate_path(f, cv, opts).value;
  return {r.re.at(precision), r.im.at(precision)};
}

long gaussian_valuation(const GaussianRational& z, const GaussianRational& prime) {
  if (z.is_zero()) throw std::domain_error("gaussian_valuation: zero");
  Integer D = z.denominator();
  GaussianRational w = z * GaussianRational(Rational(D));
  auto count = [&prime](GaussianRational x) {
    long v = 0;
    for (;;) {
      GaussianRational q = x / prime;
      if (!q.is_gaussian_integer()) return v;
      x = q;
      ++v;
    }
  };
  return count(w) - count(GaussianRational(Rational(D)));
}

double GaussianPrime::log_abs() const { return 0.5 * std::log(prime.norm().get_d()); }

std::vector<GaussianPrime> gaussian_primes_of(const std::vector<GaussianRational>& values) {
  std::vector<std::uint64_t> ps;
  for (const auto& v : values) {
    if (v.is_zero()) continue;
    Rational N = v.norm();
    rational_prime_factors(N.get_num(), ps);
    rational_prime_factors(N.get_den(), ps);
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::vector<GaussianPrime> out;
  for (std::uint64_t p : ps) {
    if (p == 2) {
      out.push_back({GaussianRational(Rational(1), Rational(1)), 2});
    } else if (p % 4 == 3) {
      out.push_back({GaussianRational(Rational(static_cast<long>(p))), p});
    } else {
      for (std::uint64_t x = 1; x * x < p; ++x) {
        std::uint64_t y2 = p - x * x;
        auto y = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(y2))));
        if (y * y == y2 && x > y) {
          Rational X(static_cast<long>(x)), Y(static_cast<long>(y));
          out.push_back({GaussianRational(X, Y), p});
          out.push_back({GaussianRational(X, -Y), p});
          break;
        }
      }
    }
  }
  return out;
}

DenominatorWitness denominator_witness(const HataConfig& config, const GaussianRational& target) {
  const GaussianRational two(2), opi(Rational(1), Rational(1)), omi(Rational(1), Rational(-1)), unit_i = GaussianRational::i();
  if (config.k() != 2 || !(config.points[0] == two) || !(config.points[1] == opi))
    throw std::invalid_argument("denominator_witness: needs a1 = 2, a2 = 1+i");
  const bool t1 = target == kOne, t2 = target == two, t3 = target == opi;
  if (!t1 && !t2 && !t3) throw std::invalid_argument("denominator_witness: target must be 1, 2 or 1+i");
  const long n0 = config.exponents[0], n1 = config.exponents[1], n2 = config.exponents[2], m = config.m;
  const long half = n2 / 2, odd = n2 % 2;

  DenominatorWitness w;
  std::vector<std::string> fails;
  if (n1 + half - m < 0) fails.push_back("n1 + [n2/2] - m >= 0 fails (" + std::to_string(n1 + half - m) + ")");
  if (n1 + n2 - m < 0) fails.push_back("n1 + n2 - m >= 0 fails (" + std::to_string(n1 + n2 - m) + ")");
  w.proviso_ok = fails.empty();
  for (const auto& f : fails) w.failure += (w.failure.empty() ? "" : "; ") + f;

  // power tables with exponents in [-R, R]
  const long R = 2 * (n0 + n1 + n2 + m) + 4;
  auto table = [R](const GaussianRational& b) {
    std::vector<GaussianRational> t(static_cast<std::size_t>(2 * R + 1));
    t[static_cast<std::size_t>(R)] = kOne;
    GaussianRational inv = kOne / b;
    for (long e = 1; e <= R; ++e) {
      t[static_cast<std::size_t>(R + e)] = t[static_cast<std::size_t>(R + e - 1)] * b;
      t[static_cast<std::size_t>(R - e)] = t[static_cast<std::size_t>(R - e + 1)] * inv;
    }
    return t;
  };
  auto P2 = table(two), Ppi = table(opi), Pmi = table(omi), Pt = table(target);
  auto at = [R](const std::vector<GaussianRational>& t, long e) -> const GaussianRational& {
    return t[static_cast<std::size_t>(R + e)];
  };
  GaussianRational ipow = pow(unit_i, half);

  for (long l0 = 0; l0 <= n0; ++l0) {
    for (long l1 = 0; l1 <= n1; ++l1) {
      for (long l2 = 0; l2 <= n2; ++l2) {
        const long s = l0 + l1 + l2 - m;
        GaussianRational raw = at(P2, n1 - l1) * at(Ppi, n2 - l2) * at(Pt, s);
        GaussianRational grouped;
        long v;   // (1+i)-adic valuation read off the regrouped product
        if (t1) {
          grouped = at(P2, n1 - l1) * at(Ppi, n2 - l2);
          v = 2 * (n1 - l1) + (n2 - l2);
        } else if (t2) {
          grouped = at(P2, n1 + half - m + l0) * ipow * at(Ppi, odd) * at(Pmi, l2);
          v = 2 * (n1 + half - m + l0) + odd + l2;
        } else {
          grouped = at(Ppi, n1 + n2 - m + l0) * at(Pmi, n1 - l1);
          v = (n1 + n2 - m + l0) + (n1 - l1);
        }
        ++w.tuples;
        if (!(raw == grouped)) w.identities_hold = false;
        if (!raw.is_gaussian_integer()) {
          w.all_integral = false;
          w.scaling_exponent = std::max(w.scaling_exponent, -gaussian_valuation(raw, opi));
        }
        w.predicted_exponent = std::max(w.predicted_exponent, -v);
      }
    }
  }
  return w;
}

HataConfig HataFamily::at(long n) const {
  std::vector<long> e;
  for (long a : alphas) e.push_back(a * n);
  return HataConfig::make(points, e, alpha * n);
}

ExponentProduct HataFamily::exponent_product() const {
  ExponentProduct f;
  f.factors.push_back({kOne, Rational(alphas[0])});
  for (std::size_t j = 0; j < points.size(); ++j) f.factors.push_back({points[j], Rational(alphas[j + 1])});
  f.z_exponent = alpha;
  return f;
}

namespace {

struct Sample {
  std::vector<double> log_abs;   // per form name index
  double log_coeff = 0;
};

double log_abs_double(const Complex& z) {
  BigFloat a = abs(z);
  return log(a).to_double();
}

Sample sample_forms(const HataFamily& fam, long n) {
  HataConfig cfg = fam.at(n);
  SimultaneousForms sf = simultaneous_forms(cfg);
  Precision wp(40 + 2 * n);
  std::vector<Complex> J;
  for (std::size_t j = 0; j < cfg.points.size(); ++j)
    J.push_back(form_value(GaussianLogForm{sf.log_coeff, sf.const_coeffs[j], cfg.points[j]}, wp));
  Sample s;
  for (const auto& v : J) s.log_abs.push_back(log_abs_double(v));
  if (J.size() == 2) s.log_abs.push_back(log_abs_double(J[1] - J[0]));
  Complex B(sf.log_coeff, wp);
  s.log_coeff = log_abs_double(B);
  return s;
}

std::size_t nearest_saddle(const SaddleSet& s, double rate) {
  std::size_t best = 0;
  double gap = 1e300;
  for (std::size_t i = 0; i < s.saddles.size(); ++i) {
    double g = std::fabs(s.saddles[i].value.to_double() - rate);
    if (g < gap) {
      gap = g;
      best = i;
    }
  }
  return best;
}

}  // namespace

HataBound hata_bound(const HataFamily& family, Precision precision, long sample_n) {
  const std::size_t k = family.points.size();
  if (family.alphas.size() != k + 1) throw std::invalid_argument("hata_bound: need k + 1 rates");
  HataBound out;
  ExponentProduct f = family.exponent_product();
  out.saddles = saddle_points(f, precision);
  if (out.saddles.saddles.size() != k + 1) throw AsymptoticsError("hata_bound: unexpected number of saddles");

  // finite-n growth, differenced to cancel polynomial prefactors
  const long na = sample_n, nb = sample_n + 8;
  Sample sa = sample_forms(family, na), sb = sample_forms(family, nb);
  const std::vector<std::string> names = k == 2 ? std::vector<std::string>{"J1", "J2", "J2-J1"}
                                                : std::vector<std::string>{"J1"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    FormRate r;
    r.name = names[i];
    r.empirical = (sb.log_abs[i] - sa.log_abs[i]) / static_cast<double>(nb - na);
    r.saddle = nearest_saddle(out.saddles, r.empirical);
    r.saddle_value = out.saddles.saddles[r.saddle].value;
    out.forms.push_back(r);
  }
  std::sort(out.forms.begin(), out.forms.end(),
            [](const FormRate& a, const FormRate& b) { return a.saddle_value < b.saddle_value; });
  out.coefficients.name = "B";
  out.coefficients.empirical = (sb.log_coeff - sa.log_coeff) / static_cast<double>(nb - na);
  out.coefficients.saddle = nearest_saddle(out.saddles, out.coefficients.empirical);
  out.coefficients.saddle_value = out.saddles.saddles[out.coefficients.saddle].value;

  // arithmetic: D_{beta n}, minus the primes removed by the varpi profile, plus the denominators of the points
  long total = 0;
  for (long a : family.alphas) total += a;
  const long beta = std::max(family.alpha, total - family.alpha);
  const Precision p = precision;
  out.lcm_rate = BigFloat(beta, p);
  std::array<long, 3> al{family.alphas[0], family.alphas[1], k == 2 ? family.alphas[2] : 0};
  StepFunction prof = minimize_varpi(al[0], al[1], al[2], family.alpha).profile.clipped_below(Rational(1, beta));
  out.phi_saving = valuation_asymptotic(prof, p);

  out.d_power = BigFloat(0L, p);
  std::vector<GaussianRational> targets{kOne};
  targets.insert(targets.end(), family.points.begin(), family.points.end());
  for (const GaussianPrime& gp : gaussian_primes_of(family.points)) {
    std::vector<long> v{0};
    for (const auto& a : family.points) v.push_back(gaussian_valuation(a, gp.prime));
    long worst = 0;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const long vt = v[t];
      for (unsigned mask = 0; mask < (1u << (k + 1)); ++mask) {
        long val = -family.alpha * vt;
        for (std::size_t j = 0; j <= k; ++j) {
          long lam = (mask >> j) & 1u ? family.alphas[j] : 0;
          if (j >= 1) val += (family.alphas[j] - lam) * v[j];
          val += lam * vt;
        }
        worst = std::min(worst, val);
      }
    }
    if (worst < 0) {
      BigFloat contrib = BigFloat(-worst, p) * log(BigFloat(gp.prime.norm(), p)) / 2;
      out.d_power += contrib;
      out.d_power_detail.emplace_back((gp.prime.is_real() ? to_string(gp.prime) : "(" + to_string(gp.prime) + ")") + "^" + std::to_string(-worst), contrib);
    }
  }

  BigFloat L = out.lcm_rate - out.phi_saving + out.d_power;
  const FormRate& slow = k == 2 ? out.forms[1] : out.forms[0];
  std::vector<BoundTerm> terms{
      {"integral decay (" + slow.name + ")", -slow.saddle_value, BigFloat(0L, p)},
      {"coefficient growth", BigFloat(0L, p), out.coefficients.saddle_value},
      {"lcm growth", -out.lcm_rate, out.lcm_rate},
      {"phi saving", out.phi_saving, -out.phi_saving},
      {"d-power", -out.d_power, out.d_power},
  };
  std::optional<BigFloat> c0p;
  if (k == 2) c0p = -out.forms[0].saddle_value - L;
  out.report = assemble_bound(terms, c0p);
  return out;
}

}  // namespace logforms
