#include "logforms/rhin_forms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <thread>

#include "logforms/gauss_forms.hpp"
#include "logforms/quadrature.hpp"
#include "logforms/roots.hpp"

namespace logforms {

namespace {

Rational canon(Rational q) {
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer lcm_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigFloat eval_big(const IntPolynomial& G, const Rational& x, Precision p) {
  return BigFloat(G.map<Rational>([](const Integer& c) { return Rational(c); })(x), p);
}

}  // namespace

GnForm gn_linear_form(const IntPolynomial& G, long n) {
  if (n < 0) throw std::invalid_argument("gn_linear_form: negative n");
  if (G.degree() > n) throw std::invalid_argument("gn_linear_form: deg G exceeds n");
  GnForm out;
  out.form = LogLinearForm{Rational(0), Rational(0), Rational(2)};
  for (long k = 0; k <= G.degree(); ++k) {
    const Integer& g = G.coeffs()[static_cast<std::size_t>(k)];
    if (g == 0) continue;
    LogLinearForm f = linear_form(HGParams::make(k, k, k, Rational(2)));
    out.form.log_coeff += f.log_coeff * g;
    out.form.const_coeff += f.const_coeff * g;
  }
  out.scale = lcm_upto(static_cast<unsigned long>(n));
  Rational L = canon(out.form.log_coeff * out.scale), C = canon(out.form.const_coeff * out.scale);
  out.integral = is_integer(L) && is_integer(C);
  if (out.integral) {
    out.log_coeff = L.get_num();
    out.const_coeff = C.get_num();
  }
  return out;
}

SegmentUnion SegmentUnion::make(std::vector<std::pair<Rational, Rational>> parts) {
  if (parts.empty()) throw std::invalid_argument("SegmentUnion: no intervals");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].first > parts[i].second) throw std::invalid_argument("SegmentUnion: reversed interval");
    if (i && !(parts[i - 1].second < parts[i].first))
      throw std::invalid_argument("SegmentUnion: intervals must be sorted and disjoint");
  }
  return SegmentUnion{std::move(parts)};
}

bool SegmentUnion::contains(const Rational& x) const {
  for (const auto& [lo, hi] : parts)
    if (lo <= x && x <= hi) return true;
  return false;
}

SegmentUnion log2_saddle_segment() {
  // 3 - 2 sqrt2, with sqrt2 rounded down so the end is rounded up
  Integer scale = pow(Integer(10), 40u), r;
  Integer radicand = 2 * scale * scale;
  mpz_sqrt(r.get_mpz_t(), radicand.get_mpz_t());
  return SegmentUnion::single(Rational(0), canon(Rational(3 * scale - 2 * r, scale)));
}

BigFloat sup_norm(const IntPolynomial& G, const SegmentUnion& seg, Precision p) {
  const Precision w = p + 10;
  BigFloat best(0L, w);
  RatPolynomial dG = G.map<Rational>([](const Integer& c) { return Rational(c); }).derivative();
  for (const auto& [lo, hi] : seg.parts) {
    best = max(best, abs(eval_big(G, lo, w)));
    best = max(best, abs(eval_big(G, hi, w)));
    if (!dG.is_zero() && lo < hi) {
      for (const BigFloat& x : real_roots(dG, lo, hi, w)) best = max(best, abs(eval(G, x)));
    }
  }
  return best.at(p);
}

namespace {

// |[y^k] T_n(2y - 1)| = n (n+k-1)! 4^k / ((n-k)! (2k)!), and 1 for k = 0.
double shifted_chebyshev_abs(int n, int k) {
  if (k == 0) return 1.0;
  Integer num = Integer(n) * factorial(static_cast<unsigned long>(n + k - 1)) * pow(Integer(4), static_cast<unsigned long>(k));
  Integer den = factorial(static_cast<unsigned long>(n - k)) * factorial(static_cast<unsigned long>(2 * k));
  return canon(Rational(num, den)).get_d();
}

struct Candidate {
  std::vector<long> c;
  BigFloat sup;
};

bool better(const BigFloat& s, const std::vector<long>& c, const std::optional<Candidate>& cur) {
  if (!cur) return true;
  if (s != cur->sup) return s < cur->sup;
  return c < cur->c;
}

}  // namespace

GStarResult search_gstar(int degree, long coeff_bound, const SegmentUnion& seg, Precision p, unsigned threads) {
  if (degree < 1 || degree > 8) throw std::invalid_argument("search_gstar: degree must be in 1..8");
  if (coeff_bound < 1) throw std::invalid_argument("search_gstar: empty search space");
  const std::size_t len = static_cast<std::size_t>(degree) + 1;

  // y^degree seeds the incumbent
  std::vector<long> seed(len, 0);
  seed[len - 1] = 1;
  auto to_poly = [](const std::vector<long>& c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return IntPolynomial(std::move(v));
  };
  BigFloat seed_sup = sup_norm(to_poly(seed), seg, p);

  std::vector<long> bound(len, coeff_bound);
  if (seg.parts.size() == 1 && seg.parts[0].first == 0 && seg.parts[0].second > 0) {
    // Markov: |g_k| <= M |t_k| / s^k for |G| <= M on [0, s]
    const double s = seg.parts[0].second.get_d(), M = seed_sup.to_double() * (1 + 1e-9);
    for (std::size_t k = 0; k < len; ++k) {
      double b = M * shifted_chebyshev_abs(degree, static_cast<int>(k)) / std::pow(s, static_cast<double>(k));
      if (b < static_cast<double>(coeff_bound)) bound[k] = static_cast<long>(std::floor(b * (1 + 1e-9)));
    }
  }

  std::vector<double> ys;
  for (const auto& [lo, hi] : seg.parts) {
    const double a = lo.get_d(), b = hi.get_d();
    ys.push_back(b);
    ys.push_back(a);
    for (int i = 1; i < 64; ++i) ys.push_back(a + (b - a) * i / 64.0);
  }
  std::vector<std::vector<double>> powers(ys.size(), std::vector<double>(len));
  for (std::size_t i = 0; i < ys.size(); ++i) {
    double t = 1;
    for (std::size_t k = 0; k < len; ++k, t *= ys[i]) powers[i][k] = t;
  }

  std::size_t total = 1;
  for (long b : bound) total *= static_cast<std::size_t>(2 * b + 1);
  if (total > (std::size_t(1) << 34)) throw std::invalid_argument("search_gstar: coefficient box too large");

  std::atomic<double> incumbent(seed_sup.to_double() * (1 + 1e-12));
  std::atomic<std::size_t> exact_checks(0);
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::optional<Candidate>> local(threads);

  auto work = [&](unsigned id) {
    std::vector<long> c(len);
    const std::size_t lo = total * id / threads, hi = total * (id + 1) / threads;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      std::size_t r = idx;
      long top = -1;
      for (std::size_t k = 0; k < len; ++k) {
        const std::size_t w = static_cast<std::size_t>(2 * bound[k] + 1);
        c[k] = static_cast<long>(r % w) - bound[k];
        r /= w;
        if (c[k] != 0) top = static_cast<long>(k);
      }
      if (top < 1 || c[static_cast<std::size_t>(top)] < 0) continue;   // constants, and -G duplicates
      const double inc = incumbent.load(std::memory_order_relaxed);
      bool pruned = false;
      for (const auto& pw : powers) {
        double v = 0, mag = 0;
        for (std::size_t k = 0; k <= static_cast<std::size_t>(top); ++k) {
          double term = static_cast<double>(c[k]) * pw[k];
          v += term;
          mag += std::fabs(term);
        }
        if (std::fabs(v) - 1e-13 * mag > inc) {
          pruned = true;
          break;
        }
      }
      if (pruned) continue;
      ++exact_checks;
      BigFloat s = sup_norm(to_poly(c), seg, p);
      if (better(s, c, local[id])) local[id] = Candidate{c, s};
      const double sd = s.to_double() * (1 + 1e-12);
      double cur = incumbent.load();
      while (sd < cur && !incumbent.compare_exchange_weak(cur, sd)) {
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  for (auto& th : pool) th.join();

  std::optional<Candidate> best;
  for (auto& l : local)
    if (l && better(l->sup, l->c, best)) best = l;
  if (!best) throw std::logic_error("search_gstar: the seed polynomial was not revisited");

  GStarResult out;
  out.best = to_poly(best->c);
  out.sup = best->sup;
  out.sup_root = pow(best->sup, BigFloat(1L, p) / BigFloat(static_cast<long>(degree), p));
  out.box_size = total;
  out.exact_checks = exact_checks.load();
  return out;
}

IntPolynomial HnForm::reconstruct() const {
  std::vector<Integer> c(B.size());
  for (std::size_t nu = 0; nu < B.size(); ++nu) {
    const long v = static_cast<long>(nu);
    c[nu] = v <= n ? B[nu] * pow(delta, static_cast<unsigned long>(n - v)) : B[nu];
  }
  return IntPolynomial(std::move(c));
}

HnForm hn_validate(const IntPolynomial& H, long n, const Integer& delta) {
  if (n < 0) throw std::invalid_argument("hn_validate: negative n");
  if (delta <= 0) throw std::invalid_argument("hn_validate: Delta must be positive");
  if (H.degree() > 2 * n) throw HnFormError("hn_validate: degree exceeds 2n", -1);
  HnForm out;
  out.delta = delta;
  out.n = n;
  for (long nu = 0; nu <= H.degree(); ++nu) {
    const Integer& h = H.coeffs()[static_cast<std::size_t>(nu)];
    if (nu > n) {
      out.B.push_back(h);
      continue;
    }
    Integer q = pow(delta, static_cast<unsigned long>(n - nu));
    if (h % q != 0)
      throw HnFormError("hn_validate: Delta^" + std::to_string(n - nu) + " does not divide coefficient " + std::to_string(nu), nu);
    out.B.push_back(h / q);
  }
  return out;
}

HnForms hn_simultaneous_forms(const HnForm& form, const std::vector<Rational>& points) {
  if (points.empty()) throw std::invalid_argument("hn_simultaneous_forms: no points");
  HnForms out;
  out.d = 1;
  for (const auto& a : points) {
    if (sgn(a) <= 0 || a == 1) throw std::invalid_argument("hn_simultaneous_forms: points must be positive and != 1");
    out.d = lcm_int(out.d, a.get_den());
  }
  if (form.delta % out.d != 0) throw std::invalid_argument("hn_simultaneous_forms: d does not divide Delta");
  for (const auto& a : points) {
    Integer c = a.get_num() * (out.d / a.get_den());
    if (form.delta % c != 0) throw std::invalid_argument("hn_simultaneous_forms: numerator " + c.get_str() + " does not divide Delta");
  }
  const long n = form.n;
  const Integer Bn = n < static_cast<long>(form.B.size()) ? form.B[static_cast<std::size_t>(n)] : Integer(0);
  out.scale = lcm_upto(static_cast<unsigned long>(n));
  out.integral = true;
  for (const auto& a : points) {
    Rational A(0);
    for (long nu = 0; nu < static_cast<long>(form.B.size()); ++nu) {
      const Integer& B = form.B[static_cast<std::size_t>(nu)];
      if (nu == n || B == 0) continue;
      if (nu < n) {
        // B Delta^(n-nu) d^(nu-n) (a^(nu-n) - 1)/(n - nu)
        const unsigned long e = static_cast<unsigned long>(n - nu);
        Rational t = canon(Rational(B * pow(form.delta, e), pow(out.d, e)));
        A += canon(t * (pow(a, nu - n) - 1) / Rational(n - nu));
      } else {
        // B d^(nu-n) (1 - a^(nu-n))/(nu - n)
        Rational t(B * pow(out.d, static_cast<unsigned long>(nu - n)));
        A += canon(t * (1 - pow(a, nu - n)) / Rational(nu - n));
      }
    }
    LogLinearForm f{Rational(-Bn), canon(A), a};
    out.integral = out.integral && is_integer(canon(f.log_coeff * out.scale)) && is_integer(canon(f.const_coeff * out.scale));
    out.forms.push_back(f);
  }
  return out;
}

BigFloat hn_integral_value(const IntPolynomial& H, long n, const Integer& d, const Rational& a, Precision p) {
  // the integrand changes sign inside the segment, so the value sits well below its size
  const Precision w = p + 20 + n;
  const BigFloat one(1L, w), b = BigFloat(Rational(1 - a), w), D(d, w);
  const BigFloat dn = pow(D, n);
  QuadOptions opts;
  opts.target = p + 2;
  opts.guard_digits = 20 + n;
  auto f = [&](const BigFloat& x) {
    BigFloat t = one - b * x.at(w);
    return eval(H, D * t) / (dn * pow(t, n + 1));
  };
  return (b * integrate(f, BigFloat(0L, w), one, opts).value).at(p);
}

Integer RhinFamily::d() const {
  Integer r = 1;
  for (const auto& a : points) r = lcm_int(r, a.get_den());
  return r;
}

Integer RhinFamily::delta() const {
  Integer r = d();
  for (const auto& a : points) r = lcm_int(r, abs(a.get_num() * (d() / a.get_den())));
  return r;
}

std::vector<long> RhinFamily::exponents(long n) const {
  std::vector<long> e;
  for (const auto& f : factors) {
    Integer num = f.beta.get_num() * n, q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), f.beta.get_den().get_mpz_t());
    e.push_back(q.get_si());
  }
  return e;
}

IntPolynomial RhinFamily::at(long n) const {
  const Rational inv_d(Integer(1), d());
  RatPolynomial K = RatPolynomial::constant(Rational(constant * pow(base, static_cast<unsigned long>(n))));
  auto e = exponents(n);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    // f(z/d)
    std::vector<Rational> c;
    Rational s(1);
    for (const auto& x : factors[j].f.coeffs()) {
      c.push_back(canon(x * s));
      s = canon(s * inv_d);
    }
    K = K * RatPolynomial(std::move(c)).pow(static_cast<unsigned long>(e[j]));
  }
  std::vector<Integer> out;
  for (const auto& x : K.coeffs()) {
    if (!is_integer(x)) throw std::domain_error("RhinFamily::at: H_n is not an integer polynomial");
    out.push_back(x.get_num());
  }
  return IntPolynomial(std::move(out));
}

RhinFamily RhinFamily::log3() {
  auto lin = [](long a, long b) { return RatPolynomial::linear(Rational(a), Rational(b)); };
  auto beta = [](long micro) { return canon(Rational(micro, 1000000)); };
  RhinFamily f;
  f.points = {canon(Rational(2, 3)), canon(Rational(4, 3))};
  f.constant = pow(Integer(2), 14u) * pow(Integer(3), 7u);
  f.base = 9;
  f.factors = {
      {lin(1, -1), beta(704324)},
      {RatPolynomial::linear(Rational(1), canon(Rational(-2, 3))), beta(552418)},
      {RatPolynomial::linear(Rational(1), canon(Rational(-4, 3))), beta(447582)},
      {lin(5, -4), beta(109072)},
      {RatPolynomial{Rational(16), Rational(-34), Rational(17)}, beta(38934)},
      {RatPolynomial{Rational(16), Rational(-36), Rational(19)}, beta(54368)},
  };
  return f;
}

RhinFamily RhinFamily::simple_log2() {
  RhinFamily f;
  f.points = {Rational(2)};
  f.factors = {{RatPolynomial::linear(Rational(1), Rational(-1)), Rational(1)},
               {RatPolynomial::linear(Rational(1), Rational(-2)), Rational(1)}};
  return f;
}

BigFloat RhinEnvelope::value(const BigFloat& t) const {
  const Precision p = t.precision();
  BigFloat v = -log(abs(t));
  for (const auto& f : family->factors)
    if (sgn(f.beta) != 0) v += BigFloat(f.beta, p) * log(abs(eval(f.f, t)));
  return v;
}

BigFloat RhinEnvelope::value(const Complex& t) const {
  const Precision p = t.precision();
  BigFloat v = -log(abs(t));
  for (const auto& f : family->factors)
    if (sgn(f.beta) != 0) v += BigFloat(f.beta, p) * log(abs(eval(f.f, t)));
  return v;
}

RatPolynomial RhinEnvelope::critical_numerator() const {
  // t * prod f * (sum beta f'/f - 1/t)
  std::vector<const RhinFactor*> used;
  for (const auto& f : family->factors)
    if (sgn(f.beta) != 0) used.push_back(&f);
  const RatPolynomial t = RatPolynomial::monomial(Rational(1), 1);
  RatPolynomial prod = RatPolynomial::constant(Rational(1));
  for (auto* f : used) prod = prod * f->f;
  RatPolynomial num = -prod;
  for (std::size_t j = 0; j < used.size(); ++j) {
    RatPolynomial term = t * used[j]->f.derivative() * RatPolynomial::constant(used[j]->beta);
    for (std::size_t i = 0; i < used.size(); ++i)
      if (i != j) term = term * used[i]->f;
    num += term;
  }
  return num;
}

namespace {

struct DoubleEnvelope {
  std::vector<std::pair<std::vector<std::complex<double>>, double>> f;   // coefficients, beta

  explicit DoubleEnvelope(const RhinFamily& fam) {
    for (const auto& x : fam.factors) {
      std::vector<std::complex<double>> c;
      for (const auto& q : x.f.coeffs()) c.emplace_back(q.get_d(), 0.0);
      f.emplace_back(std::move(c), x.beta.get_d());
    }
  }
  double operator()(std::complex<double> t) const {
    double v = -std::log(std::abs(t));
    for (const auto& [c, b] : f) {
      if (b == 0) continue;
      std::complex<double> acc = 0;
      for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
      v += b * std::log(std::abs(acc));
    }
    return v;
  }
};

template <class F>
double golden_max(F f, double lo, double hi, double* at) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi, c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < 90; ++i) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    }
  }
  *at = (a + b) / 2;
  return f(*at);
}

// max over the circle |t| = r: dense sampling, then golden refinement around the best samples
double circle_max(const DoubleEnvelope& E, double r, double* theta) {
  const int N = 1440;
  const double step = 2 * M_PI / N;
  std::vector<std::pair<double, int>> s;
  for (int k = 0; k < N; ++k) {
    double v = E(std::polar(r, k * step));
    s.emplace_back(std::isfinite(v) ? v : -1e300, k);
  }
  std::partial_sort(s.begin(), s.begin() + 4, s.end(), std::greater<>());
  double best = -1e300;
  for (int i = 0; i < 4; ++i) {
    double th;
    double v = golden_max([&](double x) { return E(std::polar(r, x)); }, (s[i].second - 1) * step,
                          (s[i].second + 1) * step, &th);
    if (v > best) {
      best = v;
      *theta = th;
    }
  }
  return best;
}

}  // namespace

RhinBound rhin_bound(const RhinFamily& family, Precision precision) {
  if (family.points.empty()) throw std::invalid_argument("rhin_bound: no points");
  const Precision w = precision + 10;
  RhinEnvelope E{&family};
  RatPolynomial crit = E.critical_numerator();

  RhinBound out;
  for (const auto& a : family.points) {
    const Rational lo = a < 1 ? a : Rational(1), hi = a < 1 ? Rational(1) : a;
    std::optional<SegmentEnvelope> best;
    auto offer = [&](const BigFloat& t, bool interior) {
      BigFloat v = E.value(t);
      if (!v.is_finite()) return;
      if (!best || v > best->value) best = SegmentEnvelope{a, v, interior ? std::optional<BigFloat>(t) : std::nullopt};
    };
    for (const BigFloat& t : real_roots(crit, lo, hi, w)) offer(t, true);
    offer(BigFloat(lo, w), false);
    offer(BigFloat(hi, w), false);
    if (!best) throw AsymptoticsError("rhin_bound: envelope has no finite value on a segment");
    out.segments.push_back(*best);
  }
  std::stable_sort(out.segments.begin(), out.segments.end(),
                   [](const SegmentEnvelope& x, const SegmentEnvelope& y) { return x.value > y.value; });

  // Cauchy estimate for the middle coefficient: min over r of the circle maximum (convex in log r)
  DoubleEnvelope Ed(family);
  double theta = 0, best_theta = 0;
  double lr = 0;
  double neg = golden_max(
      [&](double x) { return -circle_max(Ed, std::exp(x), &theta); }, std::log(1e-3), std::log(1e3), &lr);
  circle_max(Ed, std::exp(lr), &best_theta);
  const double r = std::exp(lr);
  out.cauchy_radius = BigFloat(r, w).at(precision);
  out.cauchy_rate = E.value(Complex(BigFloat(r * std::cos(best_theta), w), BigFloat(r * std::sin(best_theta), w))).at(precision);
  out.coefficient_rate = out.cauchy_rate;
  (void)neg;

  ComplexRoots roots = complex_roots(crit.map<GaussianRational>([](const Rational& q) { return GaussianRational(q); }), w);
  double gap = 1e-5;
  for (const auto& z : roots.roots) {
    BigFloat v = E.value(z);
    if (!v.is_finite()) continue;
    double g = std::fabs(v.to_double() - out.cauchy_rate.to_double());
    if (g < gap) {
      gap = g;
      BigFloat res = abs(eval(crit, z));
      out.saddle = Saddle{z, v.at(precision), res.at(precision)};
      out.coefficient_rate = v.at(precision);
    }
  }

  const BigFloat log_d = log_of(family.d(), w), log_base = log_of(Rational(family.base), w);
  std::vector<BoundTerm> terms;
  terms.push_back({"lcm growth", BigFloat(-1L, w), BigFloat(1L, w)});
  terms.push_back({"d-power", log_d, -log_d});
  terms.push_back({"constant power", -log_base, log_base});
  terms.push_back({"segment envelope [1, " + to_string(out.segments[0].a) + "]", -out.segments[0].value, BigFloat(0L, w)});
  terms.push_back({"coefficient envelope", BigFloat(0L, w), out.coefficient_rate.at(w)});
  std::optional<BigFloat> c0p;
  if (out.segments.size() > 1) {
    BigFloat c0 = BigFloat(0L, w);
    for (const auto& t : terms) c0 += t.to_c0;
    c0p = c0 + out.segments[0].value - out.segments[1].value;
  }
  out.report = assemble_bound(terms, c0p);
  return out;
}

}  // namespace logforms
