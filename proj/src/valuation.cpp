#include "logforms/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace logforms {

namespace {

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

long legendre(unsigned long p, unsigned long N) {
  long total = 0;
  for (unsigned long q = N / p; q > 0; q /= p) total += static_cast<long>(q);
  return total;
}

void check_tuple(long m, long n0, long n1) {
  if (m < 0 || n0 < 0 || n1 < 0 || n0 + n1 - m < 0)
    throw std::invalid_argument("phi: exponents must be non-negative with m <= n0 + n1");
}

unsigned long prime_limit(std::optional<double> threshold, long n1) {
  double t = threshold ? *threshold : std::sqrt(static_cast<double>(n1));
  if (t < 1) return 1;
  return static_cast<unsigned long>(std::floor(t));
}

// Exponent of p in the quotient's denominator.
long phi_valuation(unsigned long p, long m, long n0, long n1) {
  return legendre(p, static_cast<unsigned long>(n0)) + legendre(p, static_cast<unsigned long>(n1)) -
         legendre(p, static_cast<unsigned long>(m)) - legendre(p, static_cast<unsigned long>(n0 + n1 - m));
}

long phi_term(long t, long m, long n0, long n1) {
  return std::max(0L, n0 / t + n1 / t - m / t - (n0 + n1 - m) / t);
}

StepFunction build_profile(std::vector<Rational> breaks, const std::function<long(const Rational&)>& value) {
  breaks.push_back(Rational(0));
  breaks.push_back(Rational(1));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  StepFunction f;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    long v = value(breaks[i]);
    if (v != value((breaks[i] + breaks[i + 1]) / 2))
      throw std::logic_error("step profile is not constant on [" + breaks[i].get_str() + ", " +
                             breaks[i + 1].get_str() + ")");
    if (v == 0) continue;
    if (!f.pieces.empty() && f.pieces.back().hi == breaks[i] && f.pieces.back().value == v)
      f.pieces.back().hi = breaks[i + 1];
    else
      f.pieces.push_back({breaks[i], breaks[i + 1], v});
  }
  return f;
}

std::vector<Rational> multiples(long denominator) {
  std::vector<Rational> out;
  for (long i = 0; i < denominator; ++i) {
    Rational q(i, denominator);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace

long StepFunction::at(const Rational& x) const {
  Rational y = frac(x);
  for (const auto& piece : pieces)
    if (piece.lo <= y && y < piece.hi) return piece.value;
  return 0;
}

StepFunction StepFunction::clipped_below(const Rational& lo) const {
  StepFunction out;
  for (const auto& piece : pieces) {
    if (piece.hi <= lo) continue;
    out.pieces.push_back({std::max(piece.lo, lo), piece.hi, piece.value});
  }
  return out;
}

Integer phi_denominator(long m, long n0, long n1) {
  check_tuple(m, n0, n1);
  Integer result = 1;
  if (n0 + n1 < 2) return result;
  for (auto p : primes_in(2, static_cast<std::uint64_t>(n0 + n1))) {
    long v = phi_valuation(p, m, n0, n1);
    if (v > 0) result *= pow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(v));
  }
  return result;
}

Integer phi_clipped_product(long m, long n0, long n1) {
  check_tuple(m, n0, n1);
  Integer result = 1;
  if (n0 + n1 < 2) return result;
  for (auto p : primes_in(2, static_cast<std::uint64_t>(n0 + n1))) {
    long e = 0;
    for (long t = static_cast<long>(p); t <= n0 + n1; t *= static_cast<long>(p)) {
      e += phi_term(t, m, n0, n1);
      if (t > (n0 + n1) / static_cast<long>(p)) break;
    }
    if (e > 0) result *= pow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(e));
  }
  return result;
}

Integer phi_tilde(long m, long n0, long n1, std::optional<double> threshold) {
  check_tuple(m, n0, n1);
  Integer result = 1;
  unsigned long lo = prime_limit(threshold, n1) + 1;
  if (static_cast<long>(lo) > n0 + n1) return result;
  for (auto p : primes_in(lo, static_cast<std::uint64_t>(n0 + n1))) {
    long v = phi_valuation(p, m, n0, n1);
    if (v > 0) result *= pow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(v));
  }
  return result;
}

Integer phi_tilde_first_order(long m, long n0, long n1, std::optional<double> threshold) {
  check_tuple(m, n0, n1);
  Integer result = 1;
  unsigned long lo = prime_limit(threshold, n1) + 1;
  if (static_cast<long>(lo) > n0 + n1) return result;
  for (auto p : primes_in(lo, static_cast<std::uint64_t>(n0 + n1))) {
    if (phi_term(static_cast<long>(p), m, n0, n1) > 0) result *= static_cast<unsigned long>(p);
  }
  return result;
}

long phi_bracket(long m_rate, long n0_rate, long n1_rate, const Rational& x) {
  Integer v = floor_of(x * n0_rate) + floor_of(x * n1_rate) - floor_of(x * m_rate) -
              floor_of(x * (n0_rate + n1_rate - m_rate));
  return std::max(0L, v.get_si());
}

StepFunction phi_step_profile(long m_rate, long n0_rate, long n1_rate) {
  if (m_rate <= 0 || n0_rate <= 0 || n1_rate <= 0 || n0_rate + n1_rate - m_rate <= 0)
    throw std::invalid_argument("phi_step_profile: rates must be positive");
  std::vector<Rational> breaks;
  for (long r : {m_rate, n0_rate, n1_rate, n0_rate + n1_rate - m_rate}) {
    auto b = multiples(r);
    breaks.insert(breaks.end(), b.begin(), b.end());
  }
  return build_profile(breaks, [&](const Rational& x) { return phi_bracket(m_rate, n0_rate, n1_rate, x); });
}

long varpi(const std::array<long, 3>& alphas, const Rational& x, const std::array<Rational, 3>& y) {
  Integer total = 0;
  for (int j = 0; j < 3; ++j) {
    Rational ax = x * alphas[j];
    total += floor_of(ax) - floor_of(y[j]) - floor_of(ax - y[j]);
  }
  return total.get_si();
}

VarpiWitness varpi_minimum_at(const std::array<long, 3>& alphas, long alpha, const Rational& x) {
  std::array<Rational, 3> f;
  for (int j = 0; j < 3; ++j) f[j] = frac(x * alphas[j]);
  Rational g = frac(x * alpha);
  // Term j is 0 exactly when y_j <= f_j; S is the set of indices paying 1.
  std::array<int, 8> order{0, 1, 2, 4, 3, 5, 6, 7};
  for (int S : order) {
    // a zero rate means the index is absent: y_j = 0 and it never pays
    if ((alphas[0] == 0 && (S & 1)) || (alphas[1] == 0 && (S & 2)) || (alphas[2] == 0 && (S & 4))) continue;
    Rational L = 0, U = 0;
    std::array<Rational, 3> lo, hi;
    int size = 0;
    for (int j = 0; j < 3; ++j) {
      if (S & (1 << j)) {
        lo[j] = f[j];
        hi[j] = 1;
        ++size;
      } else {
        lo[j] = 0;
        hi[j] = f[j];
      }
      L += lo[j];
      U += hi[j];
    }
    bool closed = (S == 0);
    Integer k = closed ? Integer(-floor_of(g - L)) : Integer(floor_of(L - g) + 1);
    Rational target = g + Rational(k);
    bool ok = closed ? (target <= U) : (target < U);
    if (!ok) continue;
    Rational lambda = (U == L) ? Rational(0) : (target - L) / (U - L);
    VarpiWitness w{x, {}, size};
    for (int j = 0; j < 3; ++j) w.y[j] = lo[j] + lambda * (hi[j] - lo[j]);
    if (varpi(alphas, x, w.y) != size) throw std::logic_error("varpi witness mismatch");
    Rational check = w.y[0] + w.y[1] + w.y[2] - x * alpha;
    if (check.get_den() != 1) throw std::logic_error("varpi witness violates the congruence");
    return w;
  }
  throw std::logic_error("varpi: no admissible subset found");
}

VarpiProfile minimize_varpi(long alpha0, long alpha1, long alpha2, long alpha) {
  if (alpha0 <= 0 || alpha1 <= 0 || alpha2 < 0 || alpha <= 0)
    throw std::invalid_argument("minimize_varpi: rates must be positive (alpha2 may be 0)");
  std::array<long, 3> alphas{alpha0, alpha1, alpha2};
  std::set<long> dens{alpha0, alpha1, alpha};
  if (alpha2 > 0) dens.insert(alpha2);
  for (int T = 0; T < 8; ++T) {
    long s = alpha;
    for (int j = 0; j < 3; ++j)
      if (T & (1 << j)) s -= alphas[j];
    if (s != 0) dens.insert(std::labs(s));
  }
  std::vector<Rational> breaks;
  for (long d : dens) {
    auto b = multiples(d);
    breaks.insert(breaks.end(), b.begin(), b.end());
  }
  auto value = [&](const Rational& x) { return varpi_minimum_at(alphas, alpha, x).value; };
  VarpiProfile out;
  out.profile = build_profile(breaks, value);
  breaks.push_back(Rational(1));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    out.witnesses.push_back(varpi_minimum_at(alphas, alpha, breaks[i]));
  return out;
}

std::vector<Rational> bernoulli_numbers(long n) {
  std::vector<Rational> B(static_cast<std::size_t>(n + 1));
  B[0] = 1;
  for (long m = 1; m <= n; ++m) {
    Rational s = 0;
    for (long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * B[static_cast<std::size_t>(k)];
    B[static_cast<std::size_t>(m)] = -s / (m + 1);
  }
  return B;
}

BigFloat digamma(const Rational& x, Precision p) {
  if (sgn(x) <= 0) throw std::domain_error("digamma: argument must be positive");
  Precision w = p + 10;
  long shift_to = static_cast<long>(0.4 * static_cast<double>(p.digits)) + 10;
  BigFloat correction(0L, w);
  Rational y = x;
  while (y < shift_to) {
    correction += BigFloat(1L, w) / BigFloat(y, w);
    y += 1;
  }
  BigFloat Y(y, w);
  BigFloat result = log(Y) - BigFloat(1L, w) / (Y * 2);
  BigFloat tol = pow(BigFloat(10L, w), -(p.digits + 5));
  BigFloat y2 = Y * Y;
  BigFloat ypow = y2;
  long kmax = 8;
  std::vector<Rational> B = bernoulli_numbers(2 * kmax + 2);
  for (long k = 1;; ++k) {
    if (2 * k + 2 > static_cast<long>(B.size()) - 1) {
      kmax *= 2;
      B = bernoulli_numbers(2 * kmax + 2);
    }
    BigFloat term = BigFloat(B[static_cast<std::size_t>(2 * k)], w) / (ypow * (2 * k));
    result -= term;
    // For real y > 0 the remainder is bounded by the first omitted term.
    BigFloat next = abs(BigFloat(B[static_cast<std::size_t>(2 * k + 2)], w) / (ypow * y2 * (2 * k + 2)));
    if (next < tol) break;
    if (k > 4 * p.digits + 100) throw std::runtime_error("digamma: asymptotic series did not reach precision");
    ypow = ypow * y2;
  }
  return (result - correction).at(p);
}

BigFloat valuation_asymptotic(const StepFunction& profile, Precision p) {
  Precision w = p + 5;
  BigFloat total(0L, w);
  for (const auto& piece : profile.pieces) {
    if (sgn(piece.lo) <= 0) throw std::invalid_argument("valuation_asymptotic: piece touches 0");
    if (piece.value == 0) continue;
    total += (digamma(piece.hi, w) - digamma(piece.lo, w)) * piece.value;
  }
  return total.at(p);
}

}  // namespace logforms
