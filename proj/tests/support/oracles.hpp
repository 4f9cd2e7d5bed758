#pragma once

// Independent reference computations used only by the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "logforms/bigfloat.hpp"
#include "logforms/exact.hpp"

namespace oracle {

using logforms::BigFloat;
using logforms::Integer;
using logforms::Precision;
using logforms::Rational;

Integer lcm_fold(unsigned long n);
unsigned long ordp_bruteforce(unsigned long p, unsigned long N);
bool trial_division_prime(std::uint64_t n);

/// Golden-section maximum of f on [a, b] (f assumed unimodal there).
double golden_max(double (*f)(double, const void*), const void* ctx, double a, double b, double* arg = nullptr);

/// MPFR's own digamma, used as a reference for the hand-written one.
BigFloat mpfr_digamma_of(const Rational& x, Precision p);

/// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long num_bound, long den_bound) {
    long d = uniform(1, den_bound);
    long n = uniform(-num_bound, num_bound);
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))]; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
