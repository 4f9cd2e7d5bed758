#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logforms/asymptotics.hpp"
#include "logforms/bigfloat.hpp"
#include "logforms/exact.hpp"
#include "logforms/linear_form.hpp"

namespace logforms {

/// int_1^t (z-1)^n0 (z-a1)^n1 ... (z-ak)^nk / z^(m+1) dz for k in {1, 2}.
struct HataConfig {
  std::vector<GaussianRational> points;   // a1 .. ak
  std::vector<long> exponents;            // n0 .. nk
  long m = 0;

  static HataConfig make(std::vector<GaussianRational> points, std::vector<long> exponents, long m);
  std::size_t k() const { return points.size(); }
  /// All roots of the integrand numerator, starting with a0 = 1.
  std::vector<GaussianRational> roots() const;
  bool is_target(const GaussianRational& t) const;
  std::string to_string() const;
};

/// Coefficient-size budget for expand_form, in bits of the largest numerator or denominator.
inline constexpr std::size_t kDefaultCoefficientBits = std::size_t{1} << 26;

/// Exact form log_coeff * log(target) + const_coeff of the integral. log_coeff does not depend on the target.
GaussianLogForm expand_form(const HataConfig& config, const GaussianRational& target,
                            std::size_t max_bits = kDefaultCoefficientBits);

struct SimultaneousForms {
  GaussianRational log_coeff;
  std::vector<GaussianRational> const_coeffs;   // one per point, in order
};
SimultaneousForms simultaneous_forms(const HataConfig& config);

/// Quadrature along a polyline from 1 to target. Without explicit vertices the straight segment is used,
/// with a detour through 1 + i/2 if it passes within 1/1000 of the origin.
Complex contour_integral(const HataConfig& config, const GaussianRational& target, Precision precision,
                         std::optional<std::vector<GaussianRational>> path = std::nullopt);

/// Valuation of a nonzero Gaussian rational at a Gaussian prime.
long gaussian_valuation(const GaussianRational& z, const GaussianRational& prime);

struct GaussianPrime {
  GaussianRational prime;
  std::uint64_t rational_prime;   // the rational prime below it
  double log_abs() const;         // log |prime|
};

/// Gaussian primes dividing numerators or denominators of the given numbers.
std::vector<GaussianPrime> gaussian_primes_of(const std::vector<GaussianRational>& values);

/// Checks the three Gaussian-integer identities for a1 = 2, a2 = 1+i: for every multi-index l,
/// a1^(n1-l1) a2^(n2-l2) t^(l0+l1+l2-m) equals the regrouped product of 2, 1+i, 1-i, i and lies in Z[i].
struct DenominatorWitness {
  bool proviso_ok = true;
  std::string failure;            // which inequality fails
  bool identities_hold = true;    // regrouped products equal the raw products
  bool all_integral = true;
  long tuples = 0;
  long scaling_exponent = 0;      // minimal e with (1+i)^e * term in Z[i] for all l
  long predicted_exponent = 0;    // what the regrouping predicts (0 under the proviso)
};
DenominatorWitness denominator_witness(const HataConfig& config, const GaussianRational& target);

/// Rates: n_j = alpha_j n, m = alpha n.
struct HataFamily {
  std::vector<GaussianRational> points;
  std::vector<long> alphas;   // alpha_0 .. alpha_k
  long alpha = 0;
  HataConfig at(long n) const;
  ExponentProduct exponent_product() const;
};

struct FormRate {
  std::string name;           // "J1", "J2" or "J2-J1"
  double empirical = 0;       // finite-n estimate
  BigFloat saddle_value;      // matched Re f(xi)
  std::size_t saddle = 0;
};

struct HataBound {
  BoundReport report;
  SaddleSet saddles;
  std::vector<FormRate> forms;   // fastest decay first
  FormRate coefficients;         // growth of the shared coefficient
  BigFloat lcm_rate;             // beta
  BigFloat phi_saving;
  BigFloat d_power;
  std::vector<std::pair<std::string, BigFloat>> d_power_detail;   // per Gaussian prime
};

/// Bound through the two-form criterion. Saddles are matched to forms by comparing finite-n growth
/// between n = sample_n and n = sample_n + 8.
HataBound hata_bound(const HataFamily& family, Precision precision, long sample_n = 24);

}  // namespace logforms
