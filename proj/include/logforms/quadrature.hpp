#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "logforms/bigfloat.hpp"

namespace logforms {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadOptions {
  Precision target{30};          // relative accuracy goal, decimal digits
  long guard_digits = 15;         // extra working digits for integrand evaluation
  std::size_t max_nodes = 1u << 20;
  int min_levels = 3;
};

template <class V>
struct QuadResult {
  V value;
  BigFloat error;          // |I_k - I_{k-1}| at the final level
  int levels = 0;
  std::size_t nodes = 0;
};

using RealIntegrand = std::function<BigFloat(const BigFloat&)>;
using ComplexIntegrand = std::function<Complex(const Complex&)>;

/// Tanh-sinh quadrature of f over [a, b]. The step is halved until two successive levels agree
/// to the target relative accuracy. Throws QuadratureError when max_nodes is exhausted first.
QuadResult<BigFloat> integrate(const RealIntegrand& f, const BigFloat& a, const BigFloat& b,
                               const QuadOptions& opts);

/// Integral of f(z) dz along the polyline through `vertices`.
QuadResult<Complex> integrate_path(const ComplexIntegrand& f, const std::vector<Complex>& vertices,
                                   const QuadOptions& opts);

}  // namespace logforms
