#include "logforms/quadrature.hpp"

#include <cmath>
#include <string>

namespace logforms {

namespace {

BigFloat magnitude(const BigFloat& v) { return abs(v); }
BigFloat magnitude(const Complex& v) { return abs(v); }

template <class V>
V zero_like(Precision p);
template <>
BigFloat zero_like<BigFloat>(Precision p) { return BigFloat(0L, p); }
template <>
Complex zero_like<Complex>(Precision p) { return Complex(p); }

// Tanh-sinh over s in [0, 1]: s = 1/(1 + e^{-2u}), u = (pi/2) sinh t, ds = pi cosh t * d(1-d) dt
// where d = 1/(1 + e^{2u}) is the distance to the nearer endpoint.
template <class V, class G>
QuadResult<V> unit_interval(const G& g, const QuadOptions& opts) {
  const Precision work = opts.target + opts.guard_digits;
  const BigFloat one(1L, work);
  const BigFloat pi_w = pi(work);
  const BigFloat half_pi = pi_w / 2;
  const double t_max = std::asinh(static_cast<double>(work.digits + 5) * std::log(10.0) / M_PI) + 0.5;

  auto node_sum = [&](const BigFloat& t, bool mirror) {
    BigFloat u = half_pi * sinh(t);
    BigFloat d = one / (one + exp(u * 2));
    BigFloat w = pi_w * cosh(t) * d * (one - d);
    V acc = g(one - d) * w;
    if (mirror) acc += g(d) * w;
    return acc;
  };

  QuadResult<V> result{zero_like<V>(work), BigFloat(0L, work), 0, 0};
  V running = node_sum(BigFloat(0L, work), false);
  result.nodes = 1;
  double h = 1.0;
  for (long j = 1; static_cast<double>(j) * h <= t_max; ++j) {
    running += node_sum(BigFloat(static_cast<double>(j) * h, work), true);
    result.nodes += 2;
  }
  V previous = running * BigFloat(h, work);
  const BigFloat tol = pow(BigFloat(10L, work), -opts.target.digits);

  for (int level = 1;; ++level) {
    h /= 2;
    long jmax = static_cast<long>(t_max / h);
    std::size_t needed = static_cast<std::size_t>(jmax + 1);
    if (result.nodes + needed > opts.max_nodes) {
      throw QuadratureError("quadrature did not reach " + std::to_string(opts.target.digits) +
                            " digits within " + std::to_string(opts.max_nodes) + " nodes (error estimate " +
                            result.error.to_string(5) + ")");
    }
    for (long j = 1; j <= jmax; j += 2) {
      running += node_sum(BigFloat(static_cast<double>(j) * h, work), true);
      result.nodes += 2;
    }
    V current = running * BigFloat(h, work);
    result.error = magnitude(current - previous);
    result.levels = level;
    BigFloat scale = magnitude(current);
    previous = current;
    if (level >= opts.min_levels && result.error <= tol * scale) break;
    if (level >= opts.min_levels && scale.is_zero() && result.error.is_zero()) break;
  }
  result.value = previous;
  return result;
}

}  // namespace

QuadResult<BigFloat> integrate(const RealIntegrand& f, const BigFloat& a, const BigFloat& b,
                               const QuadOptions& opts) {
  const Precision work = opts.target + opts.guard_digits;
  BigFloat lo = a.at(work), width = (b - a).at(work);
  auto g = [&](const BigFloat& s) { return f(lo + width * s) * width; };
  return unit_interval<BigFloat>(g, opts);
}

QuadResult<Complex> integrate_path(const ComplexIntegrand& f, const std::vector<Complex>& vertices,
                                   const QuadOptions& opts) {
  if (vertices.size() < 2) throw std::invalid_argument("integrate_path: need at least two vertices");
  const Precision work = opts.target + opts.guard_digits;
  QuadResult<Complex> total{Complex(work), BigFloat(0L, work), 0, 0};
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    Complex z0(vertices[k].re.at(work), vertices[k].im.at(work));
    Complex dz = Complex(vertices[k + 1].re.at(work), vertices[k + 1].im.at(work)) - z0;
    auto g = [&](const BigFloat& s) { return f(z0 + dz * s) * dz; };
    auto part = unit_interval<Complex>(g, opts);
    total.value += part.value;
    total.error += part.error;
    total.levels = std::max(total.levels, part.levels);
    total.nodes += part.nodes;
  }
  return total;
}

}  // namespace logforms
