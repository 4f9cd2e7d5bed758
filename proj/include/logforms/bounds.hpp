#pragma once

#include <string>
#include <utility>
#include <vector>

#include "logforms/asymptotics.hpp"
#include "logforms/gauss_forms.hpp"

namespace logforms {

/// The forms I(m_rate n, n0_rate n, n1_rate n; a).
struct GaussFamily {
  long m_rate = 1;
  long n0_rate = 1;
  long n1_rate = 1;
  Rational a = 2;
  bool improved = true;   // divide by Phi

  HGParams at(long n) const { return HGParams::make(m_rate * n, n0_rate * n, n1_rate * n, a); }
};

struct GaussBound {
  BoundReport report;
  IntervalMax decay;     // log max of x^n0 (1-x)^n1 / |1-(1-a)x|^m per n
  IntervalMax growth;    // binomial growth of the coefficients per n
  BigFloat phi_saving;
};

/// Ledger: integral decay, coefficient growth, (1-a)-power, d-power, lcm growth, phi saving.
GaussBound gauss_family_bound(const GaussFamily& family, Precision p);

/// One of the command-line targets, with free-form detail lines for display.
struct NamedBound {
  std::string target;
  std::string description;
  BoundReport report;
  std::vector<std::pair<std::string, std::string>> details;
};

const std::vector<std::string>& bound_targets();

/// Throws std::invalid_argument for an unknown target.
NamedBound named_bound(const std::string& target, Precision p);

}  // namespace logforms
