#pragma once

#include <string>

#include "logforms/bigfloat.hpp"
#include "logforms/exact.hpp"

namespace logforms {

/// Exact record of the number log_coeff * log(target) + const_coeff.
template <class F>
struct LinearForm {
  F log_coeff;
  F const_coeff;
  F target;

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.log_coeff == b.log_coeff && a.const_coeff == b.const_coeff && a.target == b.target;
  }
};

using LogLinearForm = LinearForm<Rational>;
using GaussianLogForm = LinearForm<GaussianRational>;

/// Value of the form to `digits` significant digits. The working precision is raised until the
/// cancellation between the two terms is covered.
BigFloat form_value(const LogLinearForm& form, Precision digits);
Complex form_value(const GaussianLogForm& form, Precision digits);

/// Principal log of a Gaussian rational.
Complex log_of(const GaussianRational& z, Precision p);

}  // namespace logforms
