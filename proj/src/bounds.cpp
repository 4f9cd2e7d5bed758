#include "logforms/bounds.hpp"

#include <stdexcept>

#include "logforms/hata_forms.hpp"
#include "logforms/rhin_forms.hpp"
#include "logforms/valuation.hpp"

namespace logforms {

GaussBound gauss_family_bound(const GaussFamily& f, Precision p) {
  HGParams::make(f.m_rate, f.n0_rate, f.n1_rate, f.a);   // validates the rates
  const Precision w = p + 10;
  const Rational c = f.a == 1 ? Rational(0) : Rational(1 - f.a);
  Rational pole = 1 / c;
  pole.canonicalize();

  ExponentProduct decay;
  decay.factors = {{GaussianRational(0), Rational(f.n0_rate)},
                   {GaussianRational(1), Rational(f.n1_rate)},
                   {GaussianRational(pole), Rational(-f.m_rate)}};
  decay.scale = pow(c, -f.m_rate);

  BinomialPattern growth;
  growth.factors = {{{1, Rational(0)}, {0, Rational(f.m_rate)}}, {{0, Rational(f.n1_rate)}, {1, Rational(-f.n0_rate)}}};
  growth.base = pole;

  GaussBound out;
  out.decay = log_max_on_interval(decay, Rational(0), Rational(1), w);
  out.growth = binomial_growth_max(growth, Rational(std::max(f.m_rate, f.n0_rate)), Rational(f.n0_rate + f.n1_rate), w);
  out.phi_saving = f.improved ? valuation_asymptotic(phi_step_profile(f.m_rate, f.n0_rate, f.n1_rate), w) : BigFloat(0L, w);

  const long star = f.n0_rate + f.n1_rate - std::min(f.m_rate, f.n0_rate);
  const BigFloat one_minus_a = log_of(Rational(abs(c.get_num()), c.get_den()), w) * (f.n0_rate + f.n1_rate);
  const BigFloat d_pow = log_of(Rational(f.a.get_den()), w) * star;
  const BigFloat lcm(star, w);
  std::vector<BoundTerm> terms{
      {"integral decay", -out.decay.value, BigFloat(0L, w)},
      {"coefficient growth", BigFloat(0L, w), out.growth.value},
      {"(1-a)-power", -one_minus_a, one_minus_a},
      {"d-power", -d_pow, d_pow},
      {"lcm growth", -lcm, lcm},
  };
  if (f.improved) terms.push_back({"phi saving", out.phi_saving, -out.phi_saving});
  out.report = assemble_bound(terms);
  return out;
}

const std::vector<std::string>& bound_targets() {
  static const std::vector<std::string> t{"log2-rukhadze", "log2-simple", "pi-hata", "log2log3-hu", "log3-rhin"};
  return t;
}

namespace {

NamedBound from_gauss(const std::string& id, const std::string& what, const GaussFamily& f, Precision p) {
  GaussBound g = gauss_family_bound(f, p);
  NamedBound out{id, what, g.report, {}};
  out.details.emplace_back("decay argmax", g.decay.argmax ? g.decay.argmax->to_string(20) : "boundary");
  out.details.emplace_back("growth argmax", g.growth.argmax ? g.growth.argmax->to_string(20) : "boundary");
  return out;
}

NamedBound from_hata(const std::string& id, const std::string& what, const HataFamily& f, Precision p) {
  HataBound h = hata_bound(f, p);
  NamedBound out{id, what, h.report, {}};
  for (const auto& form : h.forms)
    out.details.emplace_back("rate " + form.name, form.saddle_value.to_string(15) + " (finite n " + std::to_string(form.empirical) + ")");
  out.details.emplace_back("coefficient rate", h.coefficients.saddle_value.to_string(15));
  for (const auto& [name, v] : h.d_power_detail) out.details.emplace_back("d-power " + name, v.to_string(15));
  return out;
}

}  // namespace

NamedBound named_bound(const std::string& target, Precision p) {
  const GaussianRational two(2), opi(Rational(1), Rational(1));
  if (target == "log2-rukhadze") return from_gauss(target, "I(7n, 6n, 8n; 2) with the Phi saving", GaussFamily{7, 6, 8, Rational(2), true}, p);
  if (target == "log2-simple") return from_gauss(target, "I(n, n, n; 2)", GaussFamily{1, 1, 1, Rational(2), false}, p);
  if (target == "pi-hata") return from_hata(target, "points 2, 1+i; exponents (2n, 2n, 2n; 3n)", HataFamily{{two, opi}, {2, 2, 2}, 3}, p);
  if (target == "log2log3-hu") {
    Rational a(4, 3), b(3, 2);
    return from_hata(target, "points 4/3, 3/2; exponents (2n, 2n, 2n; 3n)", HataFamily{{GaussianRational(a), GaussianRational(b)}, {2, 2, 2}, 3}, p);
  }
  if (target == "log3-rhin") {
    RhinBound r = rhin_bound(RhinFamily::log3(), p);
    NamedBound out{target, "points 2/3, 4/3; six-factor polynomial", r.report, {}};
    for (const auto& s : r.segments)
      out.details.emplace_back("envelope on [1, " + to_string(s.a) + "]", s.value.to_string(15));
    out.details.emplace_back("cauchy rate", r.cauchy_rate.to_string(15));
    out.details.emplace_back("cauchy radius", r.cauchy_radius.to_string(15));
    if (r.saddle) out.details.emplace_back("saddle", r.saddle->point.to_string(15));
    return out;
  }
  throw std::invalid_argument("unknown bound target '" + target + "'");
}

}  // namespace logforms
