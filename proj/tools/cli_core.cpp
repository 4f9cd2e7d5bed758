#include "cli_core.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "logforms/gauss_forms.hpp"
#include "logforms/hata_forms.hpp"
#include "logforms/hyper_oracle.hpp"
#include "logforms/rhin_forms.hpp"
#include "logforms/valuation.hpp"

namespace logforms::cli {

namespace {

const std::set<std::string>& config_keys() {
  static const std::set<std::string> k{"precision", "format", "seed",  "n",       "target", "family", "suite",
                                       "degree",    "coeff-bound", "segment", "series", "terms", "params", "count"};
  return k;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw UsageError(key + ": expected an integer, got '" + v + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

Rational rational_arg(const std::string& key, const std::string& v) {
  try {
    return parse_rational(v);
  } catch (const std::exception&) {
    throw UsageError(key + ": expected a rational, got '" + v + "'");
  }
}

std::string opt(const RunConfig& cfg, const std::string& key, const std::string& fallback) {
  auto it = cfg.options.find(key);
  return it == cfg.options.end() ? fallback : it->second;
}

long opt_long(const RunConfig& cfg, const std::string& key, long fallback) {
  auto it = cfg.options.find(key);
  return it == cfg.options.end() ? fallback : to_long(key, it->second);
}

std::pair<long, long> n_range(const RunConfig& cfg, long lo, long hi) {
  return cfg.n ? *cfg.n : std::make_pair(lo, hi);
}

std::string num(const BigFloat& x, long digits) { return x.to_string(static_cast<int>(digits)); }

}  // namespace

void RunConfig::validate() const {
  if (precision < 20) throw UsageError("precision must be at least 20 digits");
  if (precision > 5000) throw UsageError("precision above 5000 digits is not supported");
  if (format != "human" && format != "json" && format != "csv") throw UsageError("format must be human, json or csv");
  if (n && (n->first < 0 || n->first > n->second)) throw UsageError("n range must satisfy 0 <= lo <= hi");
}

bool is_config_key(const std::string& key) { return config_keys().count(key) != 0; }

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (!is_config_key(key)) throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::pair<long, long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = to_long("n", trim(text));
    return {v, v};
  }
  return {to_long("n", trim(text.substr(0, dots))), to_long("n", trim(text.substr(dots + 2)))};
}

// ---- bound ----

Json bound_to_json(const NamedBound& b, long digits) {
  Json j;
  j["target"] = b.target;
  j["description"] = b.description;
  j["precision"] = digits;
  j["C0"] = num(b.report.C0, digits);
  if (b.report.C0_prime) j["C0_prime"] = num(*b.report.C0_prime, digits);
  j["C1"] = num(b.report.C1, digits);
  j["mu"] = num(b.report.mu, digits);
  Json terms = Json::array();
  for (const auto& t : b.report.terms)
    terms.push_back(Json{{"name", t.name}, {"to_c0", num(t.to_c0, digits)}, {"to_c1", num(t.to_c1, digits)}});
  j["terms"] = terms;
  Json details = Json::array();
  for (const auto& [k, v] : b.details) details.push_back(Json{{"name", k}, {"value", v}});
  j["details"] = details;
  return j;
}

NamedBound bound_from_json(const Json& j, Precision p) {
  auto big = [&](const Json& x) { return BigFloat::parse(x.get<std::string>(), p); };
  NamedBound b;
  b.target = j.at("target").get<std::string>();
  b.description = j.at("description").get<std::string>();
  b.report.C0 = big(j.at("C0"));
  if (j.contains("C0_prime")) b.report.C0_prime = big(j.at("C0_prime"));
  b.report.C1 = big(j.at("C1"));
  b.report.mu = big(j.at("mu"));
  for (const auto& t : j.at("terms")) b.report.terms.push_back({t.at("name").get<std::string>(), big(t.at("to_c0")), big(t.at("to_c1"))});
  for (const auto& d : j.at("details")) b.details.emplace_back(d.at("name").get<std::string>(), d.at("value").get<std::string>());
  return b;
}

CommandResult cmd_bound(const std::string& target, const RunConfig& cfg) {
  const auto& t = bound_targets();
  if (std::find(t.begin(), t.end(), target) == t.end()) throw UsageError("unknown bound target '" + target + "'");
  NamedBound b = named_bound(target, Precision(cfg.precision));
  return {bound_to_json(b, cfg.precision), 0};
}

// ---- forms ----

namespace {

Json gauss_rows(const GaussFamily& f, std::pair<long, long> range, long digits) {
  Json rows = Json::array();
  for (long n = range.first; n <= range.second; ++n) {
    HGParams h = f.at(n);
    LogLinearForm form = linear_form(h);
    InclusionReport inc = inclusion_check(h, f.improved);
    rows.push_back(Json{{"n", n},
                        {"target", to_string(form.target)},
                        {"log_coeff", to_string(form.log_coeff)},
                        {"const_coeff", to_string(form.const_coeff)},
                        {"scale", to_string(inc.scale)},
                        {"scaled_log_coeff", inc.integral ? inc.log_coeff.get_str() : ""},
                        {"scaled_const_coeff", inc.integral ? inc.const_coeff.get_str() : ""},
                        {"integral", inc.integral},
                        {"value", num(form_value(form, Precision(digits)), digits)}});
  }
  return rows;
}

Json hata_rows(const HataFamily& f, std::pair<long, long> range, long digits) {
  Json rows = Json::array();
  for (long n = std::max(range.first, 1L); n <= range.second; ++n) {
    HataConfig c = f.at(n);
    SimultaneousForms sf = simultaneous_forms(c);
    long total = 0;
    for (long e : c.exponents) total += e;
    // D_N times d^(n0+n1+n2), d the common denominator of the points
    Integer d = 1;
    for (const auto& a : c.points) d = lcm(d, a.denominator());
    const Integer D = lcm_upto(static_cast<unsigned long>(std::max(c.m, total - c.m))) * pow(d, static_cast<unsigned long>(total));
    for (std::size_t j = 0; j < c.points.size(); ++j) {
      GaussianLogForm form{sf.log_coeff, sf.const_coeffs[j], c.points[j]};
      const GaussianRational s{Rational(D)};
      bool integral = (sf.log_coeff * s).is_gaussian_integer() && (sf.const_coeffs[j] * s).is_gaussian_integer();
      rows.push_back(Json{{"n", n},
                          {"target", to_string(c.points[j])},
                          {"log_coeff", to_string(sf.log_coeff)},
                          {"const_coeff", to_string(sf.const_coeffs[j])},
                          {"scale", D.get_str()},
                          {"integral", integral},
                          {"abs_value", num(abs(form_value(form, Precision(digits))), digits)}});
    }
  }
  return rows;
}

Json rhin_rows(const RhinFamily& f, std::pair<long, long> range, long digits) {
  Json rows = Json::array();
  for (long n = std::max(range.first, 1L); n <= range.second; ++n) {
    HnForms s = hn_simultaneous_forms(hn_validate(f.at(n), n, f.delta()), f.points);
    for (const auto& form : s.forms) {
      Rational L = form.log_coeff * s.scale, C = form.const_coeff * s.scale;
      L.canonicalize();
      C.canonicalize();
      rows.push_back(Json{{"n", n},
                          {"target", to_string(form.target)},
                          {"log_coeff", to_string(form.log_coeff)},
                          {"const_coeff", to_string(form.const_coeff)},
                          {"scale", s.scale.get_str()},
                          {"scaled_log_coeff", to_string(L)},
                          {"scaled_const_coeff", to_string(C)},
                          {"integral", s.integral},
                          {"value", num(form_value(form, Precision(digits)), digits)}});
    }
  }
  return rows;
}

}  // namespace

CommandResult cmd_forms(const std::string& family, const RunConfig& cfg) {
  auto range = n_range(cfg, 1, 5);
  const GaussianRational two(2), opi(Rational(1), Rational(1));
  Json doc;
  doc["family"] = family;
  doc["n"] = Json::array({range.first, range.second});
  if (family == "rukhadze") doc["rows"] = gauss_rows(GaussFamily{7, 6, 8, Rational(2), true}, range, cfg.precision);
  else if (family == "simple") doc["rows"] = gauss_rows(GaussFamily{1, 1, 1, Rational(2), false}, range, cfg.precision);
  else if (family == "hata") doc["rows"] = hata_rows(HataFamily{{two, opi}, {2, 2, 2}, 3}, range, cfg.precision);
  else if (family == "hu")
    doc["rows"] = hata_rows(HataFamily{{GaussianRational(Rational(4, 3)), GaussianRational(Rational(3, 2))}, {2, 2, 2}, 3}, range, cfg.precision);
  else if (family == "rhin") doc["rows"] = rhin_rows(RhinFamily::log3(), range, cfg.precision);
  else if (family == "rhin-simple") doc["rows"] = rhin_rows(RhinFamily::simple_log2(), range, cfg.precision);
  else throw UsageError("unknown family '" + family + "' (rukhadze, simple, hata, hu, rhin, rhin-simple)");
  return {doc, 0};
}

// ---- verify ----

namespace {

struct Suite {
  Json failures = Json::array();
  long cases = 0;
  void check(bool ok, Json params) {
    ++cases;
    if (!ok) failures.push_back(std::move(params));
  }
};

Rational pick_a(std::mt19937_64& rng) {
  static const std::vector<Rational> pool{Rational(2), Rational(3, 2), Rational(4, 3), Rational(2, 3)};
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

HGParams random_tuple(std::mt19937_64& rng, long max_n1) {
  auto u = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  long n1 = u(0, max_n1);
  return HGParams::make(u(0, n1), u(0, n1), n1, pick_a(rng));
}

void suite_inclusions(Suite& s, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const long count = opt_long(cfg, "count", 200), max_n1 = cfg.n ? cfg.n->second : 40;
  for (long i = 0; i < count; ++i) {
    HGParams h = random_tuple(rng, max_n1);
    for (bool improved : {false, true}) {
      InclusionReport r = inclusion_check(h, improved);
      s.check(r.integral, Json{{"check", improved ? "improved inclusion" : "inclusion"}, {"params", h.to_string()}, {"detail", r.detail}});
    }
  }
  std::uniform_int_distribution<long> coef(-20, 20);
  for (long i = 0; i < 20; ++i) {
    std::vector<Integer> g;
    long deg = 1 + i % 10;
    for (long k = 0; k <= deg; ++k) g.emplace_back(coef(rng));
    IntPolynomial G(std::move(g));
    GnForm f = gn_linear_form(G, deg);
    s.check(f.integral, Json{{"check", "G_n inclusion"}, {"G", to_string(G, "y")}});
  }
  RhinFamily fam = RhinFamily::log3();
  for (long n = 1; n <= 12; ++n) {
    HnForms f = hn_simultaneous_forms(hn_validate(fam.at(n), n, fam.delta()), fam.points);
    s.check(f.integral, Json{{"check", "H_n inclusion"}, {"n", n}});
  }
}

void suite_symmetry(Suite& s, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const long count = opt_long(cfg, "count", 100), max_n1 = cfg.n ? cfg.n->second : 40;
  for (long i = 0; i < count; ++i) {
    HGParams h = random_tuple(rng, max_n1);
    s.check(symmetry_check(h), Json{{"check", "symmetry"}, {"params", h.to_string()}});
  }
}

void suite_oracle(Suite& s, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const long max_n = cfg.n ? cfg.n->second : 8;
  const Precision p(cfg.precision + 10);
  const double need = 30;
  for (long i = 0; i < 12; ++i) {
    HGParams h = random_tuple(rng, max_n);
    double d = agreeing_digits(form_value(linear_form(h), p), integral_value(h, p));
    s.check(d >= need, Json{{"check", "exact vs quadrature"}, {"params", h.to_string()}, {"digits", d}});
  }
  const GaussianRational two(2), opi(Rational(1), Rational(1));
  HataFamily hata{{two, opi}, {2, 2, 2}, 3};
  for (long n = 1; n <= std::min(max_n, 5L); ++n) {
    HataConfig c = hata.at(n);
    for (const auto& t : c.points) {
      Complex exact = form_value(expand_form(c, t), p), quad = contour_integral(c, t, p);
      double d = -(abs(exact - quad).log10_abs() - abs(quad).log10_abs());
      s.check(d >= need, Json{{"check", "exact vs contour"}, {"n", n}, {"target", to_string(t)}, {"digits", d}});
    }
  }
  RhinFamily fam = RhinFamily::log3();
  for (long n = 1; n <= max_n; ++n) {
    IntPolynomial H = fam.at(n);
    HnForms f = hn_simultaneous_forms(hn_validate(H, n, fam.delta()), fam.points);
    for (const auto& form : f.forms) {
      double d = agreeing_digits(form_value(form, p), hn_integral_value(H, n, fam.d(), form.target, p));
      s.check(d >= need, Json{{"check", "exact vs segment quadrature"}, {"n", n}, {"target", to_string(form.target)}, {"digits", d}});
    }
  }
}

void suite_denominators(Suite& s, const RunConfig& cfg) {
  const long max_n = cfg.n ? cfg.n->second : 30;
  const GaussianRational two(2), opi(Rational(1), Rational(1));
  HataFamily hata{{two, opi}, {2, 2, 2}, 3};
  for (long n = cfg.n ? std::max(1L, cfg.n->first) : 1; n <= max_n; ++n) {
    HataConfig c = hata.at(n);
    for (const auto& t : {GaussianRational(1), two, opi}) {
      DenominatorWitness w = denominator_witness(c, t);
      s.check(w.proviso_ok && w.identities_hold && w.all_integral,
              Json{{"check", "Z[i] identities"}, {"n", n}, {"target", to_string(t)}, {"detail", w.failure}});
    }
  }
}

std::string pieces_text(const StepFunction& f) {
  std::string out;
  for (const auto& pc : f.pieces) {
    if (!out.empty()) out += " ";
    out += "[" + to_string(pc.lo) + "," + to_string(pc.hi) + ")=" + std::to_string(pc.value);
  }
  return out;
}

void suite_profiles(Suite& s, const RunConfig&) {
  auto R = [](long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
  };
  StepFunction ruk = phi_step_profile(7, 6, 8);
  std::vector<StepPiece> ruk_expected{{R(1, 8), R(1, 7), 1}, {R(1, 4), R(2, 7), 1}, {R(3, 8), R(3, 7), 1},
                                      {R(1, 2), R(4, 7), 1}, {R(2, 3), R(5, 7), 1}, {R(5, 6), R(6, 7), 1}};
  s.check(ruk.pieces == ruk_expected, Json{{"check", "profile (7,6,8)"}, {"got", pieces_text(ruk)}});
  VarpiProfile h = minimize_varpi(2, 2, 2, 3);
  std::vector<StepPiece> h_expected{{R(1, 2), R(2, 3), 1}};
  s.check(h.profile.pieces == h_expected, Json{{"check", "varpi (2,2,2;3)"}, {"got", pieces_text(h.profile)}});
}

}  // namespace

CommandResult cmd_verify(const std::string& suite, const RunConfig& cfg) {
  Suite s;
  if (suite == "inclusions") suite_inclusions(s, cfg);
  else if (suite == "symmetry") suite_symmetry(s, cfg);
  else if (suite == "oracle") suite_oracle(s, cfg);
  else if (suite == "denominators") suite_denominators(s, cfg);
  else if (suite == "profiles") suite_profiles(s, cfg);
  else throw UsageError("unknown suite '" + suite + "' (inclusions, symmetry, oracle, denominators, profiles)");
  Json doc;
  doc["suite"] = suite;
  doc["seed"] = cfg.seed;
  doc["cases"] = s.cases;
  doc["passed"] = s.failures.empty();
  doc["failures"] = s.failures;
  return {doc, s.failures.empty() ? 0 : 1};
}

// ---- search ----

CommandResult cmd_search(const RunConfig& cfg) {
  const long degree = opt_long(cfg, "degree", 7), bound = opt_long(cfg, "coeff-bound", 10);
  SegmentUnion seg = log2_saddle_segment();
  if (cfg.options.count("segment")) {
    std::vector<std::pair<Rational, Rational>> parts;
    for (const auto& piece : split(cfg.options.at("segment"), ';')) {
      auto ends = split(piece, ',');
      if (ends.size() != 2) throw UsageError("segment: expected lo,hi[;lo,hi...]");
      parts.emplace_back(rational_arg("segment", ends[0]), rational_arg("segment", ends[1]));
    }
    try {
      seg = SegmentUnion::make(parts);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  GStarResult r;
  try {
    r = search_gstar(static_cast<int>(degree), bound, seg, Precision(cfg.precision));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json doc;
  doc["degree"] = degree;
  doc["coeff_bound"] = bound;
  Json parts = Json::array();
  for (const auto& [lo, hi] : seg.parts) parts.push_back(Json::array({to_string(lo), to_string(hi)}));
  doc["segment"] = parts;
  doc["best"] = to_string(r.best, "y");
  Json coeffs = Json::array();
  for (const auto& c : r.best.coeffs()) coeffs.push_back(c.get_str());
  doc["coefficients"] = coeffs;
  doc["sup"] = num(r.sup, cfg.precision);
  doc["sup_root"] = num(r.sup_root, cfg.precision);
  doc["box_size"] = r.box_size;
  return {doc, 0};
}

// ---- oracle ----

CommandResult cmd_oracle(const std::string& kind, const RunConfig& cfg) {
  const Precision p(cfg.precision);
  Json doc;
  doc["kind"] = kind;
  auto params = split(opt(cfg, "params", ""), ',');
  auto need = [&](std::size_t k, const std::string& shape) {
    if (params.size() != k || (k && params[0].empty())) throw UsageError(kind + ": --params " + shape);
  };
  if (kind == "ramanujan") {
    const long series = opt_long(cfg, "series", 39), terms = opt_long(cfg, "terms", series == 39 ? 5 : 4);
    if (series != 39 && series != 44) throw UsageError("series must be 39 or 44");
    if (terms < 1) throw UsageError("terms must be positive");
    BigFloat v = ramanujan_pi(series == 39 ? RamanujanSeries::kSeries39 : RamanujanSeries::kSeries44, terms, p);
    BigFloat ref = series == 39 ? BigFloat(4L, p) / pi(p) : BigFloat(1L, p) / (pi(p) * sqrt(BigFloat(8L, p)));
    doc["series"] = series;
    doc["terms"] = terms;
    doc["value"] = num(v, cfg.precision);
    doc["reference"] = num(ref, cfg.precision);
    doc["digits"] = static_cast<long>(std::floor(agreeing_digits(v, ref)));
  } else if (kind == "2f1") {
    need(4, "A,B,C,z");
    Rational A = rational_arg("A", params[0]), B = rational_arg("B", params[1]), C = rational_arg("C", params[2]),
             z = rational_arg("z", params[3]);
    try {
      doc["value"] = num(gauss_2f1(A, B, C, z, p), cfg.precision);
    } catch (const DivergentSeries& e) {
      throw UsageError(e.what());
    }
  } else if (kind == "euler") {
    need(4, "m,n0,n1,a");
    HGParams h;
    try {
      h = HGParams::make(to_long("m", params[0]), to_long("n0", params[1]), to_long("n1", params[2]), rational_arg("a", params[3]));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    BigFloat viaF = euler_integral_2f1(h.m, h.n0, h.n1, h.a, p), exact = form_value(linear_form(h), p);
    doc["params"] = h.to_string();
    doc["hypergeometric"] = num(viaF, cfg.precision);
    doc["exact_form"] = num(exact, cfg.precision);
    doc["digits"] = static_cast<long>(std::floor(agreeing_digits(viaF, exact)));
  } else if (kind == "f1") {
    need(6, "m,n0,n1,n2,a,b");
    long m = to_long("m", params[0]), n0 = to_long("n0", params[1]), n1 = to_long("n1", params[2]), n2 = to_long("n2", params[3]);
    GaussianRational a, b;
    try {
      a = parse_gaussian(params[4]);
      b = parse_gaussian(params[5]);
    } catch (const std::exception&) {
      throw UsageError("f1: a and b must be Gaussian rationals such as 3/2 or 1+i");
    }
    Complex viaF(p), exact(p);
    try {
      viaF = two_point_integral_f1(m, n0, n1, n2, a, b, p);
      exact = form_value(expand_form(HataConfig::make({a, b}, {n0, n1, n2}, m), a), p);
    } catch (const std::exception& e) {
      throw UsageError(std::string("f1: ") + e.what());
    }
    doc["hypergeometric"] = viaF.to_string(static_cast<int>(cfg.precision));
    doc["exact_form"] = exact.to_string(static_cast<int>(cfg.precision));
    double d = -(abs(viaF - exact).log10_abs() - abs(exact).log10_abs());
    doc["digits"] = static_cast<long>(std::floor(std::min<double>(d, static_cast<double>(cfg.precision))));
  } else {
    throw UsageError("unknown oracle '" + kind + "' (ramanujan, 2f1, euler, f1)");
  }
  return {doc, 0};
}

// ---- rendering ----

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void human(const Json& v, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& x = it.value();
    if (x.is_object()) {
      out << pad << it.key() << ":\n";
      human(x, indent + 2, out);
    } else if (x.is_array() && !x.empty() && x.front().is_object()) {
      out << pad << it.key() << ":\n";
      for (const auto& row : x) {
        std::string line;
        for (auto r = row.begin(); r != row.end(); ++r) line += (line.empty() ? "" : "  ") + r.key() + "=" + scalar(r.value());
        out << pad << "  - " << line << "\n";
      }
    } else if (x.is_array()) {
      std::string line;
      for (const auto& e : x) line += (line.empty() ? "" : ", ") + scalar(e);
      out << pad << it.key() << ": [" << line << "]\n";
    } else {
      out << pad << it.key() << ": " << scalar(x) << "\n";
    }
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::ostringstream out;
  if (format == "human") {
    human(doc, 0, out);
    return out.str();
  }
  for (const char* key : {"rows", "terms", "failures"}) {
    if (doc.contains(key) && doc[key].is_array() && !doc[key].empty()) {
      const Json& rows = doc[key];
      std::vector<std::string> cols;
      for (auto it = rows.front().begin(); it != rows.front().end(); ++it) cols.push_back(it.key());
      for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_cell(cols[i]);
      out << "\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_cell(row.contains(cols[i]) ? scalar(row[cols[i]]) : "");
        out << "\n";
      }
      return out.str();
    }
  }
  out << "key,value\n";
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!it.value().is_structured()) out << csv_cell(it.key()) << "," << csv_cell(scalar(it.value())) << "\n";
  return out.str();
}

}  // namespace logforms::cli
