// Acceptance run: one PASS/FAIL line per criterion.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <CLI11.hpp>
#include <mpfr.h>

#include "cli_core.hpp"
#include "logforms/bounds.hpp"
#include "logforms/expectations.hpp"
#include "logforms/hata_forms.hpp"
#include "logforms/hyper_oracle.hpp"
#include "logforms/rhin_forms.hpp"
#include "logforms/valuation.hpp"

using namespace logforms;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& note) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "" : "[x] ") + note);
  }
};

std::string fmt(double x, int digits = 10) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

double num(const BigFloat& x) { return x.to_double(); }

/// |got - want| <= tol, noted as "name got (want +- tol)".
void near(Outcome& o, const std::string& name, double got, const Expectation& e) {
  o.check(std::fabs(got - e.as_double()) <= e.tol(), name + " " + fmt(got, 12) + " (want " + e.value + " +- " + e.tolerance + ")");
}

const Precision kP(40);

// ---- independent routes for criterion 2 ----

long double golden_max(const std::function<long double(long double)>& f, long double a, long double b) {
  const long double g = (std::sqrt(5.0L) - 1) / 2;
  long double c = b - g * (b - a), d = a + g * (b - a), fc = f(c), fd = f(d);
  for (int i = 0; i < 200 && b - a > 1e-15L; ++i) {
    if (fc > fd) {
      b = d, d = c, fd = fc, c = b - g * (b - a), fc = f(c);
    } else {
      a = c, c = d, fc = fd, d = a + g * (b - a), fd = f(d);
    }
  }
  return f((a + b) / 2);
}

long double entropy(long double T, long double B) {
  auto xl = [](long double x) { return x > 0 ? x * std::log(x) : 0.0L; };
  return xl(T) - xl(B) - xl(T - B);
}

double mpfr_psi(double x) {
  mpfr_t v;
  mpfr_init2(v, 128);
  mpfr_set_d(v, x, MPFR_RNDN);
  mpfr_digamma(v, v, MPFR_RNDN);
  double r = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return r;
}

// integral of [6x] + [8x] - [7x] - [7x] (clipped at 0) against d psi, breakpoints from the four rates
double phi_saving_direct(long m, long n0, long n1) {
  std::set<double> cuts{0.0, 1.0};
  for (long r : {m, n0, n1, n0 + n1 - m})
    for (long k = 1; k < r; ++k) cuts.insert(static_cast<double>(k) / static_cast<double>(r));
  std::vector<double> c(cuts.begin(), cuts.end());
  double total = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    double mid = (c[i] + c[i + 1]) / 2;
    long v = static_cast<long>(std::floor(mid * n0) + std::floor(mid * n1) - std::floor(mid * m) - std::floor(mid * (n0 + n1 - m)));
    if (v > 0) total += static_cast<double>(v) * (mpfr_psi(c[i + 1]) - mpfr_psi(c[i]));
  }
  return total;
}

// ---- criteria ----

Outcome criterion1(const Expectations& ex) {
  Outcome o;
  NamedBound b = named_bound("log2-rukhadze", kP);
  near(o, "mu", num(b.report.mu), ex.at("rukhadze.mu"));
  near(o, "C0", num(b.report.C0), ex.at("rukhadze.C0"));
  near(o, "C1", num(b.report.C1), ex.at("rukhadze.C1"));
  return o;
}

Outcome criterion2(const Expectations& ex) {
  Outcome o;
  GaussBound g = gauss_family_bound(GaussFamily{7, 6, 8, Rational(2), true}, kP);
  long double decay = golden_max([](long double x) { return 6 * std::log(x) + 8 * std::log1p(-x) - 7 * std::log1p(x); }, 1e-12L, 1 - 1e-12L);
  long double growth = golden_max([](long double y) { return entropy(y, 7) + entropy(8, y - 6); }, 7, 14);
  double phi = phi_saving_direct(7, 6, 8);
  near(o, "decay closed form", num(g.decay.value), ex.at("rukhadze.decay"));
  near(o, "decay optimizer", static_cast<double>(decay), ex.at("rukhadze.decay"));
  near(o, "growth closed form", num(g.growth.value), ex.at("rukhadze.growth"));
  near(o, "growth optimizer", static_cast<double>(growth), ex.at("rukhadze.growth"));
  near(o, "phi closed form", num(g.phi_saving), ex.at("rukhadze.phi_saving"));
  near(o, "phi direct", phi, ex.at("rukhadze.phi_saving"));
  return o;
}

Outcome criterion3(const Expectations& ex) {
  Outcome o;
  near(o, "mu", num(named_bound("log2-simple", kP).report.mu), ex.at("simple.mu"));
  return o;
}

Outcome verify_suite(const std::string& suite, long count, std::optional<std::pair<long, long>> n) {
  Outcome o;
  cli::RunConfig cfg;
  cfg.seed = 2024;
  cfg.n = n;
  if (count) cfg.options["count"] = std::to_string(count);
  auto r = cli::cmd_verify(suite, cfg);
  o.check(r.exit_code == 0, suite + ": " + r.doc.at("cases").dump() + " cases, " + std::to_string(r.doc.at("failures").size()) + " failures");
  for (const auto& f : r.doc.at("failures")) o.notes.push_back("  " + f.dump());
  return o;
}

Outcome criterion4(const Expectations&) {
  Outcome o = verify_suite("inclusions", 200, std::make_pair(0L, 40L));
  Outcome s = verify_suite("symmetry", 100, std::make_pair(0L, 40L));
  o.pass = o.pass && s.pass;
  o.notes.insert(o.notes.end(), s.notes.begin(), s.notes.end());
  return o;
}

Outcome criterion5(const Expectations&) { return verify_suite("oracle", 0, std::make_pair(1L, 8L)); }

Outcome criterion6(const Expectations& ex) {
  Outcome o;
  near(o, "pi-hata mu", num(named_bound("pi-hata", kP).report.mu), ex.at("hata.pi.mu"));
  near(o, "log2log3-hu mu", num(named_bound("log2log3-hu", kP).report.mu), ex.at("hata.hu.mu"));
  return o;
}

Outcome criterion7(const Expectations&) { return verify_suite("denominators", 0, std::make_pair(1L, 30L)); }

Outcome criterion8(const Expectations& ex) {
  Outcome o;
  RhinFamily fam = RhinFamily::log3();
  long good = 0;
  for (long n = 1; n <= 12; ++n) {
    try {
      HnForms f = hn_simultaneous_forms(hn_validate(fam.at(n), n, fam.delta()), fam.points);
      if (f.integral) ++good;
      else o.check(false, "n=" + std::to_string(n) + " not integral after D_n");
    } catch (const std::exception& e) {
      o.check(false, "n=" + std::to_string(n) + ": " + e.what());
    }
  }
  o.check(good == 12, "representation and integrality for n <= 12: " + std::to_string(good) + "/12");
  NamedBound b = named_bound("log3-rhin", kP);
  near(o, "log3-rhin mu", num(b.report.mu), ex.at("rhin.mu"));
  for (const auto& t : b.report.terms) o.notes.push_back("  ledger " + t.name + ": " + fmt(num(t.to_c0)) + ", " + fmt(num(t.to_c1)));
  return o;
}

Outcome criterion9(const Expectations& ex) {
  Outcome o;
  const Precision p(60);
  BigFloat v39 = ramanujan_pi(RamanujanSeries::kSeries39, 5, p), r39 = BigFloat(4L, p) / pi(p);
  BigFloat v44 = ramanujan_pi(RamanujanSeries::kSeries44, 4, p), r44 = BigFloat(1L, p) / (pi(p) * sqrt(BigFloat(8L, p)));
  double d39 = agreeing_digits(v39, r39), d44 = agreeing_digits(v44, r44);
  o.check(d39 >= ex.at("ramanujan.39.digits").as_double(), "series 39, 5 terms: " + fmt(d39, 4) + " digits");
  o.check(d44 >= ex.at("ramanujan.44.digits").as_double(), "series 44, 4 terms: " + fmt(d44, 4) + " digits");
  return o;
}

Outcome criterion10(const Expectations& ex) {
  Outcome o;
  const double tol = ex.at("decay.ratio.tolerance").as_double();
  GaussFamily ruk{7, 6, 8, Rational(2), true};
  const long n = 200;
  BigFloat In = abs(form_value(linear_form(ruk.at(n)), kP)), In1 = abs(form_value(linear_form(ruk.at(n + 1)), kP));
  double ratio = num(In1 / In), target = std::exp(ex.at("rukhadze.decay").as_double());
  o.check(std::fabs(ratio - target) <= tol, "ratio at n=200 " + fmt(ratio, 8) + " vs exp(decay) " + fmt(target, 8) + ", absolute difference " +
                                                fmt(std::fabs(ratio - target), 3));
  // the Laplace prefactor n^(-1/2) shifts the raw ratio by about 1/(2n)
  double corrected = ratio * std::sqrt(static_cast<double>(n + 1) / static_cast<double>(n));
  o.check(std::fabs(corrected / target - 1) <= tol,
          "relative: ratio*sqrt((n+1)/n) / exp(decay) - 1 = " + fmt(corrected / target - 1, 3) + " (raw " + fmt(ratio / target - 1, 3) + ")");

  const double htol = ex.at("decay.hata.tolerance").as_double();
  const GaussianRational two(2), opi(Rational(1), Rational(1));
  HataFamily hata{{two, opi}, {2, 2, 2}, 3};
  HataBound hb = hata_bound(hata, kP);
  const long hn = 80;
  HataConfig c = hata.at(hn);
  SimultaneousForms sf = simultaneous_forms(c);
  std::vector<Complex> J;
  for (std::size_t j = 0; j < c.points.size(); ++j) J.push_back(form_value(GaussianLogForm{sf.log_coeff, sf.const_coeffs[j], c.points[j]}, kP));
  for (const auto& rate : hb.forms) {
    Complex v = rate.name == "J1" ? J[0] : rate.name == "J2" ? J[1] : J[1] - J[0];
    double got = log(abs(v)).to_double() / static_cast<double>(hn), want = num(rate.saddle_value);
    o.check(std::fabs(got - want) <= htol, rate.name + " at n=80: log|J|/n " + fmt(got, 8) + " vs saddle " + fmt(want, 8));
  }
  return o;
}

struct Shell {
  std::string out;
  int code;
};

Shell shell(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return {"", -1};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

Outcome criterion11(const Expectations&) {
  Outcome o;
  std::istringstream list(LOGFORMS_TEST_BINARIES);
  std::string bin;
  while (std::getline(list, bin, ';')) {
    Shell r = shell(bin);
    std::string name = bin.substr(bin.find_last_of('/') + 1);
    o.check(r.code == 0, name + (r.code == 0 ? " passed" : " failed"));
  }
  for (const std::string args : {"verify inclusions --count 40 --seed 9 --format json", "forms hata --n 1..3 --format json",
                                 "bound log3-rhin --format json", "search --degree 6 --coeff-bound 8 --format json"}) {
    Shell a = shell(std::string(LOGFORMS_CLI_PATH) + " " + args), b = shell(std::string(LOGFORMS_CLI_PATH) + " " + args);
    o.check(a.code == 0 && a.out == b.out && !a.out.empty(), "byte-identical json: " + args);
  }
  return o;
}

std::set<int> parse_ids(const std::string& text) {
  std::set<int> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    int v = std::stoi(tok);
    if (v < 1 || v > 11) throw CLI::ValidationError("criterion ids are 1..11");
    out.insert(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string expect_fail, only;
  bool verbose = false;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail (comma separated); exit 0 when exactly these fail");
  app.add_option("--only", only, "run a subset");
  app.add_flag("-v,--verbose", verbose, "print every check");
  CLI11_PARSE(app, argc, argv);

  std::set<int> expected, selected;
  try {
    if (!expect_fail.empty()) expected = parse_ids(expect_fail);
    if (!only.empty()) selected = parse_ids(only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const Expectations ex = load_expectations();
  const std::vector<std::pair<std::string, std::function<Outcome(const Expectations&)>>> criteria{
      {"Rukhadze bound for log 2", criterion1},
      {"decay, growth and Phi constants by two routes", criterion2},
      {"simple (n,n,n) bound", criterion3},
      {"exact inclusions and symmetry", criterion4},
      {"exact forms against quadrature", criterion5},
      {"Gaussian-point bounds", criterion6},
      {"Z[i] denominator identities", criterion7},
      {"Rhin construction and bound", criterion8},
      {"Ramanujan series", criterion9},
      {"empirical decay rates", criterion10},
      {"property suites and deterministic output", criterion11},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(ex);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) failed.insert(id);
    std::cout << "criterion " << std::setw(2) << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << fmt(secs, 3) << " s)" << std::endl;
    for (const auto& note : o.notes)
      if (verbose || !o.pass || note.rfind("[x]", 0) == 0 || criteria[i].second == nullptr) std::cout << "    " << note << std::endl;
  }

  std::set<int> unexpected;
  for (int id : failed)
    if (!expected.count(id)) unexpected.insert(id);
  std::set<int> unexpected_pass;
  for (int id : expected)
    if ((selected.empty() || selected.count(id)) && !failed.count(id)) unexpected_pass.insert(id);
  std::cout << "summary: " << failed.size() << " failed";
  if (!expected.empty()) std::cout << ", expected failures " << expect_fail;
  std::cout << std::endl;
  if (!unexpected_pass.empty()) std::cout << "note: an expected failure now passes; update the expectation list" << std::endl;
  return unexpected.empty() && unexpected_pass.empty() ? 0 : 1;
}
