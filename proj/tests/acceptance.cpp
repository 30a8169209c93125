// Acceptance suite: one pass/fail line per criterion, exit code equal
// to the number of failed criteria. Tolerances and caps are pinned in
// code; failures print the measured numbers.

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "museries/errors.hpp"
#include "museries/oracles.hpp"
#include "museries/specialfn.hpp"
#include "museries/studies.hpp"
#include "museries/transform.hpp"
#include "museries/verify.hpp"

using namespace museries;
using exactmath::rational;
using oracles::OracleValue;
using transform::StoppingRule;

namespace {

const PrecisionPolicy kPolicy{256};

struct Criterion {
  std::string id;
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Criterion> g_results;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void record(const std::string& id, bool pass, const std::string& detail, double secs) {
  g_results.push_back(Criterion{id, pass, detail, secs});
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << (pass ? "PASS " : "FAIL ") << id << " [" << secs << "s] - " << detail;
  std::cout << line.str() << std::endl;
}

StoppingRule stop_at(long tol_exp, int max_terms) {
  return StoppingRule{Real::pow10(tol_exp, 96), max_terms, 3};
}

std::string fmt(const Real& v) { return v.to_string(6); }

verify::CheckOptions default_opts() {
  verify::CheckOptions opts;
  opts.precision_bits = 256;
  return opts;
}

void from_check(const std::string& id, const std::string& check_name, double budget_s) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = verify::run_check(check_name, default_opts());
  const double secs = seconds_since(t0);
  const bool in_budget = budget_s <= 0 || secs < budget_s;
  std::string detail = result.detail;
  if (!in_budget) detail += " (over the " + std::to_string(budget_s) + "s budget)";
  record(id, result.pass && in_budget, detail, secs);
}

// 1. Transform identity suite: 4 elementary sources, 50 random pairs
//    each, |transform_eval - closed form| <= 1e-20, max 400 terms, < 30 s.
void criterion_01() { from_check("criterion-01 transform-identity-suite", "transform-identity", 30.0); }

// 2. zeta via the alternating double sum vs zeta_ref, <= 1e-25, < 5 s.
void criterion_02() {
  const auto t0 = std::chrono::steady_clock::now();
  Real max_delta(96);
  for (double s : {2.0, 3.0, 5.5}) {
    const Real z = specialfn::zeta_param(Real(s, 256), Real(1L, 256), stop_at(-28, 400), kPolicy);
    const auto ref = oracles::zeta_ref(Real(s, 96), Real::pow10(-30, 96));
    const Real delta = abs(z - ref.value.at_precision(256));
    if (delta > max_delta) max_delta = delta;
  }
  const double secs = seconds_since(t0);
  const bool pass = max_delta <= Real::pow10(-25, 96) && secs < 5.0;
  record("criterion-02 zeta-series", pass,
         "s in {2, 3, 5.5} at mu = 1: max |delta| = " + fmt(max_delta) + " (<= 1e-25)", secs);
}

// 3. Lerch grid vs the direct-sum oracle, <= 1e-12, < 60 s.
void criterion_03() {
  const auto t0 = std::chrono::steady_clock::now();
  Real max_delta(96);
  int cells = 0;
  std::string worst;
  for (double x : {-0.4, 0.0, 0.4, 1.0}) {
    for (double a : {0.5, 1.0, 2.5}) {
      for (double s : {1.5, 2.0, 4.0}) {
        const Real v = specialfn::lerch_param(Real(x, 256), Real(a, 256), Real(s, 256),
                                              stop_at(-15, 400), kPolicy);
        const auto ref = oracles::lerch_ref(Real(-x, 96), Real(a, 96), Real(s, 96),
                                            Real::pow10(-18, 96));
        const Real delta = abs(v - ref.value.at_precision(256));
        ++cells;
        if (delta > max_delta) {
          max_delta = delta;
          worst = "(x=" + std::to_string(x) + ", a=" + std::to_string(a) +
                  ", s=" + std::to_string(s) + ")";
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = max_delta <= Real::pow10(-12, 96) && secs < 60.0;
  record("criterion-03 lerch-grid", pass,
         std::to_string(cells) + " grid cells: max |delta| = " + fmt(max_delta) +
             " at " + worst + " (<= 1e-12)",
         secs);
}

// 4. pi series: <= 1e-12 within a 200-term hard cap at mu = 1, plus
//    mu = 1/2 and 1/3 to 1e-10.
void criterion_04() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto pi = oracles::pi_ref(Real::pow10(-30, 96));
  std::ostringstream detail;

  bool capped_ok = false;
  try {
    const auto rep = specialfn::pi_param_report(Real(1L, 256), stop_at(-14, 200), kPolicy);
    const Real delta = abs(rep.value - pi.value.at_precision(256));
    capped_ok = delta <= Real::pow10(-12, 96);
    detail << "mu=1 within 200 terms: |delta| = " << fmt(delta);
  } catch (const transform::NotConverged& e) {
    const Real delta = abs(e.report().value - pi.value.at_precision(256));
    detail << "mu=1 not converged at the 200-term cap (|delta| = " << fmt(delta) << ")";
  }

  // Diagnostic: where 1e-12 is actually reached, and the measured ratio.
  std::vector<Real> trace;
  try {
    specialfn::pi_param_report(Real(1L, 256), stop_at(-15, 400), kPolicy, &trace);
  } catch (const transform::NotConverged&) {
  }
  int crossing = -1;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (abs(trace[i] - pi.value.at_precision(trace[i].precision())) <= Real::pow10(-12, 96)) {
      crossing = static_cast<int>(i) + 1;
      break;
    }
  }
  double ratio = 0;
  if (trace.size() > 102) {
    ratio = (abs(trace[101] - trace[100]) / abs(trace[100] - trace[99])).to_double();
  }
  detail << "; 1e-12 first reached at " << crossing
         << " terms, measured term ratio " << ratio << " (series decays as ((mu+3/4)/(mu+1))^n)";

  bool small_mu_ok = true;
  for (double mu : {0.5, 1.0 / 3.0}) {
    const auto rep = specialfn::pi_param_report(Real(mu, 256), stop_at(-13, 400), kPolicy);
    const Real delta = abs(rep.value - pi.value.at_precision(256));
    small_mu_ok = small_mu_ok && delta <= Real::pow10(-10, 96);
    detail << "; mu=" << mu << ": |delta| = " << fmt(delta) << " in " << rep.terms_used
           << " terms";
  }

  record("criterion-04 pi-series", capped_ok && small_mu_ok, detail.str(), seconds_since(t0));
}

// 5. polylog grid vs oracle at 1e-12 plus mu-independence at 1e-10.
void criterion_05() {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool pass = true;

  const double mus[] = {1.0 / 3.0, 0.5, 1.0};
  for (double s : {2.0, 3.0}) {
    for (double x : {-0.5, 0.5, -1.0, 1.0}) {
      const bool boundary_plus_one = x == 1.0;
      const int cap = boundary_plus_one ? 1200 : 400;
      Real value(256);
      try {
        value = specialfn::polylog_param(Real(x, 256), Real(s, 256), Real(1L, 256),
                                         stop_at(-15, cap), kPolicy);
      } catch (const transform::NotConverged& e) {
        value = e.report().value;
      }
      const auto ref =
          oracles::polylog_ref(Real(x, 96), Real(s, 96), Real::pow10(-18, 96));
      const Real delta = abs(value - ref.value.at_precision(256));
      const bool cell_ok = delta <= Real::pow10(-12, 96);
      if (!cell_ok) {
        detail << "cell (x=" << x << ", s=" << s << "): |delta| = " << fmt(delta)
               << (boundary_plus_one ? " after 1200 terms (terms decay only like n^-s at x=1)"
                                     : "")
               << "; ";
      }
      pass = pass && cell_ok;

      if (!boundary_plus_one) {
        Real lo(256), hi(256);
        bool first = true;
        for (double mu : mus) {
          const Real v = specialfn::polylog_param(Real(x, 256), Real(s, 256), Real(mu, 256),
                                                  stop_at(-14, 400), kPolicy);
          if (first) {
            lo = v;
            hi = v;
            first = false;
          } else {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
          }
        }
        if (hi - lo > Real::pow10(-10, 96)) {
          pass = false;
          detail << "mu-independence broken at (x=" << x << ", s=" << s
                 << "): spread = " << fmt(hi - lo) << "; ";
        }
      }
    }
  }
  if (pass) detail << "all attainable cells <= 1e-12; mu-independence spread <= 1e-10";
  record("criterion-05 polylog", pass, detail.str(), seconds_since(t0));
}

// 6. Laguerre identity on the 3x3 grid at 1e-10.
void criterion_06() { from_check("criterion-06 laguerre-identity", "laguerre-identity", 0); }

// 7. Digamma reflection route to pi at 1e-10.
void criterion_07() { from_check("criterion-07 digamma-reflection-pi", "digamma-reflection", 0); }

// 8. gamma: the zeta-weighted series at mu in {1/3, 1} to 1e-12, the
//    dyadic one to 1e-10; the accelerated-series adjudication names
//    the matching prefix.
void criterion_08() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto gam = oracles::gamma_ref(Real::pow10(-30, 96));
  std::ostringstream detail;
  bool pass = true;

  for (double mu : {1.0 / 3.0, 1.0}) {
    const Real v = specialfn::euler_gamma_param(Real(mu, 256), stop_at(-15, 400), kPolicy);
    const Real delta = abs(v - gam.value.at_precision(256));
    if (delta > Real::pow10(-12, 96)) {
      pass = false;
      detail << "gamma-zeta at mu=" << mu << ": |delta| = " << fmt(delta) << "; ";
    }
  }
  const Real v14 =
      specialfn::euler_gamma_dyadic(Real(1L, 256), stop_at(-13, 400), kPolicy);
  const Real d14 = abs(v14 - gam.value.at_precision(256));
  if (d14 > Real::pow10(-10, 96)) {
    pass = false;
    detail << "gamma-dyadic: |delta| = " << fmt(d14) << "; ";
  }

  const auto adjudication = verify::run_check("gamma-accel-adjudication", default_opts());
  pass = pass && adjudication.pass;
  detail << (pass ? "gamma-zeta/gamma-dyadic within tolerance; " : "") << adjudication.detail;
  record("criterion-08 gamma-representations", pass, detail.str(), seconds_since(t0));
}

// 9. M: the parameterized series plus all five classical ones agree
//    with the oracle pairwise to 1e-8 and truncate to 1.257746.
void criterion_09() { from_check("criterion-09 m-constant", "m-agreement", 0); }

// 10. Elliptic integrals with the adjudicated (squared) coefficients;
//     the unsquared variant must fail by more than 1e-3.
void criterion_10() { from_check("criterion-10 elliptic", "elliptic-adjudication", 0); }

// 11. Exact identities: binomial identity to n = 200, the mu = 0
//     degeneracy in rationals to n = 50, zeta bounds for n = 1..64.
void criterion_11() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = verify::run_check("binomial-identity", default_opts());
  const auto b = verify::run_check("paramfree-mu0-exact", default_opts());
  const auto c = verify::run_check("zeta-bounds", default_opts());
  record("criterion-11 exact-identities", a.pass && b.pass && c.pass,
         a.detail + "; " + b.detail + "; " + c.detail, seconds_since(t0));
}

// 12. Studies: decay exponents within 15% and deterministic,
//     schema-valid sweep output.
void criterion_12() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto decay = verify::run_check("error-curve-decay", default_opts());

  studies::StudyConfig cfg;
  cfg.representation = "pi-zeta";
  cfg.mu_grid = {Real(rational(1, 3), 96), Real(0.5, 96), Real(1L, 96)};
  cfg.tolerance = Real::pow10(-10, 96);
  cfg.max_terms = 400;
  cfg.precision_bits = 256;
  const std::string csv_a = studies::to_csv(studies::mu_sweep(cfg));
  const std::string csv_b = studies::to_csv(studies::mu_sweep(cfg));
  const bool deterministic = csv_a == csv_b;
  const bool schema_ok =
      csv_a.rfind("mu,terms_to_tolerance,final_error,tolerance\n", 0) == 0 &&
      std::count(csv_a.begin(), csv_a.end(), '\n') == 4;

  std::string detail = decay.detail;
  detail += deterministic ? " sweep deterministic;" : " SWEEP NOT DETERMINISTIC;";
  detail += schema_ok ? " schema valid" : " SCHEMA INVALID";
  record("criterion-12 studies", decay.pass && deterministic && schema_ok, detail,
         seconds_since(t0));
}

}  // namespace

int main() {
  criterion_01();
  criterion_02();
  criterion_03();
  criterion_04();
  criterion_05();
  criterion_06();
  criterion_07();
  criterion_08();
  criterion_09();
  criterion_10();
  criterion_11();
  criterion_12();

  int failures = 0;
  for (const auto& r : g_results) failures += r.pass ? 0 : 1;
  std::cout << "----\n"
            << (g_results.size() - static_cast<std::size_t>(failures)) << "/"
            << g_results.size() << " criteria passed" << std::endl;
  return failures;
}
