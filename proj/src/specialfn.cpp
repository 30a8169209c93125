#include "museries/specialfn.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <utility>

#include "museries/errors.hpp"

namespace museries::specialfn {

using exactmath::ExactInt;
using exactmath::ExactRational;
using exactmath::rational;
using transform::Form;
using transform::MuValidity;
using transform::mu_validity;

namespace {

std::atomic<bool> g_zeta_fault{false};

Real sign_flip(Real v, bool negate) { return negate ? -v : v; }

// Rescale a raw engine report (and trace) by value -> scale*value + offset.
EvaluationReport affine(EvaluationReport rep, const Real& scale, const Real& offset,
                        std::vector<Real>* trace) {
  rep.value = scale * rep.value + offset;
  rep.last_increment = scale * rep.last_increment;
  rep.estimated_tail = abs(scale) * rep.estimated_tail;
  if (trace) {
    for (auto& p : *trace) p = scale.at_precision(p.precision()) * p + offset;
  }
  return rep;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

}  // namespace

void set_zeta_fault_injection(bool on) { g_zeta_fault.store(on); }

Real zeta_coeff(unsigned long m, mpfr_prec_t prec) {
  Real v = oracles::zeta_int(m, prec);
  if (g_zeta_fault.load() && m == 2) v += Real::pow10(-6, prec);
  return v;
}

Real zeta_minus1_coeff(unsigned long m, mpfr_prec_t prec) {
  Real v = oracles::zeta_minus1_int(m, prec);
  if (g_zeta_fault.load() && m == 2) v += Real::pow10(-6, prec);
  return v;
}

Real s_sum(unsigned long k, mpfr_prec_t prec) {
  static std::mutex mutex;
  static std::map<unsigned long, Real> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end() || it->second.precision() < prec) {
    const mpfr_prec_t w = prec + 32;
    Real sum(w);
    Real pow2(2L, w);
    // Tail after m terms is below sum 2^-j = 2^-m.
    for (long m = 1; m <= static_cast<long>(prec) + 8; ++m) {
      sum += 1L / (pow2 + static_cast<long>(k));
      pow2 *= 2L;
    }
    Real v = sum.at_precision(prec);
    if (it == cache.end()) {
      it = cache.emplace(k, std::move(v)).first;
    } else {
      it->second = std::move(v);
    }
  }
  return it->second.at_precision(prec);
}

// --- Sources --------------------------------------------------------------

CoefficientSource geometric_source() {
  return CoefficientSource(
      "geometric", [](std::size_t, mpfr_prec_t p) { return Real(1L, p); }, 1.0);
}

CoefficientSource log_one_plus_source() {
  return CoefficientSource(
      "log-one-plus",
      [](std::size_t k, mpfr_prec_t p) {
        if (k == 0) return Real(p);
        return sign_flip(1L / Real(static_cast<long>(k), p), k % 2 == 0);
      },
      1.0);
}

CoefficientSource exp_neg_source() {
  return CoefficientSource("exp-neg", [](std::size_t k, mpfr_prec_t p) {
    ExactInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    return sign_flip(1L / Real(fact, p), k % 2 == 1);
  });
}

CoefficientSource binomial_beta_source(const Real& beta) {
  return CoefficientSource(
      "binomial-beta",
      [beta](std::size_t k, mpfr_prec_t p) {
        const Real b = beta.at_precision(p);
        Real c(1L, p);
        for (std::size_t j = 0; j < k; ++j) {
          c *= (b - static_cast<long>(j)) / (static_cast<long>(j) + 1);
        }
        return c;
      },
      1.0);
}

CoefficientSource lerch_source(const Real& a, const Real& s) {
  return CoefficientSource("lerch", [a, s](std::size_t n, mpfr_prec_t p) {
    const Real v = pow(a.at_precision(p) + static_cast<long>(n), -s.at_precision(p));
    return sign_flip(v, n % 2 == 1);
  });
}

CoefficientSource polylog_source(const Real& s) {
  return CoefficientSource("polylog", [s](std::size_t n, mpfr_prec_t p) {
    return pow(Real(static_cast<long>(n) + 1, p), -s.at_precision(p));
  });
}

CoefficientSource digamma_taylor_neg_source() {
  return CoefficientSource(
      "digamma-taylor-neg",
      [](std::size_t n, mpfr_prec_t p) {
        if (n == 0) return Real(p);
        return zeta_coeff(static_cast<unsigned long>(n) + 1, p);
      },
      1.0);
}

CoefficientSource digamma_taylor_pos_source() {
  return CoefficientSource("digamma-taylor-pos", [](std::size_t n, mpfr_prec_t p) {
    if (n == 0) return Real(p);
    return sign_flip(zeta_coeff(static_cast<unsigned long>(n) + 1, p), n % 2 == 0);
  });
}

CoefficientSource loggamma_source() {
  return CoefficientSource("loggamma", [](std::size_t k, mpfr_prec_t p) {
    if (k == 0) return Real(p);
    const Real v =
        zeta_coeff(static_cast<unsigned long>(k) + 1, p) / (static_cast<long>(k) + 1);
    return sign_flip(v, k % 2 == 0);
  });
}

CoefficientSource gamma_reduced_source() {
  return CoefficientSource("gamma-reduced", [](std::size_t k, mpfr_prec_t p) {
    if (k == 0) return Real(p);
    const Real v =
        zeta_minus1_coeff(static_cast<unsigned long>(k) + 1, p) / (static_cast<long>(k) + 1);
    return sign_flip(v, k % 2 == 0);
  });
}

CoefficientSource m_source() {
  return CoefficientSource("m-series", [](std::size_t k, mpfr_prec_t p) {
    if (k == 0) return Real(p);
    const Real v = zeta_coeff(static_cast<unsigned long>(k) + 1, p) / static_cast<long>(k);
    return sign_flip(v, k % 2 == 0);
  });
}

CoefficientSource pi_zeta_source() {
  return CoefficientSource("pi-zeta", [](std::size_t k, mpfr_prec_t p) {
    if (k == 0) return Real(p);
    ExactInt p3, p4;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(k));
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(k));
    ExactRational f(p3 - 1);
    f /= ExactRational(p4);
    return Real(f, p) * zeta_coeff(static_cast<unsigned long>(k) + 1, p);
  });
}

CoefficientSource gamma_dyadic_source() {
  return CoefficientSource("gamma-dyadic", [](std::size_t k, mpfr_prec_t p) {
    return sign_flip(s_sum(static_cast<unsigned long>(k), p), k % 2 == 1);
  });
}

namespace {

// (C(2k,k)/4^k)^2 as an exact rational, by the recurrence
// c_k = c_(k-1) * ((2k-1)/(2k))^2.
ExactRational central_binomial_squared(std::size_t k) {
  ExactRational c(1);
  for (std::size_t j = 1; j <= k; ++j) {
    const unsigned long two_j = 2 * static_cast<unsigned long>(j);
    c *= ExactRational((two_j - 1) * (two_j - 1), two_j * two_j);
  }
  return c;
}

}  // namespace

CoefficientSource elliptic_k_source() {
  return CoefficientSource(
      "elliptic-k",
      [](std::size_t k, mpfr_prec_t p) { return Real(central_binomial_squared(k), p); });
}

CoefficientSource elliptic_e_source() {
  return CoefficientSource("elliptic-e", [](std::size_t k, mpfr_prec_t p) {
    ExactRational c = central_binomial_squared(k);
    c /= ExactRational(1 - 2 * static_cast<long>(k));
    return Real(c, p);
  });
}

CoefficientSource elliptic_k_source_unsquared() {
  return CoefficientSource("elliptic-k-unsquared", [](std::size_t k, mpfr_prec_t p) {
    ExactInt p16;
    mpz_ui_pow_ui(p16.get_mpz_t(), 16, static_cast<unsigned long>(k));
    ExactRational c(exactmath::binomial(2 * static_cast<unsigned long>(k),
                                        static_cast<unsigned long>(k)));
    c /= ExactRational(p16);
    return Real(c, p);
  });
}

const std::vector<SeriesCatalogEntry>& series_catalog() {
  static const std::vector<SeriesCatalogEntry> catalog = {
      {"geometric", "|x| < 1"},
      {"log-one-plus", "|x| < 1"},
      {"exp-neg", "all real x"},
      {"binomial-beta", "|x| < 1"},
      {"lerch", "evaluated at x = 1 with mu > -1/2; a > 0, s > 1"},
      {"polylog", "|x| <= 1, s > 1"},
      {"digamma-taylor-neg", "|x| < 1"},
      {"digamma-taylor-pos", "-1 < x <= 1"},
      {"loggamma", "-1 < x <= 1"},
      {"gamma-reduced", "|x| < 2"},
      {"m-series", "evaluated at x = 1"},
      {"pi-zeta", "evaluated at x = 1"},
      {"gamma-dyadic", "evaluated at x = 1"},
      {"elliptic-k", "t = x^2 < 1"},
      {"elliptic-e", "t = x^2 < 1"},
  };
  return catalog;
}

// --- Evaluators -----------------------------------------------------------

EvaluationReport zeta_param_report(const Real& s, const Real& mu,
                                   const StoppingRule& stop, const PrecisionPolicy& policy,
                                   std::vector<Real>* trace) {
  require(s > 1L, "zeta_param: requires s > 1");
  const mpfr_prec_t w = policy.working_bits(stop.max_terms);
  // a_k = (-1)^k/(k+1)^s sums to eta(s); divide by 1 - 2^(1-s).
  const Real s_w = s.at_precision(w);
  CoefficientSource src("zeta-eta", [s_w](std::size_t k, mpfr_prec_t p) {
    const Real v = pow(Real(static_cast<long>(k) + 1, p), -s_w.at_precision(p));
    return sign_flip(v, k % 2 == 1);
  });
  auto rep = transform::transform_eval_paramfree(src, Real(1L, w), mu, stop, policy, trace);
  const Real scale = 1L / (1L - pow(Real(2L, w), 1L - s_w));
  return affine(std::move(rep), scale.at_precision(policy.target_bits), Real(policy.target_bits), trace);
}

Real zeta_param(const Real& s, const Real& mu, const StoppingRule& stop,
                const PrecisionPolicy& policy) {
  return zeta_param_report(s, mu, stop, policy).value;
}

EvaluationReport lerch_param_report(const Real& x, const Real& a, const Real& s,
                                    const StoppingRule& stop, const PrecisionPolicy& policy,
                                    std::vector<Real>* trace) {
  require(x * 2L > -1L, "lerch_param: requires x > -1/2");
  require(a > 0L, "lerch_param: requires a > 0");
  require(s > 1L, "lerch_param: requires s > 1");
  // Phi(-x,a,s) = f(x) for f(y) = Phi(-y,a,s); the rearrangement is
  // applied at argument 1 with mu = x.
  return transform::transform_eval(lerch_source(a, s), Real(1L, policy.target_bits), x,
                                   stop, policy, trace);
}

Real lerch_param(const Real& x, const Real& a, const Real& s,
                 const StoppingRule& stop, const PrecisionPolicy& policy) {
  return lerch_param_report(x, a, s, stop, policy).value;
}

EvaluationReport polylog_param_report(const Real& x, const Real& s, const Real& mu,
                                      const StoppingRule& stop, const PrecisionPolicy& policy,
                                      std::vector<Real>* trace) {
  require(abs(x) <= 1L, "polylog_param: requires |x| <= 1");
  require(s > 1L, "polylog_param: requires s > 1");
  auto rep = transform::transform_eval_paramfree(polylog_source(s), x, mu, stop, policy, trace);
  return affine(std::move(rep), x.at_precision(policy.target_bits), Real(policy.target_bits), trace);
}

Real polylog_param(const Real& x, const Real& s, const Real& mu,
                   const StoppingRule& stop, const PrecisionPolicy& policy) {
  return polylog_param_report(x, s, mu, stop, policy).value;
}

EvaluationReport pi_param_report(const Real& mu, const StoppingRule& stop,
                                 const PrecisionPolicy& policy, std::vector<Real>* trace) {
  return transform::transform_eval_paramfree(pi_zeta_source(), Real(1L, policy.target_bits),
                                             mu, stop, policy, trace);
}

Real pi_param(const Real& mu, const StoppingRule& stop, const PrecisionPolicy& policy) {
  return pi_param_report(mu, stop, policy).value;
}

EvaluationReport digamma_param_report(const Real& x, const Real& mu,
                                      const StoppingRule& stop, const PrecisionPolicy& policy,
                                      std::vector<Real>* trace) {
  require(x > -1L && x <= 1L, "digamma_param: requires -1 < x <= 1");
  return transform::transform_eval_paramfree(digamma_taylor_pos_source(), x, mu, stop,
                                             policy, trace);
}

Real digamma_param(const Real& x, const Real& mu, const StoppingRule& stop,
                   const PrecisionPolicy& policy) {
  return digamma_param_report(x, mu, stop, policy).value;
}

EvaluationReport loggamma_param_report(const Real& x, const Real& mu,
                                       const StoppingRule& stop, const PrecisionPolicy& policy,
                                       std::vector<Real>* trace) {
  require(x > -1L && x <= 1L, "loggamma_param: requires -1 < x <= 1");
  auto rep = transform::transform_eval_paramfree(loggamma_source(), x, mu, stop, policy, trace);
  return affine(std::move(rep), x.at_precision(policy.target_bits), Real(policy.target_bits), trace);
}

Real loggamma_param(const Real& x, const Real& mu, const StoppingRule& stop,
                    const PrecisionPolicy& policy) {
  return loggamma_param_report(x, mu, stop, policy).value;
}

EvaluationReport euler_gamma_param_report(const Real& mu, const StoppingRule& stop,
                                          const PrecisionPolicy& policy,
                                          std::vector<Real>* trace) {
  return transform::transform_eval_paramfree(loggamma_source(), Real(1L, policy.target_bits),
                                             mu, stop, policy, trace);
}

Real euler_gamma_param(const Real& mu, const StoppingRule& stop,
                       const PrecisionPolicy& policy) {
  return euler_gamma_param_report(mu, stop, policy).value;
}

const char* to_string(GammaAccelVariant v) {
  return v == GammaAccelVariant::PlusOne ? "plus-one" : "corrected";
}

Real euler_gamma_accel_prefix(const Real& mu, GammaAccelVariant variant, mpfr_prec_t prec) {
  if (mu.is_zero()) throw DomainError("euler_gamma_accel: requires mu != 0");
  const Real m = mu.at_precision(prec);
  const Real base = m - log(m + 1L);
  return (variant == GammaAccelVariant::PlusOne ? base + 1L : base) / m;
}

EvaluationReport euler_gamma_accel_report(const Real& mu, GammaAccelVariant variant,
                                          const StoppingRule& stop,
                                          const PrecisionPolicy& policy,
                                          std::vector<Real>* trace) {
  if (mu.is_zero()) throw DomainError("euler_gamma_accel: requires mu != 0");
  const Real prefix =
      euler_gamma_accel_prefix(mu, variant, policy.working_bits(stop.max_terms));
  auto rep = transform::transform_eval_paramfree(gamma_reduced_source(),
                                                 Real(1L, policy.target_bits), mu, stop,
                                                 policy, trace);
  return affine(std::move(rep), Real(1L, policy.target_bits),
                prefix.at_precision(policy.target_bits), trace);
}

Real euler_gamma_accel(const Real& mu, GammaAccelVariant variant, const StoppingRule& stop,
                       const PrecisionPolicy& policy) {
  return euler_gamma_accel_report(mu, variant, stop, policy).value;
}

EvaluationReport euler_gamma_dyadic_report(const Real& mu, const StoppingRule& stop,
                                              const PrecisionPolicy& policy,
                                              std::vector<Real>* trace) {
  return transform::transform_eval_paramfree(gamma_dyadic_source(), Real(1L, policy.target_bits),
                                             mu, stop, policy, trace);
}

Real euler_gamma_dyadic(const Real& mu, const StoppingRule& stop,
                           const PrecisionPolicy& policy) {
  return euler_gamma_dyadic_report(mu, stop, policy).value;
}

namespace {

// One-time check of the elliptic Taylor data against the AGM values;
// the unsquared coefficient variant fails this by ~4e-2 at x = 1/2.
void validate_elliptic_coefficients() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    const mpfr_prec_t w = 192;
    const Real t(0.25, w);  // x = 1/2
    const auto k_src = elliptic_k_source();
    const auto e_src = elliptic_e_source();
    Real k_sum(w), e_sum(w), t_pow(1L, w);
    for (std::size_t j = 0; j <= 64; ++j) {
      if (j > 0) t_pow *= t;
      k_sum += t_pow * k_src.coeff(j, w);
      e_sum += t_pow * e_src.coeff(j, w);
    }
    const Real half_pi = Real::pi(w) / 2L;
    const Real tol = Real::pow10(-8, 64);
    const Real err(Real::pow10(-30, 64));
    const Real k_ref = oracles::elliptic_k_agm(Real(0.5, w), err).value;
    const Real e_ref = oracles::elliptic_e_agm(Real(0.5, w), err).value;
    if (abs(half_pi * k_sum - k_ref) > tol || abs(half_pi * e_sum - e_ref) > tol) {
      throw Error("elliptic coefficient self-check failed against the AGM oracle");
    }
  });
}

}  // namespace

EvaluationReport elliptic_k_param_report(const Real& x, const Real& mu,
                                         const StoppingRule& stop, const PrecisionPolicy& policy,
                                         std::vector<Real>* trace) {
  require(abs(x) < 1L, "elliptic_k_param: requires |x| < 1");
  validate_elliptic_coefficients();
  const mpfr_prec_t w = policy.working_bits(stop.max_terms);
  const Real t = x.at_precision(w) * x.at_precision(w);
  auto rep = transform::transform_eval_paramfree(elliptic_k_source(), t, mu, stop, policy, trace);
  return affine(std::move(rep), Real::pi(policy.target_bits) / 2L, Real(policy.target_bits), trace);
}

Real elliptic_k_param(const Real& x, const Real& mu, const StoppingRule& stop,
                      const PrecisionPolicy& policy) {
  return elliptic_k_param_report(x, mu, stop, policy).value;
}

EvaluationReport elliptic_e_param_report(const Real& x, const Real& mu,
                                         const StoppingRule& stop, const PrecisionPolicy& policy,
                                         std::vector<Real>* trace) {
  require(abs(x) < 1L, "elliptic_e_param: requires |x| < 1");
  validate_elliptic_coefficients();
  const mpfr_prec_t w = policy.working_bits(stop.max_terms);
  const Real t = x.at_precision(w) * x.at_precision(w);
  auto rep = transform::transform_eval_paramfree(elliptic_e_source(), t, mu, stop, policy, trace);
  return affine(std::move(rep), Real::pi(policy.target_bits) / 2L, Real(policy.target_bits), trace);
}

Real elliptic_e_param(const Real& x, const Real& mu, const StoppingRule& stop,
                      const PrecisionPolicy& policy) {
  return elliptic_e_param_report(x, mu, stop, policy).value;
}

Real laguerre_eval(unsigned long n, const Real& x) {
  Real p0(1L, x.precision());
  if (n == 0) return p0;
  Real p1 = 1L - x;
  for (unsigned long c = 1; c < n; ++c) {
    // (c+1) L_(c+1) = (2c+1-x) L_c - c L_(c-1)
    Real next = ((2L * static_cast<long>(c) + 1L - x) * p1 -
                 static_cast<long>(c) * p0) /
                (static_cast<long>(c) + 1);
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

EvaluationReport exp_laguerre_identity_report(const Real& x, const Real& mu,
                                              const StoppingRule& stop,
                                              const PrecisionPolicy& policy,
                                              std::vector<Real>* trace) {
  if (mu.is_zero()) throw DomainError("exp_laguerre_identity: requires mu != 0");
  const MuValidity validity = mu_validity(mu);
  if (validity == MuValidity::Invalid) {
    throw InvalidMu("exp_laguerre_identity: mu in the invalid band");
  }
  if (x.is_zero()) {
    // L_n(0) = 1 and the weights sum to 1; same x = 0 short-circuit as
    // the generic engine.
    Real one(1L, policy.target_bits);
    if (trace) trace->push_back(one);
    return EvaluationReport{one, 1, one, Real(policy.target_bits), validity, true};
  }
  const mpfr_prec_t w = policy.working_bits(stop.max_terms);
  const Real y = x.at_precision(w) / mu.at_precision(w);
  const Real mu_w = mu.at_precision(w);
  const Real ratio = mu_w / (mu_w + 1L);
  const Real r_abs = abs(ratio);
  const Real tail_factor = r_abs / (1L - r_abs);
  const Real tol = stop.tolerance.at_precision(w);

  Real sum(w);
  Real outer_weight = 1L / (mu_w + 1L);
  Real l_prev(1L, w);      // L_0(y)
  Real l_cur = 1L - y;     // L_1(y)
  Real last_incr(w), last_tail(w);
  int small_streak = 0, terms = 0;
  bool converged = false;

  for (int n = 0; n < stop.max_terms; ++n) {
    const Real& l_n = n == 0 ? l_prev : l_cur;
    const Real incr = outer_weight * l_n;
    sum += incr;
    terms = n + 1;
    last_incr = incr;
    last_tail = abs(incr) * tail_factor;
    if (trace) trace->push_back(sum);
    if (last_tail <= tol && abs(incr) <= tol) {
      if (++small_streak >= stop.consecutive_small) {
        converged = true;
        break;
      }
    } else {
      small_streak = 0;
    }
    outer_weight *= ratio;
    if (n >= 1) {
      Real next = ((2L * n + 1L - y) * l_cur - static_cast<long>(n) * l_prev) / (n + 1L);
      l_prev = std::move(l_cur);
      l_cur = std::move(next);
    }
  }

  EvaluationReport rep{sum.at_precision(policy.target_bits), terms,
                       last_incr.at_precision(policy.target_bits),
                       last_tail.at_precision(policy.target_bits), validity, converged};
  if (!converged) {
    throw transform::NotConverged("exp_laguerre_identity: not converged", std::move(rep));
  }
  return rep;
}

Real exp_laguerre_identity(const Real& x, const Real& mu, const StoppingRule& stop,
                           const PrecisionPolicy& policy) {
  return exp_laguerre_identity_report(x, mu, stop, policy).value;
}

ExactRational binomial_identity_check(unsigned long n) {
  ExactRational sum(0);
  for (unsigned long k = 1; k <= n; ++k) {
    ExactRational term(exactmath::binomial(n, k));
    term /= ExactRational(k + 1);
    if (k % 2 == 0) term = -term;
    sum += term;
  }
  return sum;
}

bool zeta_bounds_check(unsigned long n, mpfr_prec_t prec) {
  if (n < 1) throw DomainError("zeta_bounds_check: requires n >= 1");
  const mpfr_prec_t w = prec + 32;
  const Real tail = oracles::zeta_minus1_int(n + 1, w);
  const Real lo = Real::exp2i(-(static_cast<long>(n) + 1), w);
  const Real hi = lo * (1L + Real(rational(2, static_cast<long>(n)), w));
  return lo < tail && tail < hi;
}

EvaluationReport m_constant_param_report(const Real& mu, const StoppingRule& stop,
                                         const PrecisionPolicy& policy,
                                         std::vector<Real>* trace) {
  return transform::transform_eval_paramfree(m_source(), Real(1L, policy.target_bits), mu,
                                             stop, policy, trace);
}

Real m_constant_param(const Real& mu, const StoppingRule& stop,
                      const PrecisionPolicy& policy) {
  return m_constant_param_report(mu, stop, policy).value;
}

namespace {

ConstantResult make_m_result(const std::string& id, const Real& value, int terms,
                             const Real& last, const Real& bound, const Real& tol,
                             mpfr_prec_t target) {
  EvaluationReport rep{value.at_precision(target), terms, last.at_precision(target),
                       bound.at_precision(target), MuValidity::Safe, bound <= tol};
  return ConstantResult{"M", rep.value, id, std::move(rep)};
}

// Li2(z) by direct series, |z| << 1 (Euler-Maclaurin tail integrals).
Real li2_small(const Real& z, mpfr_prec_t w) {
  Real sum(w);
  Real z_pow(1L, w);
  for (long k = 1; k <= 256; ++k) {
    z_pow *= z;
    const Real term = z_pow / (k * k);
    sum += term;
    if (abs(term) <= Real::exp2i(-static_cast<long>(w), 64)) break;
  }
  return sum;
}

}  // namespace

std::vector<ConstantResult> m_constant_alternatives(const StoppingRule& stop,
                                                    const PrecisionPolicy& policy) {
  const mpfr_prec_t target = policy.target_bits;
  const mpfr_prec_t w = policy.working_bits(stop.max_terms);
  const Real tol = stop.tolerance.at_precision(w);
  std::vector<ConstantResult> results;

  // (1) sum (-1)^(n-1) zeta(n+1)/n. The zeta = 1 + (zeta-1) split turns
  // the slow alternating-harmonic part into ln 2 exactly; the remainder
  // converges geometrically with the zeta-1 estimate as tail bound.
  {
    Real sum = log(Real(2L, w));
    Real last(w), bound(w);
    int terms = 0;
    for (long n = 1; n <= stop.max_terms; ++n) {
      last = zeta_minus1_coeff(static_cast<unsigned long>(n) + 1, w) / n;
      if (n % 2 == 0) last = -last;
      sum += last;
      terms = static_cast<int>(n);
      bound = ldexp2((1L + Real(2L, w) / (n + 1)) / (n + 1), -(n + 2));
      if (bound <= tol) break;
    }
    results.push_back(make_m_result("m-alt-zeta-alternating", sum, terms, last, bound, tol, target));
  }

  // (2) sum (1/n) ln(1+1/n); terms only decay like 1/n^2, so the tail
  // past N is completed by Euler-Maclaurin: integral -Li2(-1/N), then
  // -f(N)/2 - f'(N)/12 with f = ln(1+1/x)/x.
  {
    const long n_terms = 1200;
    Real sum(w);
    Real last(w);
    for (long n = 1; n <= n_terms; ++n) {
      last = log(1L + 1L / Real(n, w)) / n;
      sum += last;
    }
    const Real big_n(n_terms, w);
    const Real integral = -li2_small(-1L / big_n, w);
    const Real f_n = log(1L + 1L / big_n) / big_n;
    const Real fp_n = -log(1L + 1L / big_n) / (big_n * big_n) -
                      1L / (big_n * big_n * (big_n + 1L));
    sum += integral - f_n / 2L - fp_n / 12L;
    // Remainder is of the order f'''(N)/720 ~ 24/(720 N^5).
    const Real bound = Real(24L, w) / (pow(big_n, 5L) * 720L) * 4L;
    results.push_back(make_m_result("m-alt-log-ratio", sum, static_cast<int>(n_terms),
                                    last, bound, tol, target));
  }

  // (3) sum ln(n+1)/(n(n+1)), same treatment; the integral has the
  // closed form (ln^2(N+1) - ln^2 N)/2 - Li2(-1/N).
  {
    const long n_terms = 1200;
    Real sum(w);
    Real last(w);
    for (long n = 1; n <= n_terms; ++n) {
      last = log(Real(n + 1, w)) / (Real(n, w) * (n + 1));
      sum += last;
    }
    const Real big_n(n_terms, w);
    const Real ln_n = log(big_n);
    const Real ln_n1 = log(big_n + 1L);
    const Real integral = (ln_n1 * ln_n1 - ln_n * ln_n) / 2L - li2_small(-1L / big_n, w);
    const Real f_n = ln_n1 / (big_n * (big_n + 1L));
    const Real fp_n = (big_n - (2L * big_n + 1L) * ln_n1) /
                      (big_n * big_n * (big_n + 1L) * (big_n + 1L));
    sum += integral - f_n / 2L - fp_n / 12L;
    const Real bound = Real(24L, w) / (pow(big_n, 5L) * 720L) * 8L;
    results.push_back(make_m_result("m-alt-log-weighted", sum, static_cast<int>(n_terms),
                                    last, bound, tol, target));
  }

  // (4) sum H_n (zeta(n+1)-1), geometric via the zeta-1 estimate.
  {
    Real sum(w), h(w), last(w), bound(w);
    int terms = 0;
    for (long n = 1; n <= stop.max_terms; ++n) {
      h += 1L / Real(n, w);
      last = h * zeta_minus1_coeff(static_cast<unsigned long>(n) + 1, w);
      sum += last;
      terms = static_cast<int>(n);
      bound = (1L + Real(2L, w) / n) * ldexp2(h + 2L, -(n + 1));
      if (bound <= tol) break;
    }
    results.push_back(make_m_result("m-alt-harmonic-zeta", sum, terms, last, bound, tol, target));
  }

  // (5) sum (1/n)(n - zeta(2) - ... - zeta(n)); the deficit
  // 1 - sum_{j<=n}(zeta(j)-1) shrinks like 2^-n, guard bits absorb the
  // cancellation.
  {
    Real sum(w), cumulative(w), last(w), bound(w);
    int terms = 0;
    for (long n = 1; n <= stop.max_terms; ++n) {
      if (n >= 2) cumulative += zeta_minus1_coeff(static_cast<unsigned long>(n), w);
      last = (1L - cumulative) / n;
      sum += last;
      terms = static_cast<int>(n);
      bound = (1L + Real(2L, w) / (n + 1)) * ldexp2(Real(1L, w) / (n + 1), -n);
      if (bound <= tol) break;
    }
    results.push_back(make_m_result("m-alt-zeta-deficit", sum, terms, last, bound, tol, target));
  }

  return results;
}

}  // namespace museries::specialfn
