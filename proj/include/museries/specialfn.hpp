#pragma once

#include <string>
#include <vector>

#include "museries/oracles.hpp"
#include "museries/real.hpp"
#include "museries/transform.hpp"

namespace museries::specialfn {

using transform::CoefficientSource;
using transform::EvaluationReport;
using transform::StoppingRule;

// --- Coefficient sources -------------------------------------------------
//
// Each factory returns the Taylor data of one catalogued series; the
// function the series represents is noted next to the factory.

CoefficientSource geometric_source();      // a_k = 1            f(x) = 1/(1-x),   |x| < 1
CoefficientSource log_one_plus_source();   // (-1)^(k-1)/k       f(x) = ln(1+x),   |x| < 1
CoefficientSource exp_neg_source();        // (-1)^k/k!          f(x) = e^-x
CoefficientSource binomial_beta_source(const Real& beta);  // C(beta,k): f(x) = (1+x)^beta
CoefficientSource lerch_source(const Real& a, const Real& s);  // (-1)^n/(n+a)^s: f(x) = Phi(-x,a,s)
CoefficientSource polylog_source(const Real& s);  // 1/(n+1)^s:  f(x) = Li_s(x)/x
CoefficientSource digamma_taylor_neg_source();  // zeta(n+1), n>=1:  f(x) = -(psi(1-x)+gamma)
CoefficientSource digamma_taylor_pos_source();  // (-1)^(n-1) zeta(n+1): f(x) = psi(1+x)+gamma
CoefficientSource loggamma_source();   // (-1)^(k-1) zeta(k+1)/(k+1): f(x) = (lnGamma(1+x)+gamma x)/x
CoefficientSource gamma_reduced_source();  // (-1)^(k-1)(zeta(k+1)-1)/(k+1)
CoefficientSource m_source();              // (-1)^(k-1) zeta(k+1)/k
CoefficientSource pi_zeta_source();        // (3^k-1)/4^k zeta(k+1), k>=1
CoefficientSource gamma_dyadic_source();   // (-1)^k S(k), S(k) = sum 1/(2^m+k)
CoefficientSource elliptic_k_source();     // (C(2k,k)/4^k)^2 in t = x^2
CoefficientSource elliptic_e_source();     // (C(2k,k)/4^k)^2/(1-2k) in t = x^2
// Unsquared central binomial coefficients, kept for the documented
// discrepancy check; this variant does NOT reproduce K.
CoefficientSource elliptic_k_source_unsquared();

struct SeriesCatalogEntry {
  std::string id;
  std::string domain_note;
};
const std::vector<SeriesCatalogEntry>& series_catalog();

// Memoized zeta(m) / zeta(m)-1 for the coefficient streams above.
Real zeta_coeff(unsigned long m, mpfr_prec_t prec);
Real zeta_minus1_coeff(unsigned long m, mpfr_prec_t prec);
// S(k) = sum_{m>=1} 1/(2^m + k), truncated below 2^-(prec+8), memoized.
Real s_sum(unsigned long k, mpfr_prec_t prec);
// Test hook: perturb zeta(2) coefficients so verification must fail.
void set_zeta_fault_injection(bool on);

// --- Representation evaluators -------------------------------------------

EvaluationReport zeta_param_report(const Real& s, const Real& mu,
                                   const StoppingRule& stop, const PrecisionPolicy& policy,
                                   std::vector<Real>* trace = nullptr);
Real zeta_param(const Real& s, const Real& mu, const StoppingRule& stop,
                const PrecisionPolicy& policy);

// Phi(-x, a, s) for x > -1/2, a > 0, s > 1 (mu is pinned to x).
EvaluationReport lerch_param_report(const Real& x, const Real& a, const Real& s,
                                    const StoppingRule& stop, const PrecisionPolicy& policy,
                                    std::vector<Real>* trace = nullptr);
Real lerch_param(const Real& x, const Real& a, const Real& s,
                 const StoppingRule& stop, const PrecisionPolicy& policy);

// Li_s(x) for |x| <= 1, s > 1.
EvaluationReport polylog_param_report(const Real& x, const Real& s, const Real& mu,
                                      const StoppingRule& stop, const PrecisionPolicy& policy,
                                      std::vector<Real>* trace = nullptr);
Real polylog_param(const Real& x, const Real& s, const Real& mu,
                   const StoppingRule& stop, const PrecisionPolicy& policy);

EvaluationReport pi_param_report(const Real& mu, const StoppingRule& stop,
                                 const PrecisionPolicy& policy,
                                 std::vector<Real>* trace = nullptr);
Real pi_param(const Real& mu, const StoppingRule& stop, const PrecisionPolicy& policy);

// psi(1+x) + gamma for -1 < x <= 1.
EvaluationReport digamma_param_report(const Real& x, const Real& mu,
                                      const StoppingRule& stop, const PrecisionPolicy& policy,
                                      std::vector<Real>* trace = nullptr);
Real digamma_param(const Real& x, const Real& mu, const StoppingRule& stop,
                   const PrecisionPolicy& policy);

// lnGamma(x+1) + gamma*x for -1 < x <= 1.
EvaluationReport loggamma_param_report(const Real& x, const Real& mu,
                                       const StoppingRule& stop, const PrecisionPolicy& policy,
                                       std::vector<Real>* trace = nullptr);
Real loggamma_param(const Real& x, const Real& mu, const StoppingRule& stop,
                    const PrecisionPolicy& policy);

EvaluationReport euler_gamma_param_report(const Real& mu, const StoppingRule& stop,
                                          const PrecisionPolicy& policy,
                                          std::vector<Real>* trace = nullptr);
Real euler_gamma_param(const Real& mu, const StoppingRule& stop,
                       const PrecisionPolicy& policy);

// The accelerated gamma series ships with both candidate prefixes:
// (mu - ln(mu+1))/mu from the closed-form sum behind it, and a variant
// carrying an extra +1. Which one reproduces gamma is settled
// numerically by the verify suite.
enum class GammaAccelVariant { PlusOne, Corrected };
const char* to_string(GammaAccelVariant v);
Real euler_gamma_accel_prefix(const Real& mu, GammaAccelVariant variant, mpfr_prec_t prec);
EvaluationReport euler_gamma_accel_report(const Real& mu, GammaAccelVariant variant,
                                          const StoppingRule& stop,
                                          const PrecisionPolicy& policy,
                                          std::vector<Real>* trace = nullptr);
Real euler_gamma_accel(const Real& mu, GammaAccelVariant variant,
                       const StoppingRule& stop, const PrecisionPolicy& policy);

EvaluationReport euler_gamma_dyadic_report(const Real& mu, const StoppingRule& stop,
                                              const PrecisionPolicy& policy,
                                              std::vector<Real>* trace = nullptr);
Real euler_gamma_dyadic(const Real& mu, const StoppingRule& stop,
                           const PrecisionPolicy& policy);

// K(x), E(x) for |x| < 1.
EvaluationReport elliptic_k_param_report(const Real& x, const Real& mu,
                                         const StoppingRule& stop, const PrecisionPolicy& policy,
                                         std::vector<Real>* trace = nullptr);
Real elliptic_k_param(const Real& x, const Real& mu, const StoppingRule& stop,
                      const PrecisionPolicy& policy);
EvaluationReport elliptic_e_param_report(const Real& x, const Real& mu,
                                         const StoppingRule& stop, const PrecisionPolicy& policy,
                                         std::vector<Real>* trace = nullptr);
Real elliptic_e_param(const Real& x, const Real& mu, const StoppingRule& stop,
                      const PrecisionPolicy& policy);

// sum_n weight(n,mu) L_n(x/mu); equals e^-x.
EvaluationReport exp_laguerre_identity_report(const Real& x, const Real& mu,
                                              const StoppingRule& stop,
                                              const PrecisionPolicy& policy,
                                              std::vector<Real>* trace = nullptr);
Real exp_laguerre_identity(const Real& x, const Real& mu, const StoppingRule& stop,
                           const PrecisionPolicy& policy);

Real laguerre_eval(unsigned long n, const Real& x);

// sum_{k=1..n} C(n,k) (-1)^(k-1)/(k+1), exactly; equals n/(n+1).
exactmath::ExactRational binomial_identity_check(unsigned long n);

// 1/2^(n+1) < zeta(n+1)-1 < (1/2^(n+1))(1 + 2/n), both strict.
bool zeta_bounds_check(unsigned long n, mpfr_prec_t prec);

EvaluationReport m_constant_param_report(const Real& mu, const StoppingRule& stop,
                                         const PrecisionPolicy& policy,
                                         std::vector<Real>* trace = nullptr);
Real m_constant_param(const Real& mu, const StoppingRule& stop,
                      const PrecisionPolicy& policy);

struct ConstantResult {
  std::string name;
  Real value;
  std::string representation_id;
  EvaluationReport report;
};

// The five classical series for M, each with its own tail policy.
std::vector<ConstantResult> m_constant_alternatives(const StoppingRule& stop,
                                                    const PrecisionPolicy& policy);

}  // namespace museries::specialfn
