#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "museries/errors.hpp"
#include "museries/exactmath.hpp"
#include "museries/real.hpp"

namespace museries::transform {

// Validity bands for the free parameter mu. The outer series has
// geometric ratio r = |mu/(mu+1)|:
//   Safe      -1/3 <= mu <= 1     (holds for every analytic source)
//   Extended  -1/2 < mu < -1/3, or mu > 1; r < 1 still, convergence is
//             source-dependent and adjudicated empirically
//   Invalid   mu <= -1/2; r >= 1, the outer series cannot converge
enum class MuValidity { Safe, Extended, Invalid };

const char* to_string(MuValidity v);
MuValidity mu_validity(const Real& mu);

struct StoppingRule {
  Real tolerance;
  int max_terms = 1000;
  int consecutive_small = 3;
};

struct EvaluationReport {
  Real value;
  int terms_used;  // outer terms evaluated (n = 0 .. terms_used-1)
  Real last_increment;
  Real estimated_tail;
  MuValidity validity;
  bool converged;
};

class NotConverged : public Error {
 public:
  NotConverged(const std::string& msg, EvaluationReport rep)
      : Error(msg), report_(std::move(rep)) {}
  const EvaluationReport& report() const { return report_; }

 private:
  EvaluationReport report_;
};

// Named Taylor coefficient provider k -> a_k with optional radius of
// convergence. coeff() must be deterministic; values are memoized
// internally (synchronized), keyed by the highest precision requested
// so far.
class CoefficientSource {
 public:
  using CoeffFn = std::function<Real(std::size_t k, mpfr_prec_t prec)>;

  CoefficientSource(std::string name, CoeffFn fn,
                    std::optional<double> radius = std::nullopt);

  const std::string& name() const { return name_; }
  std::optional<double> radius() const { return radius_; }
  Real coeff(std::size_t k, mpfr_prec_t prec) const;

 private:
  struct Cache;
  std::string name_;
  CoeffFn fn_;
  std::optional<double> radius_;
  std::shared_ptr<Cache> cache_;
};

enum class Form {
  ParamAtArgument,  // f(mu*x) = sum_n mu^n/(mu+1)^(n+1) * sum_k C(n,k) x^k a_k
  ParamFree,        // f(x)    = sum_n (mu+1)^-(n+1)     * sum_k C(n,k) mu^(n-k) x^k a_k
};

struct TransformSpec {
  Real x;
  Real mu;
  Form form;
  StoppingRule stop;
};

// mu^n / (mu+1)^(n+1), with 0^0 = 1. Throws DivisionByZero at mu = -1.
Real weight(int n, const Real& mu);

// sum_{k=0..n} C(n,k) x^k a_k at the given working precision.
Real inner_sum(int n, const Real& x, const CoefficientSource& coeffs,
               mpfr_prec_t working_prec);

// Heuristic geometric tail bound |last_term| * r/(1-r), r = |mu/(mu+1)|.
Real tail_estimate(const Real& last_term, const Real& mu);

// Core engine shared by both forms. Does not throw on non-convergence
// (report.converged is false instead); throws InvalidMu / DomainError
// on precondition violations. When partial_trace is given, the partial
// sum after each outer term is appended to it (working precision).
EvaluationReport run_transform(const CoefficientSource& coeffs,
                               const TransformSpec& spec,
                               const PrecisionPolicy& policy,
                               std::vector<Real>* partial_trace = nullptr);

// ParamAtArgument-form evaluation targeting f(mu*x). Throws NotConverged when
// max_terms is exhausted with estimated tail above tolerance.
EvaluationReport transform_eval(const CoefficientSource& coeffs, const Real& x,
                                const Real& mu, const StoppingRule& stop,
                                const PrecisionPolicy& policy,
                                std::vector<Real>* partial_trace = nullptr);

// ParamFree-form evaluation targeting f(x) itself.
EvaluationReport transform_eval_paramfree(const CoefficientSource& coeffs,
                                          const Real& x, const Real& mu,
                                          const StoppingRule& stop,
                                          const PrecisionPolicy& policy,
                                          std::vector<Real>* partial_trace = nullptr);

// Exact-rational evaluation path used by exactness tests: partial sum
// of either form through outer index n_max inclusive, all arithmetic
// in ExactRational.
struct ExactSeries {
  std::string name;
  std::function<exactmath::ExactRational(std::size_t)> coeff;
};

exactmath::ExactRational transform_partial_exact(const ExactSeries& series,
                                                 const exactmath::ExactRational& x,
                                                 const exactmath::ExactRational& mu,
                                                 int n_max, Form form);

}  // namespace museries::transform
