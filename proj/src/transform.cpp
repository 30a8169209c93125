#include "museries/transform.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace museries::transform {

using exactmath::ExactInt;
using exactmath::ExactRational;
using exactmath::PascalRow;

const char* to_string(MuValidity v) {
  switch (v) {
    case MuValidity::Safe: return "safe";
    case MuValidity::Extended: return "extended";
    case MuValidity::Invalid: return "invalid";
  }
  return "?";
}

MuValidity mu_validity(const Real& mu) {
  // Invalid: 2*mu <= -1; Safe: -1/3 <= mu <= 1; Extended otherwise.
  if (mu * 2L <= -1L) return MuValidity::Invalid;
  if (mu * 3L >= -1L && mu <= 1L) return MuValidity::Safe;
  return MuValidity::Extended;
}

struct CoefficientSource::Cache {
  std::mutex mutex;
  std::map<std::size_t, Real> values;
  mpfr_prec_t prec = 0;
};

CoefficientSource::CoefficientSource(std::string name, CoeffFn fn,
                                     std::optional<double> radius)
    : name_(std::move(name)),
      fn_(std::move(fn)),
      radius_(radius),
      cache_(std::make_shared<Cache>()) {}

Real CoefficientSource::coeff(std::size_t k, mpfr_prec_t prec) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (prec > cache_->prec) {
    cache_->values.clear();
    cache_->prec = prec;
  }
  auto it = cache_->values.find(k);
  if (it == cache_->values.end()) {
    it = cache_->values.emplace(k, fn_(k, cache_->prec)).first;
  }
  return it->second.at_precision(prec);
}

Real weight(int n, const Real& mu) {
  if (mu == -1L) throw DivisionByZero("weight: mu = -1");
  return pow(mu, static_cast<long>(n)) / pow(mu + 1L, static_cast<long>(n) + 1);
}

Real inner_sum(int n, const Real& x, const CoefficientSource& coeffs,
               mpfr_prec_t working_prec) {
  const auto row = exactmath::binomial_row(static_cast<unsigned long>(n));
  Real sum(working_prec);
  Real x_pow(1L, working_prec);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) x_pow *= x;
    sum += mul_exact_int(x_pow * coeffs.coeff(static_cast<std::size_t>(k), working_prec),
                         row[static_cast<std::size_t>(k)]);
  }
  return sum;
}

Real tail_estimate(const Real& last_term, const Real& mu) {
  const Real r = abs(mu / (mu + 1L));
  if (r >= 1L) throw InvalidMu("tail_estimate: |mu/(mu+1)| >= 1");
  return abs(last_term) * r / (1L - r);
}

EvaluationReport run_transform(const CoefficientSource& coeffs,
                               const TransformSpec& spec,
                               const PrecisionPolicy& policy,
                               std::vector<Real>* partial_trace) {
  const MuValidity validity = mu_validity(spec.mu);
  if (validity == MuValidity::Invalid) {
    throw InvalidMu("mu = " + spec.mu.to_string(8) +
                    ": |mu/(mu+1)| >= 1, outer series cannot converge");
  }
  const mpfr_prec_t w = policy.working_bits(spec.stop.max_terms);
  const Real x = spec.x.at_precision(w);
  const Real mu = spec.mu.at_precision(w);

  if (coeffs.radius() && !(abs(x) < Real(*coeffs.radius(), w))) {
    throw DomainError("source '" + coeffs.name() + "': |x| = " + x.to_string(8) +
                      " is not inside the radius of convergence");
  }

  const Real a0 = coeffs.coeff(0, w);
  if (x.is_zero()) {
    Real v = a0.at_precision(policy.target_bits);
    if (partial_trace) partial_trace->push_back(a0);
    return EvaluationReport{v, 1, v, Real(policy.target_bits), validity, true};
  }

  const Real mu_plus_1 = mu + 1L;
  const Real ratio = spec.form == Form::ParamAtArgument ? mu / mu_plus_1 : 1L / mu_plus_1;
  const Real r_abs = abs(mu / mu_plus_1);
  const Real tail_factor = r_abs / (1L - r_abs);
  const Real tol = spec.stop.tolerance.at_precision(w);

  Real sum(w);
  Real outer_weight = 1L / mu_plus_1;  // n = 0 weight for both forms
  Real x_pow(1L, w);
  Real last_incr(w);
  Real last_tail(w);
  PascalRow pascal;
  std::vector<Real> scaled_coeffs;  // x^k a_k
  std::vector<Real> mu_pow;         // mu^j, with mu^0 = 1 also at mu = 0
  scaled_coeffs.reserve(static_cast<std::size_t>(spec.stop.max_terms));
  if (spec.form == Form::ParamFree) {
    mu_pow.reserve(static_cast<std::size_t>(spec.stop.max_terms));
    mu_pow.emplace_back(1L, w);
  }

  int small_streak = 0;
  int terms = 0;
  bool converged = false;

  for (int n = 0; n < spec.stop.max_terms; ++n) {
    if (n > 0) {
      x_pow *= x;
      pascal.advance();
      if (spec.form == Form::ParamFree) mu_pow.push_back(mu_pow.back() * mu);
    }
    scaled_coeffs.push_back(x_pow * coeffs.coeff(static_cast<std::size_t>(n), w));

    Real inner(w);
    if (spec.form == Form::ParamAtArgument) {
      for (int k = 0; k <= n; ++k) {
        inner += mul_exact_int(scaled_coeffs[static_cast<std::size_t>(k)],
                               pascal[static_cast<std::size_t>(k)]);
      }
    } else {
      for (int k = 0; k <= n; ++k) {
        inner += mul_exact_int(scaled_coeffs[static_cast<std::size_t>(k)] *
                                   mu_pow[static_cast<std::size_t>(n - k)],
                               pascal[static_cast<std::size_t>(k)]);
      }
    }

    const Real incr = outer_weight * inner;
    sum += incr;
    terms = n + 1;
    last_incr = incr;
    last_tail = abs(incr) * tail_factor;
    if (partial_trace) partial_trace->push_back(sum);

    // The tail factor alone is blind at mu = 0 (r = 0), so a term only
    // counts as small when the increment itself is below tolerance too.
    if (last_tail <= tol && abs(incr) <= tol) {
      if (++small_streak >= spec.stop.consecutive_small) {
        converged = true;
        break;
      }
    } else {
      small_streak = 0;
    }

    outer_weight *= ratio;
  }

  return EvaluationReport{sum.at_precision(policy.target_bits),
                          terms,
                          last_incr.at_precision(policy.target_bits),
                          last_tail.at_precision(policy.target_bits),
                          validity,
                          converged};
}

namespace {
EvaluationReport eval_or_throw(const CoefficientSource& coeffs, const Real& x,
                               const Real& mu, const StoppingRule& stop,
                               const PrecisionPolicy& policy, Form form,
                               std::vector<Real>* partial_trace) {
  EvaluationReport rep =
      run_transform(coeffs, TransformSpec{x, mu, form, stop}, policy, partial_trace);
  if (!rep.converged) {
    const std::string msg = "source '" + coeffs.name() + "': not converged after " +
                            std::to_string(rep.terms_used) +
                            " terms (estimated tail " + rep.estimated_tail.to_string(6) + ")";
    throw NotConverged(msg, std::move(rep));
  }
  return rep;
}
}  // namespace

EvaluationReport transform_eval(const CoefficientSource& coeffs, const Real& x,
                                const Real& mu, const StoppingRule& stop,
                                const PrecisionPolicy& policy,
                                std::vector<Real>* partial_trace) {
  return eval_or_throw(coeffs, x, mu, stop, policy, Form::ParamAtArgument, partial_trace);
}

EvaluationReport transform_eval_paramfree(const CoefficientSource& coeffs,
                                          const Real& x, const Real& mu,
                                          const StoppingRule& stop,
                                          const PrecisionPolicy& policy,
                                          std::vector<Real>* partial_trace) {
  return eval_or_throw(coeffs, x, mu, stop, policy, Form::ParamFree, partial_trace);
}

ExactRational transform_partial_exact(const ExactSeries& series,
                                      const ExactRational& x,
                                      const ExactRational& mu, int n_max,
                                      Form form) {
  if (mu == -1) throw DivisionByZero("transform_partial_exact: mu = -1");
  const ExactRational mu_plus_1 = mu + 1;
  const ExactRational ratio =
      form == Form::ParamAtArgument ? ExactRational(mu / mu_plus_1)
                                    : ExactRational(1 / mu_plus_1);

  ExactRational sum(0);
  ExactRational outer_weight = 1 / mu_plus_1;
  ExactRational x_pow(1);
  PascalRow pascal;
  std::vector<ExactRational> scaled;  // x^k a_k
  std::vector<ExactRational> mu_pow{ExactRational(1)};

  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      x_pow *= x;
      pascal.advance();
      mu_pow.push_back(mu_pow.back() * mu);
    }
    scaled.push_back(x_pow * series.coeff(static_cast<std::size_t>(n)));

    ExactRational inner(0);
    for (int k = 0; k <= n; ++k) {
      ExactRational term = scaled[static_cast<std::size_t>(k)];
      if (form == Form::ParamFree) term *= mu_pow[static_cast<std::size_t>(n - k)];
      inner += term * ExactRational(pascal[static_cast<std::size_t>(k)]);
    }
    sum += outer_weight * inner;
    outer_weight *= ratio;
  }
  return sum;
}

}  // namespace museries::transform
