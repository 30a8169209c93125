#include "museries/studies.hpp"

#include <cmath>

#include "museries/errors.hpp"
#include "museries/transform.hpp"

namespace museries::studies {

using transform::EvaluationReport;
using transform::MuValidity;
using transform::StoppingRule;

namespace {

struct PointResult {
  std::optional<int> terms;
  Real error;
};

// Runs the representation with a tolerance well under the requested one
// and measures convergence against the oracle on the partial-sum trace:
// terms_to_tolerance is the first N with |partial(N) - oracle| within
// tolerance. The engine's own tail heuristic never adjudicates a sweep.
PointResult evaluate_point(const Representation& rep, const ParamMap& params,
                           const Real& mu, const Real& tolerance, int max_terms,
                           const PrecisionPolicy& policy) {
  if (!rep.oracle) {
    throw DomainError("representation '" + rep.id + "' has no registered oracle");
  }
  const StoppingRule stop{tolerance / 4096L, max_terms, 3};
  std::vector<Real> trace;
  Real value(policy.target_bits);
  try {
    value = rep.evaluate(params, mu, stop, policy, &trace).value;
  } catch (const transform::NotConverged& e) {
    value = e.report().value;
  }
  const auto ref = rep.oracle(params, mu, tolerance / 4096L);

  std::optional<int> terms;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (abs(trace[i] - ref.value.at_precision(trace[i].precision())) <= tolerance) {
      terms = static_cast<int>(i) + 1;
      break;
    }
  }
  return PointResult{terms, abs(value - ref.value.at_precision(value.precision()))};
}

}  // namespace

std::vector<SweepRecord> mu_sweep(const StudyConfig& cfg) {
  const auto& rep = find_representation(cfg.representation);
  for (const auto& mu : cfg.mu_grid) {
    if (transform::mu_validity(mu) == MuValidity::Invalid) {
      throw DomainError("mu grid contains invalid value " + mu.to_string(8));
    }
  }
  const ParamMap params = parse_params(rep, cfg.params, cfg.precision_bits);
  const PrecisionPolicy policy{cfg.precision_bits};

  std::vector<SweepRecord> records;
  records.reserve(cfg.mu_grid.size());
  for (const auto& mu : cfg.mu_grid) {
    const PointResult r =
        evaluate_point(rep, params, mu, cfg.tolerance, cfg.max_terms, policy);
    records.push_back(SweepRecord{mu, r.terms, r.error, cfg.tolerance});
  }
  return records;
}

std::vector<std::pair<int, Real>> error_curve(
    const std::string& representation,
    const std::map<std::string, std::string>& params_raw, const Real& mu, int n_max,
    mpfr_prec_t precision_bits) {
  const auto& rep = find_representation(representation);
  if (!rep.oracle) {
    throw DomainError("representation '" + representation + "' has no registered oracle");
  }
  const ParamMap params = parse_params(rep, params_raw, precision_bits);
  const PrecisionPolicy policy{precision_bits};
  // Unreachable tolerance forces all n_max terms; partials come back in
  // the trace.
  const Real unreachable =
      Real::exp2i(-static_cast<long>(policy.working_bits(n_max)) - 64, 64);
  const StoppingRule stop{unreachable, n_max, 3};

  std::vector<Real> trace;
  try {
    rep.evaluate(params, mu, stop, policy, &trace);
  } catch (const transform::NotConverged&) {
    // expected: the run exists to record partials
  }

  const auto ref = rep.oracle(params, mu, Real::exp2i(-static_cast<long>(precision_bits) - 16, 64));
  std::vector<std::pair<int, Real>> curve;
  curve.reserve(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    curve.emplace_back(static_cast<int>(i) + 1,
                       abs(trace[i] - ref.value.at_precision(trace[i].precision()))
                           .at_precision(precision_bits));
  }
  return curve;
}

std::pair<Real, int> optimal_mu(const std::string& representation,
                                const std::map<std::string, std::string>& params_raw,
                                const Real& tolerance, std::pair<Real, Real> interval,
                                int max_terms, mpfr_prec_t precision_bits) {
  const auto& [lo, hi] = interval;
  if (lo > hi) throw DomainError("optimal_mu: empty interval");
  if (transform::mu_validity(lo) == MuValidity::Invalid ||
      transform::mu_validity(hi) == MuValidity::Invalid) {
    throw DomainError("optimal_mu: interval touches the invalid mu region");
  }
  const auto& rep = find_representation(representation);
  const ParamMap params = parse_params(rep, params_raw, precision_bits);
  const PrecisionPolicy policy{precision_bits};

  struct Candidate {
    Real mu;
    std::optional<int> terms;
    Real error;
  };
  std::vector<Candidate> evaluated;
  auto probe = [&](const Real& mu) {
    const PointResult r = evaluate_point(rep, params, mu, tolerance, max_terms, policy);
    evaluated.push_back(Candidate{mu, r.terms, r.error});
  };

  if (lo == hi) {
    probe(lo);
  } else {
    const int grid_points = 17;
    for (int i = 0; i < grid_points; ++i) {
      probe(lo + (hi - lo) * static_cast<long>(i) / (grid_points - 1));
    }
  }

  auto better = [](const Candidate& a, const Candidate& b) {
    if (a.terms.has_value() != b.terms.has_value()) return a.terms.has_value();
    if (a.terms.has_value() && *a.terms != *b.terms) return *a.terms < *b.terms;
    return a.error < b.error;
  };

  auto best_index = [&]() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < evaluated.size(); ++i) {
      if (better(evaluated[i], evaluated[best])) best = i;
    }
    return best;
  };

  if (lo < hi) {
    // One golden-section pass inside the bracket around the grid best.
    const std::size_t b = best_index();
    const Real step = (hi - lo) / 16L;
    const Real blo = evaluated[b].mu - step < lo ? lo : evaluated[b].mu - step;
    const Real bhi = evaluated[b].mu + step > hi ? hi : evaluated[b].mu + step;
    const Real inv_phi = (sqrt(Real(5L, precision_bits)) - 1L) / 2L;
    probe(bhi - (bhi - blo) * inv_phi);
    probe(blo + (bhi - blo) * inv_phi);
  }

  const Candidate& best = evaluated[best_index()];
  if (!best.terms.has_value()) {
    throw NoConvergentMu("optimal_mu: no mu in the interval reached the tolerance");
  }
  return {best.mu, *best.terms};
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = "mu,terms_to_tolerance,final_error,tolerance\n";
  for (const auto& rec : records) {
    out += rec.mu.to_string(24) + ",";
    out += rec.terms_to_tolerance ? std::to_string(*rec.terms_to_tolerance)
                                  : std::string("NotReached");
    out += "," + rec.final_error.to_string(12) + "," + rec.tolerance.to_string(6) + "\n";
  }
  return out;
}

double fit_decay_exponent(const std::vector<std::pair<int, Real>>& curve, int window) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [n, err] : curve) {
    if (err > 0L) pts.emplace_back(static_cast<double>(n), log(err).to_double());
  }
  if (static_cast<int>(pts.size()) > window) {
    pts.erase(pts.begin(), pts.end() - window);
  }
  if (pts.size() < 2) throw DomainError("fit_decay_exponent: not enough points");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(pts.size());
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace museries::studies
