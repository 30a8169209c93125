#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "museries/real.hpp"
#include "museries/registry.hpp"

namespace museries::studies {

// One row of a mu sweep. final_error is measured against the
// representation's registered oracle, never the engine's own tail
// estimate; terms_to_tolerance is empty when max_terms ran out.
struct SweepRecord {
  Real mu;
  std::optional<int> terms_to_tolerance;
  Real final_error;
  Real tolerance;
};

struct StudyConfig {
  std::string representation;
  std::map<std::string, std::string> params;
  std::vector<Real> mu_grid;
  Real tolerance = Real::pow10(-10, 96);
  int max_terms = 400;
  mpfr_prec_t precision_bits = 256;
};

// One record per grid mu, in grid order; a grid containing an Invalid
// mu is rejected before any evaluation.
std::vector<SweepRecord> mu_sweep(const StudyConfig& cfg);

// |partial_sum(N) - oracle| for N = 1..n_max.
std::vector<std::pair<int, Real>> error_curve(
    const std::string& representation,
    const std::map<std::string, std::string>& params, const Real& mu, int n_max,
    mpfr_prec_t precision_bits);

// 17-point grid search over [lo, hi] minimizing terms-to-tolerance
// (final error breaks ties), then one golden-section refinement pass
// around the best bracket. Deterministic.
std::pair<Real, int> optimal_mu(const std::string& representation,
                                const std::map<std::string, std::string>& params,
                                const Real& tolerance, std::pair<Real, Real> interval,
                                int max_terms, mpfr_prec_t precision_bits);

// Least-squares slope of ln(error) vs N over the last `window` points
// with nonzero error.
double fit_decay_exponent(const std::vector<std::pair<int, Real>>& curve, int window);

// CSV serialization shared by the CLI: header
// "mu,terms_to_tolerance,final_error,tolerance", one row per record in
// grid order, plain decimal strings.
std::string to_csv(const std::vector<SweepRecord>& records);

}  // namespace museries::studies
