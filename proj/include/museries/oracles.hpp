#pragma once

#include <functional>
#include <string>
#include <utility>

#include "museries/exactmath.hpp"
#include "museries/real.hpp"

namespace museries::oracles {

// Reference value computed by a classical method, independent of the
// series-transform engine, with a certified error claim.
struct OracleValue {
  Real value;
  std::string method;
  Real claimed_error;
};

// zeta(s) for real s > 1, via the alternating eta series with
// Euler-transform acceleration and its standard remainder bound.
OracleValue zeta_ref(const Real& s, const Real& target_error);

// Machin arctan formula, alternating tail bounds.
OracleValue pi_ref(const Real& target_error);

// Euler's constant via H_n - ln n with Euler-Maclaurin corrections
// through B_8; claimed error from the first dropped term.
OracleValue gamma_ref(const Real& target_error);
OracleValue gamma_ref_at(unsigned long n, mpfr_prec_t out_prec);

// psi(x) for x > 0: upward recurrence then the asymptotic series.
OracleValue digamma_ref(const Real& x, const Real& target_error);

// ln Gamma(x) for x > 0: Stirling series with upward shift.
OracleValue loggamma_ref(const Real& x, const Real& target_error);

// Li_s(x) for s > 1 and |x| <= 0.95 (direct sum) or x = +-1 (via zeta).
OracleValue polylog_ref(const Real& x, const Real& s, const Real& target_error);

// Lerch Phi(x, a, s) = sum x^n/(n+a)^s for a > 0, s > 1 and
// |x| <= 0.95 (direct), x = 1 (Euler-Maclaurin tail) or x = -1
// (accelerated alternating sum).
OracleValue lerch_ref(const Real& x, const Real& a, const Real& s,
                      const Real& target_error);

// Complete elliptic integrals via the arithmetic-geometric mean,
// 0 <= x < 1.
OracleValue elliptic_k_agm(const Real& x, const Real& target_error);
OracleValue elliptic_e_agm(const Real& x, const Real& target_error);

// The constant M as sum H_n (zeta(n+1) - 1); geometric tail bound from
// the two-sided zeta - 1 estimate.
OracleValue m_ref(const Real& target_error);

// zeta(m) for integer m >= 2 with error below 2^-prec; memoized across
// calls (thread-safe).
Real zeta_int(unsigned long m, mpfr_prec_t prec);

// zeta(m) - 1 without subtractive cancellation (same cache).
Real zeta_minus1_int(unsigned long m, mpfr_prec_t prec);

exactmath::ExactRational harmonic_exact(unsigned long n);
Real harmonic(unsigned long n, mpfr_prec_t prec);

// B_2, B_4, ..., B_16 as exact rationals (j = 1..8).
const exactmath::ExactRational& bernoulli_2j(int j);

// sum_{j>=0} (-1)^j b_j for positive, totally monotone b_j, via the
// Euler transform sum_n 2^-(n+1) (Delta^n b)_0. Returns (value,
// certified tail bound); the bound uses that the forward differences
// are nonnegative and decreasing for such b.
std::pair<Real, Real> euler_alternating_sum(
    const std::function<Real(unsigned long, mpfr_prec_t)>& b,
    const Real& target_error, mpfr_prec_t out_prec);

// Working precision adequate for a result with the given error target.
mpfr_prec_t bits_for_error(const Real& target_error);

}  // namespace museries::oracles
