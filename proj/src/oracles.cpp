#include "museries/oracles.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "museries/errors.hpp"

namespace museries::oracles {

using exactmath::ExactInt;
using exactmath::ExactRational;

namespace {

// Rounding allowance added on top of a truncation bound.
Real rounding_slack(const Real& value, mpfr_prec_t out_prec) {
  return (abs(value) + 1L) * Real::exp2i(-(static_cast<long>(out_prec) + 8), 64);
}

long error_exponent(const Real& target_error) {
  if (!(target_error > 0L)) throw DomainError("target_error must be positive");
  return mpfr_get_exp(target_error.raw());  // err = m*2^e, m in [0.5, 1)
}

Real ui_pow_neg(unsigned long base, unsigned long e, mpfr_prec_t prec) {
  Real p(prec);
  mpfr_ui_pow_ui(p.raw(), base, e, MPFR_RNDN);
  return 1L / p;
}

Real pochhammer(const Real& s, int m) {
  Real p(1L, s.precision());
  for (int i = 0; i < m; ++i) p *= (s + static_cast<long>(i));
  return p;
}

}  // namespace

mpfr_prec_t bits_for_error(const Real& target_error) {
  const long e = error_exponent(target_error);
  return static_cast<mpfr_prec_t>(std::max(64L, -e + 48));
}

const ExactRational& bernoulli_2j(int j) {
  static const std::vector<ExactRational> table = {
      exactmath::rational(1, 6),      exactmath::rational(-1, 30),
      exactmath::rational(1, 42),     exactmath::rational(-1, 30),
      exactmath::rational(5, 66),     exactmath::rational(-691, 2730),
      exactmath::rational(7, 6),      exactmath::rational(-3617, 510)};
  if (j < 1 || j > 8) throw DomainError("bernoulli_2j: j out of table range");
  return table[static_cast<std::size_t>(j - 1)];
}

ExactRational harmonic_exact(unsigned long n) {
  ExactRational h(0);
  for (unsigned long k = 1; k <= n; ++k) h += ExactRational(1, k);
  return h;
}

Real harmonic(unsigned long n, mpfr_prec_t prec) {
  Real h(prec);
  for (unsigned long k = 1; k <= n; ++k) h += 1L / Real(k, prec);
  return h;
}

std::pair<Real, Real> euler_alternating_sum(
    const std::function<Real(unsigned long, mpfr_prec_t)>& b,
    const Real& target_error, mpfr_prec_t out_prec) {
  const Real b0_probe = b(0, 64);
  const long b0_exp = b0_probe.is_zero() ? 0 : mpfr_get_exp(b0_probe.raw());
  const long cap = -error_exponent(target_error) + b0_exp + 80;
  const mpfr_prec_t w = out_prec + static_cast<mpfr_prec_t>(cap) + 32;

  std::vector<Real> d;
  d.reserve(static_cast<std::size_t>(cap) + 1);
  for (long j = 0; j <= cap; ++j) d.push_back(b(static_cast<unsigned long>(j), w));

  Real sum(w);
  Real bound(w);
  const Real half_err = target_error / 2L;
  for (long n = 0; n <= cap; ++n) {
    const Real term = ldexp2(d[0], -(n + 1));
    sum += term;
    // Differences are nonnegative and decreasing, so the remaining
    // tail is at most 2^-(n+1) * (Delta^(n+1) b)_0 <= term.
    bound = abs(term);
    if (bound <= half_err) {
      return {sum.at_precision(out_prec),
              (bound + rounding_slack(sum, out_prec)).at_precision(out_prec)};
    }
    for (long j = 0; j < cap - n; ++j) d[static_cast<std::size_t>(j)] -= d[static_cast<std::size_t>(j) + 1];
  }
  throw Error("euler_alternating_sum: remainder bound not reached within cap");
}

OracleValue zeta_ref(const Real& s, const Real& target_error) {
  if (!(s > 1L)) throw DomainError("zeta_ref: requires s > 1");
  const mpfr_prec_t out = bits_for_error(target_error) + 16;
  const mpfr_prec_t w = out + 32;
  const Real s_w = s.at_precision(w);
  const Real denom = 1L - pow(Real(2L, w), 1L - s_w);

  const Real eta_target = target_error * denom / 4L;
  auto b = [&s_w](unsigned long j, mpfr_prec_t prec) {
    return pow(Real(j + 1, prec), -s_w.at_precision(prec));
  };
  auto [eta, eta_bound] = euler_alternating_sum(b, eta_target, w);

  const Real value = eta / denom;
  const Real claimed = eta_bound / denom + rounding_slack(value, out);
  return {value.at_precision(out), "eta-euler-transform", claimed.at_precision(64)};
}

namespace {

// zeta(m) - 1 = sum_{j>=2} j^-m, cached at the highest precision seen.
Real zeta_minus1_uncached(unsigned long m, mpfr_prec_t prec) {
  if (m < 2) throw DomainError("zeta_int: requires m >= 2");
  const long direct_log2_terms = (static_cast<long>(prec) + 4) / (static_cast<long>(m) - 1);
  if (direct_log2_terms <= 9) {
    // Direct tail sum; integral bound J^(1-m)/(m-1) below 2^-(prec+4).
    const unsigned long terms = (1UL << std::max(1L, direct_log2_terms)) + 2;
    const mpfr_prec_t w = prec + 32;
    Real sum(w);
    for (unsigned long j = terms + 1; j >= 2; --j) sum += ui_pow_neg(j, m, w);
    return sum.at_precision(prec);
  }
  const mpfr_prec_t w = prec + static_cast<mpfr_prec_t>(m) + 16;
  const Real target = Real::exp2i(-(static_cast<long>(prec) + 4), 64);
  auto b = [m](unsigned long j, mpfr_prec_t p) { return ui_pow_neg(j + 1, m, p); };
  auto [eta, bound] = euler_alternating_sum(b, target, w);
  (void)bound;
  const Real denom = 1L - Real::exp2i(1L - static_cast<long>(m), w);
  return (eta / denom - 1L).at_precision(prec);
}

Real zeta_minus1_cached(unsigned long m, mpfr_prec_t prec) {
  static std::mutex mutex;
  static std::map<unsigned long, Real> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end() || it->second.precision() < prec) {
    Real v = zeta_minus1_uncached(m, prec);
    if (it == cache.end()) {
      it = cache.emplace(m, std::move(v)).first;
    } else {
      it->second = std::move(v);
    }
  }
  return it->second.at_precision(prec);
}

}  // namespace

Real zeta_int(unsigned long m, mpfr_prec_t prec) {
  return 1L + zeta_minus1_cached(m, prec + 8);
}

Real zeta_minus1_int(unsigned long m, mpfr_prec_t prec) {
  return zeta_minus1_cached(m, prec);
}

OracleValue pi_ref(const Real& target_error) {
  const mpfr_prec_t out = bits_for_error(target_error) + 16;
  const mpfr_prec_t w = out + 32;
  const Real piece_target = (target_error / 64L).at_precision(64);

  auto arctan_inv = [&](unsigned long q) {
    // arctan(1/q) = sum (-1)^k q^-(2k+1) / (2k+1); alternating, so the
    // tail is below the first omitted term.
    const Real inv_q2 = 1L / Real(q * q, w);
    Real p = 1L / Real(q, w);
    Real sum(w);
    long k = 0;
    while (true) {
      const Real term = p / (2 * k + 1);
      if (term <= piece_target) return std::pair<Real, Real>{sum, term};
      sum += (k % 2 == 0) ? term : -term;
      p *= inv_q2;
      ++k;
      if (k > 1000000) throw Error("pi_ref: arctan series did not terminate");
    }
  };

  auto [a5, t5] = arctan_inv(5);
  auto [a239, t239] = arctan_inv(239);
  const Real value = 16L * a5 - 4L * a239;
  const Real claimed = 16L * t5 + 4L * t239 + rounding_slack(value, out);
  return {value.at_precision(out), "machin-arctan", claimed.at_precision(64)};
}

OracleValue gamma_ref_at(unsigned long n, mpfr_prec_t out_prec) {
  const mpfr_prec_t w = out_prec + 64;
  const Real h = harmonic(n, w);
  const Real n_real(n, w);
  Real value = h - log(n_real) - 1L / (2L * n_real);
  for (int j = 1; j <= 4; ++j) {
    ExactInt npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), n, static_cast<unsigned long>(2 * j));
    value += Real(bernoulli_2j(j), w) / (Real(npow, w) * (2L * j));
  }
  // First dropped term: B_10 / (10 n^10), B_10 = 5/66.
  ExactInt n10;
  mpz_ui_pow_ui(n10.get_mpz_t(), n, 10);
  const Real dropped = Real(exactmath::rational(5, 66), w) / (Real(n10, w) * 10L);
  const Real claimed = 2L * abs(dropped) + rounding_slack(value, out_prec);
  return {value.at_precision(out_prec), "harmonic-euler-maclaurin", claimed.at_precision(64)};
}

OracleValue gamma_ref(const Real& target_error) {
  const mpfr_prec_t out = bits_for_error(target_error) + 16;
  const double log2_err = static_cast<double>(error_exponent(target_error));
  unsigned long n = 100000;
  // 2 * (1/132) n^-10 <= err/2
  while (std::log2(1.0 / 66.0) - 10.0 * std::log2(static_cast<double>(n)) >
             log2_err - 2.0 &&
         n < 100000000UL) {
    n *= 10;
  }
  return gamma_ref_at(n, out);
}

namespace {

// Asymptotic psi at large t, Bernoulli terms through B_16.
Real digamma_asymptotic(const Real& t) {
  Real v = log(t) - 1L / (2L * t);
  const Real t2 = t * t;
  Real tpow = t2;  // t^(2j)
  for (int j = 1; j <= 8; ++j) {
    v -= Real(bernoulli_2j(j), t.precision()) / (tpow * (2L * j));
    tpow *= t2;
  }
  return v;
}

unsigned long shift_target(const Real& target_error, double dropped_coeff, double inv_power) {
  const double log_err = static_cast<double>(error_exponent(target_error)) * 0.6931471805599453;
  double t = std::exp((std::log(dropped_coeff) - log_err + 1.4) * inv_power);
  if (!(t > 20.0)) t = 20.0;
  if (t > 5e6) throw DomainError("oracle shift target too large for this error goal");
  return static_cast<unsigned long>(std::ceil(t));
}

}  // namespace

OracleValue digamma_ref(const Real& x, const Real& target_error) {
  if (!(x > 0L)) throw DomainError("digamma_ref: requires x > 0");
  const mpfr_prec_t out = bits_for_error(target_error) + 16;
  const mpfr_prec_t w = out + 64;
  // First dropped term |B_18|/(18 t^18) ~ 3.06 t^-18.
  const unsigned long T = shift_target(target_error, 3.06, 1.0 / 18.0);

  const Real xw = x.at_precision(w);
  Real value(w);
  unsigned long shifts = 0;
  while (xw + static_cast<long>(shifts) < Real(T, w)) {
    value -= 1L / (xw + static_cast<long>(shifts));
    ++shifts;
  }
  const Real t = xw + static_cast<long>(shifts);
  value += digamma_asymptotic(t);

  const Real dropped = Real(3.06, w) / pow(t, 18L);
  const Real claimed = 2L * dropped + rounding_slack(value, out);
  return {value.at_precision(out), "recurrence-asymptotic", claimed.at_precision(64)};
}

OracleValue loggamma_ref(const Real& x, const Real& target_error) {
  if (!(x > 0L)) throw DomainError("loggamma_ref: requires x > 0");
  const mpfr_prec_t out = bits_for_error(target_error) + 16;
  const mpfr_prec_t w = out + 64;
  // First dropped term |B_18|/(18*17 t^17) ~ 0.18 t^-17.
  const unsigned long T = shift_target(target_error, 0.18, 1.0 / 17.0);

  const Real xw = x.at_precision(w);
  Real correction(w);
  unsigned long shifts = 0;
  while (xw + static_cast<long>(shifts) < Real(T, w)) {
    correction += log(xw + static_cast<long>(shifts));
    ++shifts;
  }
  const Real t = xw + static_cast<long>(shifts);

  Real v = (t - Real(0.5, w)) * log(t) - t + log(2L * Real::pi(w)) / 2L;
  const Real t2 = t * t;
  Real tpow = t;  // t^(2j-1)
  for (int j = 1; j <= 8; ++j) {
    v += Real(bernoulli_2j(j), w) / (tpow * (2L * j) * (2L * j - 1));
    tpow *= t2;
  }
  const Real value = v - correction;

  const Real dropped = Real(0.18, w) / pow(t, 17L);
  const Real claimed = 2L * dropped + rounding_slack(value, out);
  return {value.at_precision(out), "stirling-asymptotic", claimed.at_precision(64)};
}

OracleValue polylog_ref(const Real& x, const Real& s, const Real& target_error) {
  if (!(s > 1L)) throw DomainError("polylog_ref: requires s > 1");
  const mpfr_prec_t out = bits_for_error(target_error) + 16;
  const mpfr_prec_t w = out + 32;

  if (x.is_zero()) return {Real(out), "direct-sum", Real(64)};
  if (x == 1L) {
    OracleValue z = zeta_ref(s, target_error);
    z.method = "zeta-" + z.method;
    return z;
  }
  if (x == -1L) {
    OracleValue z = zeta_ref(s, target_error / 2L);
    const Real scale = 1L - pow(Real(2L, w), 1L - s.at_precision(w));
    const Real value = -(scale * z.value);
    const Real claimed = z.claimed_error * scale + rounding_slack(value, out);
    return {value.at_precision(out), "eta-" + z.method, claimed.at_precision(64)};
  }
  if (!(abs(x) <= Real(0.95, w))) {
    throw DomainError("polylog_ref: requires |x| <= 0.95 or x = +-1");
  }

  const Real xw = x.at_precision(w);
  const Real sw = s.at_precision(w);
  const Real ax = abs(xw);
  Real sum(w);
  Real x_pow(1L, w);
  const Real half_err = target_error / 2L;
  Real bound(w);
  for (long k = 1; k <= 4000000; ++k) {
    x_pow *= xw;
    sum += x_pow / pow(Real(k, w), sw);
    bound = abs(x_pow * ax) / (pow(Real(k + 1, w), sw) * (1L - ax));
    if (bound <= half_err) {
      return {sum.at_precision(out), "direct-sum",
              (bound + rounding_slack(sum, out)).at_precision(64)};
    }
  }
  throw Error("polylog_ref: series did not reach the error target");
}

namespace {

// Tail sum_{n>N} (n+a)^-s by Euler-Maclaurin at c = N+1+a, Bernoulli
// terms through B_16; returns (tail value, bound on the remainder).
std::pair<Real, Real> hurwitz_tail(const Real& c, const Real& s) {
  const mpfr_prec_t w = c.precision();
  Real tail = pow(c, 1L - s) / (s - 1L) + pow(c, -s) / 2L;
  const Real c2 = c * c;
  Real cpow = pow(c, -s) / c;  // c^(-s-2j+1) at j = 1
  for (int j = 1; j <= 8; ++j) {
    ExactInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
    tail += Real(bernoulli_2j(j), w) * pochhammer(s, 2 * j - 1) * cpow / Real(fact, w);
    cpow /= c2;
  }
  // Next term with |B_18| = 43867/798 and 18!.
  ExactInt fact18;
  mpz_fac_ui(fact18.get_mpz_t(), 18);
  const Real next =
      Real(exactmath::rational(43867, 798), w) * pochhammer(s, 17) * cpow / Real(fact18, w);
  return {tail, 2L * abs(next)};
}

}  // namespace

OracleValue lerch_ref(const Real& x, const Real& a, const Real& s,
                      const Real& target_error) {
  if (!(a > 0L)) throw DomainError("lerch_ref: requires a > 0");
  if (!(s > 1L)) throw DomainError("lerch_ref: requires s > 1");
  const mpfr_prec_t out = bits_for_error(target_error) + 16;
  const mpfr_prec_t w = out + 32;
  const Real aw = a.at_precision(w);
  const Real sw = s.at_precision(w);

  if (x.is_zero()) {
    const Real value = pow(aw, -sw);
    return {value.at_precision(out), "direct-sum",
            rounding_slack(value, out).at_precision(64)};
  }

  if (x == 1L) {
    long n_terms = 160;
    const Real half_err = target_error / 2L;
    while (true) {
      const Real c = aw + (n_terms + 1);
      auto [tail, rem] = hurwitz_tail(c, sw);
      if (rem <= half_err || n_terms >= 41000) {
        Real sum(w);
        for (long n = 0; n <= n_terms; ++n) sum += pow(aw + n, -sw);
        const Real value = sum + tail;
        const Real claimed = rem + rounding_slack(value, out);
        return {value.at_precision(out), "euler-maclaurin",
                claimed.at_precision(64)};
      }
      n_terms *= 2;
    }
  }

  if (x == -1L) {
    auto b = [&aw, &sw](unsigned long n, mpfr_prec_t p) {
      return pow(aw.at_precision(p) + static_cast<long>(n), -sw.at_precision(p));
    };
    auto [value, bound] = euler_alternating_sum(b, target_error, out);
    return {value, "eta-euler-transform",
            (bound + rounding_slack(value, out)).at_precision(64)};
  }

  if (!(abs(x) <= Real(0.95, w))) {
    throw DomainError("lerch_ref: requires |x| <= 0.95 or x = +-1");
  }

  const Real xw = x.at_precision(w);
  const Real ax = abs(xw);
  Real sum = pow(aw, -sw);
  Real x_pow(1L, w);
  const Real half_err = target_error / 2L;
  for (long n = 1; n <= 4000000; ++n) {
    x_pow *= xw;
    sum += x_pow / pow(aw + n, sw);
    const Real bound = abs(x_pow * ax) / (pow(aw + (n + 1), sw) * (1L - ax));
    if (bound <= half_err) {
      return {sum.at_precision(out), "direct-sum",
              (bound + rounding_slack(sum, out)).at_precision(64)};
    }
  }
  throw Error("lerch_ref: series did not reach the error target");
}

namespace {

std::pair<Real, Real> agm_k_and_e(const Real& x, mpfr_prec_t out) {
  const mpfr_prec_t w = out + 32;
  const Real xw = x.at_precision(w);
  Real a(1L, w);
  Real b = sqrt(1L - xw * xw);
  Real c_sq_sum = xw * xw / 2L;  // sum 2^(j-1) c_j^2, j = 0 term
  const Real eps = Real::exp2i(-(static_cast<long>(w) - 8), w);
  Real factor(1L, w);  // 2^(j-1) for j = 1
  for (int iter = 0; iter < 128; ++iter) {
    const Real c_next = (a - b) / 2L;
    if (abs(c_next) <= eps) break;
    const Real a_next = (a + b) / 2L;
    b = sqrt(a * b);
    a = a_next;
    c_sq_sum += factor * c_next * c_next;
    factor *= 2L;
  }
  const Real k = Real::pi(w) / (2L * a);
  const Real e = k * (1L - c_sq_sum);
  return {k, e};
}

}  // namespace

OracleValue elliptic_k_agm(const Real& x, const Real& target_error) {
  if (x.sign() < 0 || !(x < 1L)) throw DomainError("elliptic_k_agm: requires 0 <= x < 1");
  const mpfr_prec_t out = bits_for_error(target_error) + 16;
  auto [k, e] = agm_k_and_e(x, out);
  (void)e;
  return {k.at_precision(out), "agm", rounding_slack(k, out).at_precision(64)};
}

OracleValue elliptic_e_agm(const Real& x, const Real& target_error) {
  if (x.sign() < 0 || !(x < 1L)) throw DomainError("elliptic_e_agm: requires 0 <= x < 1");
  const mpfr_prec_t out = bits_for_error(target_error) + 16;
  auto [k, e] = agm_k_and_e(x, out);
  (void)k;
  return {e.at_precision(out), "agm", rounding_slack(e, out).at_precision(64)};
}

OracleValue m_ref(const Real& target_error) {
  const mpfr_prec_t out = bits_for_error(target_error) + 16;
  const mpfr_prec_t w = out + 64;
  Real sum(w);
  Real h(w);
  const Real half_err = target_error / 2L;
  for (long n = 1; n <= 100000; ++n) {
    h += 1L / Real(n, w);
    sum += h * zeta_minus1_cached(static_cast<unsigned long>(n) + 1, w);
    // Tail bound via zeta(m+1)-1 < 2^-(m+1) (1 + 2/m):
    // sum_{m>n} H_m (zeta-1) <= (1+2/n) 2^-(n+1) (H_n + 2).
    const Real bound = (1L + Real(2L, w) / n) * ldexp2(h + 2L, -(n + 1));
    if (bound <= half_err) {
      return {sum.at_precision(out), "harmonic-zeta-tail",
              (bound + rounding_slack(sum, out)).at_precision(64)};
    }
  }
  throw Error("m_ref: series did not reach the error target");
}

}  // namespace museries::oracles
