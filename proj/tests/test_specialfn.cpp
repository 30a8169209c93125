#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "museries/errors.hpp"
#include "museries/oracles.hpp"
#include "museries/specialfn.hpp"
#include "test_util.hpp"

using namespace museries;
using namespace museries::specialfn;
using exactmath::ExactRational;
using exactmath::rational;
using testutil::close;
using testutil::tol10;

namespace {

const PrecisionPolicy kPolicy{256};
const Real kErr40 = Real::pow10(-40, 96);

StoppingRule stop(long tol_exp, int max_terms = 400) {
  return StoppingRule{Real::pow10(tol_exp, 96), max_terms, 3};
}

}  // namespace

TEST_CASE("zeta_param reproduces zeta") {
  const auto z2 = zeta_param(Real(2L, 256), Real(1L, 256), stop(-27), kPolicy);
  CHECK(close(z2, oracles::zeta_ref(Real(2L, 96), kErr40).value, tol10(-25)));

  const auto z4 = zeta_param(Real(4L, 256), Real(1L, 256), stop(-27), kPolicy);
  const Real pi = Real::pi(400);
  CHECK(close(z4, pow(pi, 4L) / 90L, tol10(-25)));

  // mu other than 1 reaches the same value.
  const auto z2b = zeta_param(Real(2L, 256), Real(0.5, 256), stop(-27), kPolicy);
  CHECK(close(z2, z2b, tol10(-24)));

  // s = 20 obeys the two-sided zeta-1 estimate (at n = 19).
  const auto z20 = zeta_param(Real(20L, 256), Real(1L, 256), stop(-30), kPolicy);
  const Real lo = Real::exp2i(-20, 256);
  CHECK(z20 - 1L > lo);
  CHECK(z20 - 1L < lo * (1L + Real(rational(2, 19), 256)));

  CHECK_THROWS_AS(zeta_param(Real(0.5, 256), Real(1L, 256), stop(-20), kPolicy),
                  DomainError);
}

TEST_CASE("lerch_param values") {
  // Phi(-1,1,2) = (1 - 2^-1) zeta(2) = pi^2/12
  const auto v = lerch_param(Real(1L, 256), Real(1L, 256), Real(2L, 256), stop(-25), kPolicy);
  const Real pi = Real::pi(400);
  CHECK(close(v, pi * pi / 12L, tol10(-22)));

  // x = 0: only n = 0 survives.
  const auto v0 = lerch_param(Real(256), Real(2L, 256), Real(3L, 256), stop(-25), kPolicy);
  CHECK(v0 == Real(0.125, 256));

  // Matches the direct-sum oracle off the special points.
  const auto v1 = lerch_param(Real(0.4, 256), Real(1.5, 256), Real(2.5, 256),
                              stop(-16), kPolicy);
  const auto ref = oracles::lerch_ref(Real(-0.4, 96), Real(1.5, 96), Real(2.5, 96), kErr40);
  CHECK(close(v1, ref.value, tol10(-12)));

  CHECK_THROWS_AS(lerch_param(Real(-0.6, 256), Real(1L, 256), Real(2L, 256),
                              stop(-16), kPolicy),
                  DomainError);
  CHECK_THROWS_AS(lerch_param(Real(0.5, 256), Real(-1L, 256), Real(2L, 256),
                              stop(-16), kPolicy),
                  DomainError);
}

TEST_CASE("polylog_param values") {
  const Real pi = Real::pi(400);
  // Li_2(-1) = -pi^2/12
  const auto v = polylog_param(Real(-1L, 256), Real(2L, 256), Real(1L, 256),
                               stop(-16), kPolicy);
  CHECK(close(v, -(pi * pi / 12L), tol10(-12)));

  // Li_2(1/2) = pi^2/12 - ln(2)^2/2
  const auto vh = polylog_param(Real(0.5, 256), Real(2L, 256), Real(1L, 256),
                                stop(-16), kPolicy);
  const Real ln2 = log(Real(2L, 400));
  CHECK(close(vh, pi * pi / 12L - ln2 * ln2 / 2L, tol10(-12)));

  // x = 0 gives 0.
  CHECK(polylog_param(Real(256), Real(2L, 256), Real(1L, 256), stop(-16), kPolicy)
            .is_zero());

  // x = 1 approaches zeta(2) but only at the harmonic-type n^-s rate.
  try {
    polylog_param_report(Real(1L, 256), Real(2L, 256), Real(1L, 256),
                         StoppingRule{Real::pow10(-14, 96), 800, 3}, PrecisionPolicy{128});
    FAIL("expected NotConverged at x = 1");
  } catch (const transform::NotConverged& e) {
    const Real z2 = oracles::zeta_int(2, 300);
    CHECK(close(e.report().value, z2, tol10(-2)));
  }

  CHECK_THROWS_AS(polylog_param(Real(1.5, 256), Real(2L, 256), Real(1L, 256),
                                stop(-16), kPolicy),
                  DomainError);
}

TEST_CASE("pi_param hits pi and its first term is zeta(2)/8") {
  std::vector<Real> trace;
  const auto rep = pi_param_report(Real(1L, 256), stop(-14, 400), kPolicy, &trace);
  const auto pi = oracles::pi_ref(kErr40);
  CHECK(close(rep.value, pi.value, tol10(-12)));

  // n = 0 term vanishes, n = 1 term is C(1,1) (1/2) zeta(2) / 4.
  CHECK(trace[0].is_zero());
  const Real z2 = oracles::zeta_int(2, 400);
  CHECK(close(trace[1], z2 / 8L, Real::exp2i(-250, 64)));

  const auto rep_half = pi_param_report(Real(0.5, 256), stop(-13, 400), kPolicy);
  CHECK(close(rep_half.value, pi.value, tol10(-10)));
  CHECK(close(rep.value, rep_half.value, tol10(-10)));
}

TEST_CASE("digamma_param values") {
  // psi(2) + gamma = 1
  const auto v1 = digamma_param(Real(1L, 256), Real(1L, 256), stop(-15), kPolicy);
  CHECK(close(v1, Real(1L, 256), tol10(-12)));

  // x = 0 -> 0
  CHECK(digamma_param(Real(256), Real(1L, 256), stop(-15), kPolicy).is_zero());

  // psi(3/2) + gamma = 2 - 2 ln 2
  const auto vh = digamma_param(Real(0.5, 256), Real(1L, 256), stop(-15), kPolicy);
  CHECK(close(vh, 2L - 2L * log(Real(2L, 400)), tol10(-12)));

  CHECK_THROWS_AS(digamma_param(Real(1.5, 256), Real(1L, 256), stop(-15), kPolicy),
                  DomainError);
  CHECK_THROWS_AS(digamma_param(Real(-1L, 256), Real(1L, 256), stop(-15), kPolicy),
                  DomainError);
}

TEST_CASE("digamma reflection route reaches pi") {
  const auto hi = digamma_param(Real(-0.25, 256), Real(1L, 256), stop(-14, 600), kPolicy);
  const auto lo = digamma_param(Real(-0.75, 256), Real(1L, 256), stop(-14, 600), kPolicy);
  const auto pi = oracles::pi_ref(kErr40);
  CHECK(close(hi - lo, pi.value, tol10(-10)));
}

TEST_CASE("loggamma_param values") {
  const auto gam = oracles::gamma_ref(kErr40);
  // x = 1: lnGamma(2) + gamma = gamma
  const auto v1 = loggamma_param(Real(1L, 256), Real(1L, 256), stop(-15), kPolicy);
  CHECK(close(v1, gam.value, tol10(-12)));

  CHECK(loggamma_param(Real(256), Real(1L, 256), stop(-15), kPolicy).is_zero());

  // x = 1/2: ln(sqrt(pi)/2) + gamma/2
  const auto vh = loggamma_param(Real(0.5, 256), Real(1L, 256), stop(-15), kPolicy);
  const Real expect = log(sqrt(Real::pi(400)) / 2L) + gam.value.at_precision(400) / 2L;
  CHECK(close(vh, expect, tol10(-12)));
}

TEST_CASE("euler_gamma_param matches gamma_ref at several mu") {
  const auto gam = oracles::gamma_ref(kErr40);
  for (double mu : {1.0, 1.0 / 3.0}) {
    const auto v = euler_gamma_param(Real(mu, 256), stop(-15), kPolicy);
    CHECK(close(v, gam.value, tol10(-12)));
  }
  // Empty inner sum: the n = 0 outer term contributes 0.
  std::vector<Real> trace;
  euler_gamma_param_report(Real(1L, 256), stop(-15), kPolicy, &trace);
  CHECK(trace[0].is_zero());
}

TEST_CASE("euler_gamma_accel: prefixes and adjudication at mu = 1") {
  // Brute-force ledger for the closed-form sum behind the prefix:
  // sum (1/2)^(n+1) n/(n+1) summed past a 1e-20 tail equals 1 - ln 2.
  const mpfr_prec_t w = 256;
  Real brute(w);
  Real p(0.5, w);
  for (long n = 0; n <= 80; ++n) {
    brute += p * n / (n + 1);
    p /= 2L;
  }
  const Real ln2 = log(Real(2L, w));
  CHECK(close(brute, 1L - ln2, tol10(-20)));

  const Real corrected = euler_gamma_accel_prefix(Real(1L, 256), GammaAccelVariant::Corrected, 256);
  CHECK(close(corrected, brute, tol10(-20)));
  const Real plus_one = euler_gamma_accel_prefix(Real(1L, 256), GammaAccelVariant::PlusOne, 256);
  CHECK(close(plus_one, 2L - ln2, tol10(-20)));

  const auto gam = oracles::gamma_ref(kErr40);
  const Real full_corr =
      euler_gamma_accel(Real(1L, 256), GammaAccelVariant::Corrected, stop(-15), kPolicy);
  CHECK(close(full_corr, gam.value, tol10(-12)));
  const Real full_plus_one =
      euler_gamma_accel(Real(1L, 256), GammaAccelVariant::PlusOne, stop(-15), kPolicy);
  CHECK(close(full_plus_one, gam.value + 1L, tol10(-12)));

  // The transform series part is mu-independent even though the
  // closed-form prefixes are not.
  const Real s1 = full_corr - corrected;
  const Real ghalf =
      euler_gamma_accel(Real(0.5, 256), GammaAccelVariant::Corrected, stop(-15), kPolicy);
  const Real shalf =
      ghalf - euler_gamma_accel_prefix(Real(0.5, 256), GammaAccelVariant::Corrected, 256);
  CHECK(close(s1, shalf, tol10(-12)));
  CHECK(abs(ghalf - gam.value) > tol10(-3));  // the prefixed form fails off mu = 1

  CHECK_THROWS_AS(euler_gamma_accel(Real(256), GammaAccelVariant::Corrected, stop(-15), kPolicy),
                  DomainError);
}

TEST_CASE("euler_gamma_dyadic") {
  // S(0) = 1 (geometric).
  CHECK(close(s_sum(0, 200), Real(1L, 200), Real::exp2i(-190, 64)));

  // Partial through n = 2 against a from-scratch ledger with S(1), S(2)
  // truncated below 1e-8.
  auto s_local = [](long k) {
    Real sum(128);
    Real pow2(2L, 128);
    while (true) {
      sum += 1L / (pow2 + k);
      pow2 *= 2L;
      if (1L / pow2 <= Real::pow10(-8, 64)) break;
    }
    return sum;
  };
  const Real s1 = s_local(1), s2 = s_local(2);
  const Real partial2 = Real(0.5, 128) + (1L - s1) / 4L + (1L - 2L * s1 + s2) / 8L;

  std::vector<Real> trace;
  const auto rep = euler_gamma_dyadic_report(Real(1L, 256), stop(-13, 200), kPolicy, &trace);
  CHECK(close(trace[2], partial2, tol10(-7)));
  CHECK(close(trace[2], Real(0.5717813461, 128), tol10(-9)));

  const auto gam = oracles::gamma_ref(kErr40);
  CHECK(close(rep.value, gam.value, tol10(-10)));
}

TEST_CASE("elliptic K and E against the AGM oracles") {
  const Real pi_half = Real::pi(400) / 2L;
  CHECK(close(elliptic_k_param(Real(256), Real(1L, 256), stop(-16), kPolicy),
              pi_half, tol10(-14)));
  CHECK(close(elliptic_e_param(Real(256), Real(1L, 256), stop(-16), kPolicy),
              pi_half, tol10(-14)));

  const auto k_ref = oracles::elliptic_k_agm(Real(0.5, 96), kErr40);
  const auto e_ref = oracles::elliptic_e_agm(Real(0.5, 96), kErr40);
  const Real k = elliptic_k_param(Real(0.5, 256), Real(1L, 256), stop(-16, 600), kPolicy);
  const Real e = elliptic_e_param(Real(0.5, 256), Real(1L, 256), stop(-16, 600), kPolicy);
  CHECK(close(k, k_ref.value, tol10(-12)));
  CHECK(close(e, e_ref.value, tol10(-12)));

  CHECK_THROWS_AS(elliptic_k_param(Real(1L, 256), Real(1L, 256), stop(-16), kPolicy),
                  DomainError);
}

TEST_CASE("unsquared elliptic coefficients fail against the AGM") {
  // Documented discrepancy: the unsquared central binomial sums to
  // (pi/2)(1 - x^2/4)^(-1/2), which is not K.
  const auto src = elliptic_k_source_unsquared();
  const auto rep = transform::transform_eval_paramfree(
      src, Real(0.25, 256), Real(1L, 256), stop(-16), kPolicy);
  const Real unsquared_k = Real::pi(300) / 2L * rep.value;
  const auto k_ref = oracles::elliptic_k_agm(Real(0.5, 96), kErr40);
  CHECK(abs(unsquared_k - k_ref.value) > tol10(-3));
  // And it does equal its own closed form.
  const Real closed = Real::pi(300) / 2L / sqrt(1L - Real(0.0625, 300));
  CHECK(close(unsquared_k, closed, tol10(-12)));
}

TEST_CASE("laguerre_eval") {
  const Real x(2.5, 128);
  CHECK(laguerre_eval(0, x) == 1L);
  CHECK(laguerre_eval(1, x) == 1L - x);
  // L_2(1) = (x^2 - 4x + 2)/2 at x = 1 -> -1/2
  CHECK(laguerre_eval(2, Real(1L, 128)) == Real(-0.5, 128));
  // L_3(x) = (-x^3 + 9x^2 - 18x + 6)/6 at x = 2 -> (-8+36-36+6)/6 = -1/3
  CHECK(close(laguerre_eval(3, Real(2L, 128)), Real(rational(-1, 3), 192),
              Real::exp2i(-120, 64)));
}

TEST_CASE("exp_laguerre_identity equals e^-x") {
  CHECK(exp_laguerre_identity(Real(256), Real(1L, 256), stop(-14), kPolicy) == 1L);

  for (double mu : {0.5, 1.0, 2.0}) {
    const Real v = exp_laguerre_identity(Real(1L, 256), Real(mu, 256), stop(-14), kPolicy);
    CHECK(close(v, exp(Real(-1L, 400)), tol10(-11)));
  }

  // Cross-check against the generic engine on the exp-neg source:
  // The f(mu*x) form at x/mu with parameter mu targets e^-x as well.
  const Real mu(0.5, 256), x(2L, 256);
  const auto generic = transform::transform_eval(exp_neg_source(), x / mu, mu,
                                                 stop(-14), kPolicy);
  const Real direct = exp_laguerre_identity(x, mu, stop(-14), kPolicy);
  CHECK(close(generic.value, direct, tol10(-11)));

  CHECK_THROWS_AS(exp_laguerre_identity(Real(1L, 256), Real(256), stop(-14), kPolicy),
                  DomainError);
}

TEST_CASE("binomial_identity_check is exactly n/(n+1)") {
  CHECK(binomial_identity_check(0) == 0);
  CHECK(binomial_identity_check(2) == rational(2, 3));
  CHECK(binomial_identity_check(200) == rational(200, 201));
}

TEST_CASE("zeta_bounds_check") {
  CHECK(zeta_bounds_check(1, 128));
  CHECK(zeta_bounds_check(10, 128));
  CHECK(zeta_bounds_check(64, 128));
  CHECK_THROWS_AS(zeta_bounds_check(0, 128), DomainError);
}

TEST_CASE("m_constant_param and the five alternatives agree with m_ref") {
  const auto mref = oracles::m_ref(Real::pow10(-30, 96));
  const Real v1 = m_constant_param(Real(1L, 256), stop(-14), kPolicy);
  CHECK(close(v1, mref.value, tol10(-10)));
  const Real vh = m_constant_param(Real(0.5, 256), stop(-14), kPolicy);
  CHECK(close(v1, vh, tol10(-10)));

  const auto alts = m_constant_alternatives(stop(-12, 400), kPolicy);
  REQUIRE(alts.size() == 5);
  for (const auto& alt : alts) {
    CAPTURE(alt.representation_id);
    CHECK(close(alt.value, mref.value, tol10(-8)));
    CHECK(alt.report.converged);
  }
  // First term of sum ln(n+1)/(n(n+1)) is ln(2)/2; sanity on ids.
  CHECK(alts[2].representation_id == "m-alt-log-weighted");
}

TEST_CASE("mu-independence spot checks") {
  const auto a = digamma_param(Real(0.5, 256), Real(1L, 256), stop(-14), kPolicy);
  const auto b = digamma_param(Real(0.5, 256), Real(rational(1, 3), 256), stop(-14), kPolicy);
  CHECK(close(a, b, tol10(-11)));

  const auto pk1 = polylog_param(Real(0.5, 256), Real(2L, 256), Real(1L, 256), stop(-14), kPolicy);
  const auto pk2 = polylog_param(Real(0.5, 256), Real(2L, 256), Real(0.5, 256), stop(-14), kPolicy);
  CHECK(close(pk1, pk2, tol10(-11)));
}

TEST_CASE("zeta and lerch routes agree at mu = 1") {
  for (double s : {2.0, 3.0}) {
    const Real sw(s, 256);
    const Real via_zeta = zeta_param(sw, Real(1L, 256), stop(-25), kPolicy);
    const Real via_lerch = lerch_param(Real(1L, 256), Real(1L, 256), sw, stop(-25), kPolicy) /
                           (1L - pow(Real(2L, 400), 1L - Real(s, 400)));
    CHECK(close(via_zeta, via_lerch, tol10(-20)));
  }
}

TEST_CASE("zeta fault injection is detectable") {
  set_zeta_fault_injection(true);
  const auto rep = pi_param_report(Real(1L, 256), stop(-13, 400), kPolicy);
  const auto pi = oracles::pi_ref(kErr40);
  CHECK(abs(rep.value - pi.value) > tol10(-8));
  set_zeta_fault_injection(false);
  const auto rep2 = pi_param_report(Real(1L, 256), stop(-13, 400), kPolicy);
  CHECK(close(rep2.value, pi.value, tol10(-11)));
}

TEST_CASE("series catalog lists every representation source") {
  const auto& cat = series_catalog();
  CHECK(cat.size() == 15);
  bool has_elliptic = false;
  for (const auto& entry : cat) has_elliptic |= entry.id == "elliptic-k";
  CHECK(has_elliptic);
}

TEST_CASE("digamma-taylor-neg source reaches psi(1-x)+gamma") {
  // f(y) = sum zeta(n+1) y^n = -(psi(1-y)+gamma); evaluate at y = 1/4.
  const auto rep = transform::transform_eval(digamma_taylor_neg_source(),
                                             Real(0.25, 256), Real(1L, 256),
                                             stop(-14), kPolicy);
  const auto psi = oracles::digamma_ref(Real(0.75, 96), kErr40);
  const auto gam = oracles::gamma_ref(kErr40);
  CHECK(close(-rep.value, psi.value + gam.value, tol10(-11)));
}
