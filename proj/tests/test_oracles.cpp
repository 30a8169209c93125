#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "museries/errors.hpp"
#include "museries/oracles.hpp"
#include "test_util.hpp"

using namespace museries;
using namespace museries::oracles;
using exactmath::rational;
using testutil::close;
using testutil::tol10;

namespace {
const Real kErr40 = Real::pow10(-40, 96);
}

TEST_CASE("zeta_ref matches pi^2/6 and known digits") {
  const auto z2 = zeta_ref(Real(2L, 96), kErr40);
  const Real pi = Real::pi(300);
  CHECK(close(z2.value, pi * pi / 6L, tol10(-38)));
  CHECK(z2.value.to_string(17) == "1.6449340668482264");
  CHECK(z2.claimed_error <= kErr40);

  const auto z3 = zeta_ref(Real(3L, 96), kErr40);
  CHECK(z3.value.to_string(17) == "1.2020569031595943");
}

TEST_CASE("zeta_ref against a bracketing direct sum") {
  // Direct partial sum with integral tail brackets the true value:
  // partial < zeta(s) < partial + N^(1-s)/(s-1) + N^-s.
  for (double s : {2.0, 3.5}) {
    const mpfr_prec_t w = 256;
    const long n_terms = 4000;
    const Real sw(s, w);
    Real partial(w);
    for (long n = 1; n <= n_terms; ++n) partial += pow(Real(n, w), -sw);
    const Real tail_hi =
        pow(Real(n_terms, w), 1L - sw) / (sw - 1L) + pow(Real(n_terms, w), -sw);
    const auto z = zeta_ref(Real(s, 96), kErr40);
    CHECK(z.value > partial);
    CHECK(z.value < partial + tail_hi);
  }
}

TEST_CASE("zeta_ref large s is dominated by the 2^-s term") {
  const auto z = zeta_ref(Real(40L, 96), kErr40);
  CHECK(z.value - 1L < Real::exp2i(-39, 96));
  CHECK(z.value > 1L);
}

TEST_CASE("zeta_int agrees with zeta_ref and is cancellation-safe") {
  for (unsigned long m : {2UL, 3UL, 7UL, 21UL, 64UL, 201UL}) {
    const Real a = zeta_int(m, 200);
    const auto b = zeta_ref(Real(static_cast<long>(m), 96), Real::pow10(-62, 96));
    CHECK(close(a, b.value, tol10(-58)));
    const Real tail = zeta_minus1_int(m, 200);
    CHECK(close(tail, a - 1L, Real::exp2i(-190, 64)));
    CHECK(tail > 0L);
  }
}

TEST_CASE("pi_ref matches the substrate constant") {
  const auto p = pi_ref(kErr40);
  CHECK(p.value.to_string(12) == "3.14159265359");
  CHECK(close(p.value, Real::pi(400), p.claimed_error + Real::exp2i(-150, 64)));
  CHECK(p.method == "machin-arctan");
}

TEST_CASE("gamma_ref: known digits, mpfr cross-check, n-stability") {
  const auto g = gamma_ref(kErr40);
  CHECK(g.value.to_string(17) == "0.57721566490153286");

  Real mpfr_gamma(300);
  mpfr_const_euler(mpfr_gamma.raw(), MPFR_RNDN);
  CHECK(close(g.value, mpfr_gamma, g.claimed_error + Real::exp2i(-280, 64)));

  const auto g4 = gamma_ref_at(10000, 200);
  const auto g5 = gamma_ref_at(100000, 200);
  CHECK(abs(g4.value - g5.value) <= g4.claimed_error + g5.claimed_error);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic_exact(1) == 1);
  CHECK(harmonic_exact(3) == rational(11, 6));
  CHECK(harmonic_exact(1000).get_den() > 0);
  // n = 1: H_1 - ln 1 = 1
  CHECK(harmonic(1, 96) - log(Real(1L, 96)) == 1L);
  CHECK(close(harmonic(100, 200), Real(harmonic_exact(100), 200), Real::exp2i(-190, 64)));
}

TEST_CASE("digamma_ref identities") {
  const auto g = gamma_ref(kErr40);
  const auto psi1 = digamma_ref(Real(1L, 96), kErr40);
  CHECK(abs(psi1.value + g.value) <= psi1.claimed_error + g.claimed_error);

  // psi(2) = 1 - gamma via the recurrence psi(2) = psi(1) + 1
  const auto psi2 = digamma_ref(Real(2L, 96), kErr40);
  CHECK(close(psi2.value, 1L - g.value, tol10(-38)));

  // Reflection at 1/4: psi(3/4) - psi(1/4) = pi
  const auto hi = digamma_ref(Real(0.75, 96), kErr40);
  const auto lo = digamma_ref(Real(0.25, 96), kErr40);
  const auto pi = pi_ref(kErr40);
  CHECK(abs(hi.value - lo.value - pi.value) <=
        hi.claimed_error + lo.claimed_error + pi.claimed_error);

  // Independent mpfr implementation agrees.
  Real m(300);
  mpfr_digamma(m.raw(), Real(0.375, 300).raw(), MPFR_RNDN);
  const auto ours = digamma_ref(Real(0.375, 96), kErr40);
  CHECK(close(ours.value, m, tol10(-38)));

  CHECK_THROWS_AS(digamma_ref(Real(96), kErr40), DomainError);
}

TEST_CASE("loggamma_ref identities") {
  CHECK(abs(loggamma_ref(Real(1L, 96), kErr40).value) <= tol10(-38));
  CHECK(abs(loggamma_ref(Real(2L, 96), kErr40).value) <= tol10(-38));
  // lnGamma(1/2) = ln sqrt(pi)
  const auto half = loggamma_ref(Real(0.5, 96), kErr40);
  CHECK(close(half.value, log(sqrt(Real::pi(400))), tol10(-38)));

  Real m(300);
  mpfr_lngamma(m.raw(), Real(3.25, 300).raw(), MPFR_RNDN);
  CHECK(close(loggamma_ref(Real(3.25, 96), kErr40).value, m, tol10(-38)));
}

TEST_CASE("polylog_ref values") {
  CHECK(polylog_ref(Real(96), Real(2L, 96), kErr40).value.is_zero());

  const Real pi = Real::pi(400);
  const auto li2_neg1 = polylog_ref(Real(-1L, 96), Real(2L, 96), kErr40);
  CHECK(close(li2_neg1.value, -(pi * pi / 12L), tol10(-38)));

  // Li_2(1/2) = pi^2/12 - ln(2)^2/2
  const auto li2_half = polylog_ref(Real(0.5, 96), Real(2L, 96), kErr40);
  const Real ln2 = log(Real(2L, 400));
  CHECK(close(li2_half.value, pi * pi / 12L - ln2 * ln2 / 2L, tol10(-38)));

  const auto li2_1 = polylog_ref(Real(1L, 96), Real(2L, 96), kErr40);
  CHECK(close(li2_1.value, pi * pi / 6L, tol10(-38)));

  CHECK_THROWS_AS(polylog_ref(Real(0.97, 96), Real(2L, 96), kErr40), DomainError);
  CHECK_THROWS_AS(polylog_ref(Real(0.5, 96), Real(1L, 96), kErr40), DomainError);
}

TEST_CASE("lerch_ref values") {
  // Phi(0, a, s) = a^-s
  const auto at0 = lerch_ref(Real(96), Real(2L, 96), Real(3L, 96), kErr40);
  CHECK(close(at0.value, Real(0.125, 96), tol10(-38)));

  // Phi(-1, 1, 2) = pi^2/12
  const auto eta = lerch_ref(Real(-1L, 96), Real(1L, 96), Real(2L, 96), kErr40);
  const Real pi = Real::pi(400);
  CHECK(close(eta.value, pi * pi / 12L, tol10(-38)));

  // Phi(1, 2, 3) = zeta(3) - 1
  const auto shifted = lerch_ref(Real(1L, 96), Real(2L, 96), Real(3L, 96), kErr40);
  const auto z3 = zeta_ref(Real(3L, 96), kErr40);
  CHECK(close(shifted.value, z3.value - 1L, tol10(-37)));

  // Euler-Maclaurin x = 1 path sits inside a direct-sum bracket.
  const Real a(0.5, 96), s(4L, 96);
  const mpfr_prec_t w = 256;
  Real partial(w);
  for (long n = 0; n <= 3000; ++n) partial += pow(Real(0.5, w) + n, Real(-4L, w));
  const auto em = lerch_ref(Real(1L, 96), a, s, kErr40);
  CHECK(em.value > partial);
  CHECK(em.value < partial + tol10(-9));

  CHECK_THROWS_AS(lerch_ref(Real(0.5, 96), Real(-1L, 96), Real(2L, 96), kErr40),
                  DomainError);
}

TEST_CASE("elliptic AGM oracles") {
  const Real pi_half = Real::pi(400) / 2L;
  CHECK(close(elliptic_k_agm(Real(96), kErr40).value, pi_half, tol10(-38)));
  CHECK(close(elliptic_e_agm(Real(96), kErr40).value, pi_half, tol10(-38)));

  // Small-x Taylor check: K = pi/2 (1 + x^2/4 + 9 x^4/64 + ...)
  const Real x(0.125, 400);
  const Real series = pi_half * (1L + x * x / 4L + 9L * pow(x, 4L) / 64L +
                                 25L * pow(x, 6L) / 256L);
  CHECK(close(elliptic_k_agm(Real(0.125, 96), kErr40).value, series, tol10(-8)));

  // Legendre relation at x = 0.6: E K' + E' K - K K' = pi/2.
  const Real x6(0.6, 96);
  const Real xc = sqrt(1L - Real(0.6, 400) * Real(0.6, 400)).at_precision(96);
  const Real k = elliptic_k_agm(x6, kErr40).value;
  const Real kp = elliptic_k_agm(xc, kErr40).value;
  const Real e = elliptic_e_agm(x6, kErr40).value;
  const Real ep = elliptic_e_agm(xc, kErr40).value;
  CHECK(close(e * kp + ep * k - k * kp, pi_half, tol10(-20)));

  CHECK_THROWS_AS(elliptic_k_agm(Real(1L, 96), kErr40), DomainError);
  CHECK_THROWS_AS(elliptic_e_agm(Real(-0.5, 96), kErr40), DomainError);
}

TEST_CASE("m_ref value and first term") {
  const auto m = m_ref(Real::pow10(-20, 96));
  CHECK(m.value.to_string(15) == "1.25774688694437");
  // The first six decimals truncate to 1.257746.
  const Real headline(rational(1257746, 1000000), 128);
  CHECK(m.value - headline >= 0L);
  CHECK(m.value - headline < Real::pow10(-6, 96));
  // First term H_1 (zeta(2)-1) = zeta(2) - 1.
  CHECK(close(zeta_minus1_int(2, 128), zeta_int(2, 128) - 1L, Real::exp2i(-120, 64)));
  CHECK(m.claimed_error <= Real::pow10(-20, 96));
}

TEST_CASE("oracle stability under tighter error targets") {
  const Real loose = Real::pow10(-25, 96);
  const Real tight = Real::pow10(-45, 96);
  auto stable = [&](const OracleValue& a, const OracleValue& b) {
    return abs(a.value - b.value.at_precision(a.value.precision())) <=
           a.claimed_error;
  };
  CHECK(stable(pi_ref(loose), pi_ref(tight)));
  CHECK(stable(zeta_ref(Real(2.5, 96), loose), zeta_ref(Real(2.5, 96), tight)));
  CHECK(stable(gamma_ref(loose), gamma_ref(tight)));
  CHECK(stable(digamma_ref(Real(0.25, 96), loose), digamma_ref(Real(0.25, 96), tight)));
  CHECK(stable(polylog_ref(Real(0.5, 96), Real(2L, 96), loose),
               polylog_ref(Real(0.5, 96), Real(2L, 96), tight)));
  CHECK(stable(lerch_ref(Real(0.4, 96), Real(1.5, 96), Real(2.5, 96), loose),
               lerch_ref(Real(0.4, 96), Real(1.5, 96), Real(2.5, 96), tight)));
  CHECK(stable(m_ref(loose), m_ref(tight)));
}

TEST_CASE("bernoulli table") {
  CHECK(bernoulli_2j(1) == rational(1, 6));
  CHECK(bernoulli_2j(6) == rational(-691, 2730));
  CHECK(bernoulli_2j(8) == rational(-3617, 510));
  CHECK_THROWS_AS(bernoulli_2j(9), DomainError);
}
