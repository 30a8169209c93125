#include "museries/registry.hpp"

#include "museries/errors.hpp"
#include "museries/specialfn.hpp"

namespace museries {

namespace {

using oracles::OracleValue;
using specialfn::GammaAccelVariant;
using transform::EvaluationReport;
using transform::StoppingRule;

Real at(const ParamMap& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("missing parameter '" + key + "'");
  return it->second;
}

OracleValue closed_form(Real value, const std::string& method, mpfr_prec_t prec) {
  return OracleValue{value.at_precision(prec),
                     method,
                     (abs(value) + 1L) * Real::exp2i(-static_cast<long>(prec) + 8, 64)};
}

std::vector<Representation> build_registry() {
  std::vector<Representation> reps;

  reps.push_back(Representation{
      "zeta",
      "Riemann zeta via the parameterized alternating double sum",
      {{"s", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::zeta_param_report(at(p, "s"), mu, stop, policy, trace);
      },
      [](const ParamMap& p, const Real&, const Real& err) {
        return oracles::zeta_ref(at(p, "s"), err);
      }});

  reps.push_back(Representation{
      "lerch",
      "Lerch Phi(-mu, a, s); the mu argument plays the role of the Lerch x",
      {{"a", true, ""}, {"s", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::lerch_param_report(mu, at(p, "a"), at(p, "s"), stop, policy, trace);
      },
      [](const ParamMap& p, const Real& mu, const Real& err) {
        return oracles::lerch_ref(-mu, at(p, "a"), at(p, "s"), err);
      }});

  reps.push_back(Representation{
      "polylog",
      "polylogarithm Li_s(x)",
      {{"x", true, ""}, {"s", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::polylog_param_report(at(p, "x"), at(p, "s"), mu, stop, policy, trace);
      },
      [](const ParamMap& p, const Real&, const Real& err) {
        return oracles::polylog_ref(at(p, "x"), at(p, "s"), err);
      }});

  reps.push_back(Representation{
      "pi-zeta",
      "pi from the zeta-weighted binomial series",
      {},
      [](const ParamMap&, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::pi_param_report(mu, stop, policy, trace);
      },
      [](const ParamMap&, const Real&, const Real& err) { return oracles::pi_ref(err); }});

  reps.push_back(Representation{
      "digamma",
      "psi(1+x) + gamma",
      {{"x", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::digamma_param_report(at(p, "x"), mu, stop, policy, trace);
      },
      [](const ParamMap& p, const Real&, const Real& err) {
        const auto psi = oracles::digamma_ref(at(p, "x") + 1L, err / 2L);
        const auto gam = oracles::gamma_ref(err / 2L);
        return OracleValue{psi.value + gam.value, "digamma+gamma",
                           psi.claimed_error + gam.claimed_error};
      }});

  reps.push_back(Representation{
      "loggamma",
      "lnGamma(x+1) + gamma*x",
      {{"x", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::loggamma_param_report(at(p, "x"), mu, stop, policy, trace);
      },
      [](const ParamMap& p, const Real&, const Real& err) {
        const Real x = at(p, "x");
        const auto lg = oracles::loggamma_ref(x + 1L, err / 2L);
        const auto gam = oracles::gamma_ref(err / 2L);
        return OracleValue{lg.value + gam.value * x.at_precision(lg.value.precision()),
                           "loggamma+gamma", lg.claimed_error + gam.claimed_error * (abs(x) + 1L)};
      }});

  reps.push_back(Representation{
      "gamma-zeta",
      "Euler's constant from the zeta-weighted series",
      {},
      [](const ParamMap&, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::euler_gamma_param_report(mu, stop, policy, trace);
      },
      [](const ParamMap&, const Real&, const Real& err) { return oracles::gamma_ref(err); }});

  reps.push_back(Representation{
      "gamma-accel",
      "accelerated gamma series (zeta-1 coefficients); corrected=0 uses the prefix with the extra +1",
      {{"corrected", false, "1"}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        const GammaAccelVariant variant =
            at(p, "corrected").is_zero() ? GammaAccelVariant::PlusOne : GammaAccelVariant::Corrected;
        return specialfn::euler_gamma_accel_report(mu, variant, stop, policy, trace);
      },
      [](const ParamMap&, const Real&, const Real& err) { return oracles::gamma_ref(err); }});

  reps.push_back(Representation{
      "gamma-dyadic",
      "Euler's constant from the S(k) = sum 1/(2^m+k) series",
      {},
      [](const ParamMap&, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::euler_gamma_dyadic_report(mu, stop, policy, trace);
      },
      [](const ParamMap&, const Real&, const Real& err) { return oracles::gamma_ref(err); }});

  reps.push_back(Representation{
      "elliptic-k",
      "complete elliptic integral K(x)",
      {{"x", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::elliptic_k_param_report(at(p, "x"), mu, stop, policy, trace);
      },
      [](const ParamMap& p, const Real&, const Real& err) {
        return oracles::elliptic_k_agm(abs(at(p, "x")), err);
      }});

  reps.push_back(Representation{
      "elliptic-e",
      "complete elliptic integral E(x)",
      {{"x", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::elliptic_e_param_report(at(p, "x"), mu, stop, policy, trace);
      },
      [](const ParamMap& p, const Real&, const Real& err) {
        return oracles::elliptic_e_agm(abs(at(p, "x")), err);
      }});

  reps.push_back(Representation{
      "exp-laguerre",
      "e^-x as the Laguerre-weighted series",
      {{"x", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::exp_laguerre_identity_report(at(p, "x"), mu, stop, policy, trace);
      },
      [](const ParamMap& p, const Real&, const Real& err) {
        const mpfr_prec_t prec = oracles::bits_for_error(err) + 16;
        return closed_form(exp(-at(p, "x").at_precision(prec + 32)), "exp", prec);
      }});

  reps.push_back(Representation{
      "m-param",
      "the constant M from the zeta-weighted series",
      {},
      [](const ParamMap&, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return specialfn::m_constant_param_report(mu, stop, policy, trace);
      },
      [](const ParamMap&, const Real&, const Real& err) { return oracles::m_ref(err); }});

  // Elementary sources, evaluated in the f(mu*x) form; their oracles
  // are the closed forms at mu*x.
  reps.push_back(Representation{
      "geometric",
      "1/(1 - mu*x) from the constant-coefficient source",
      {{"x", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return transform::transform_eval(specialfn::geometric_source(), at(p, "x"), mu,
                                         stop, policy, trace);
      },
      [](const ParamMap& p, const Real& mu, const Real& err) {
        const mpfr_prec_t prec = oracles::bits_for_error(err) + 16;
        const Real arg = mu.at_precision(prec + 64) * at(p, "x").at_precision(prec + 64);
        return closed_form(1L / (1L - arg), "closed-form", prec);
      }});

  reps.push_back(Representation{
      "log1p",
      "ln(1 + mu*x)",
      {{"x", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return transform::transform_eval(specialfn::log_one_plus_source(), at(p, "x"), mu,
                                         stop, policy, trace);
      },
      [](const ParamMap& p, const Real& mu, const Real& err) {
        const mpfr_prec_t prec = oracles::bits_for_error(err) + 16;
        const Real arg = mu.at_precision(prec + 64) * at(p, "x").at_precision(prec + 64);
        return closed_form(log(1L + arg), "closed-form", prec);
      }});

  reps.push_back(Representation{
      "exp-neg",
      "e^(-mu*x)",
      {{"x", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return transform::transform_eval(specialfn::exp_neg_source(), at(p, "x"), mu, stop,
                                         policy, trace);
      },
      [](const ParamMap& p, const Real& mu, const Real& err) {
        const mpfr_prec_t prec = oracles::bits_for_error(err) + 16;
        const Real arg = mu.at_precision(prec + 64) * at(p, "x").at_precision(prec + 64);
        return closed_form(exp(-arg), "closed-form", prec);
      }});

  reps.push_back(Representation{
      "binomial-beta",
      "(1 + mu*x)^beta",
      {{"x", true, ""}, {"beta", true, ""}},
      [](const ParamMap& p, const Real& mu, const StoppingRule& stop,
         const PrecisionPolicy& policy, std::vector<Real>* trace) {
        return transform::transform_eval(specialfn::binomial_beta_source(at(p, "beta")),
                                         at(p, "x"), mu, stop, policy, trace);
      },
      [](const ParamMap& p, const Real& mu, const Real& err) {
        const mpfr_prec_t prec = oracles::bits_for_error(err) + 16;
        const Real arg = mu.at_precision(prec + 64) * at(p, "x").at_precision(prec + 64);
        return closed_form(pow(1L + arg, at(p, "beta").at_precision(prec + 64)),
                           "closed-form", prec);
      }});

  return reps;
}

}  // namespace

const std::vector<Representation>& representation_registry() {
  static const std::vector<Representation> registry = build_registry();
  return registry;
}

const Representation& find_representation(const std::string& id) {
  for (const auto& rep : representation_registry()) {
    if (rep.id == id) return rep;
  }
  throw DomainError("unknown representation '" + id + "'");
}

std::vector<std::string> representation_ids() {
  std::vector<std::string> ids;
  for (const auto& rep : representation_registry()) ids.push_back(rep.id);
  return ids;
}

ParamMap parse_params(const Representation& rep,
                      const std::map<std::string, std::string>& raw,
                      mpfr_prec_t precision_bits) {
  ParamMap out;
  for (const auto& [key, value] : raw) {
    bool known = false;
    for (const auto& spec : rep.params) known |= spec.name == key;
    if (!known) {
      throw DomainError("representation '" + rep.id + "' takes no parameter '" + key + "'");
    }
    out.emplace(key, Real::from_string(value, precision_bits));
  }
  for (const auto& spec : rep.params) {
    if (out.count(spec.name)) continue;
    if (spec.required) {
      throw DomainError("representation '" + rep.id + "' requires --" + spec.name);
    }
    out.emplace(spec.name, Real::from_string(spec.default_value, precision_bits));
  }
  return out;
}

}  // namespace museries
