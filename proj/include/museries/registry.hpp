#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "museries/oracles.hpp"
#include "museries/real.hpp"
#include "museries/transform.hpp"

namespace museries {

// Uniform access to every evaluatable representation, for the CLI and
// the sweep/curve studies.

struct ParamSpec {
  std::string name;
  bool required;
  std::string default_value;  // decimal string, used when not required
};

using ParamMap = std::map<std::string, Real>;

struct Representation {
  std::string id;
  std::string description;
  std::vector<ParamSpec> params;
  std::function<transform::EvaluationReport(
      const ParamMap&, const Real& mu, const transform::StoppingRule&,
      const PrecisionPolicy&, std::vector<Real>* trace)>
      evaluate;
  // Reference value for the representation's target; mu matters only
  // for the elementary sources whose target is f(mu*x) (and for the
  // Lerch representation, where mu plays the role of the argument).
  std::function<oracles::OracleValue(const ParamMap&, const Real& mu,
                                     const Real& target_error)>
      oracle;
};

const std::vector<Representation>& representation_registry();
const Representation& find_representation(const std::string& id);
std::vector<std::string> representation_ids();

// Parse raw decimal strings against the declared parameter list;
// unknown keys and missing required params raise DomainError.
ParamMap parse_params(const Representation& rep,
                      const std::map<std::string, std::string>& raw,
                      mpfr_prec_t precision_bits);

}  // namespace museries
