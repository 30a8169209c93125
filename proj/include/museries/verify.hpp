#pragma once

#include <string>
#include <vector>

#include "museries/real.hpp"

namespace museries::verify {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct CheckOptions {
  mpfr_prec_t precision_bits = 256;
  unsigned long binomial_n_max = 200;
  bool inject_fault = false;  // test hook: perturb one zeta digit
};

const std::vector<std::string>& check_names();
CheckResult run_check(const std::string& name, const CheckOptions& opts);
std::vector<CheckResult> run_all(const CheckOptions& opts);

}  // namespace museries::verify
