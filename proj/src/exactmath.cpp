#include "museries/exactmath.hpp"

#include "museries/errors.hpp"

namespace museries::exactmath {

ExactRational rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational: zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactInt binomial(unsigned long n, unsigned long k) {
  ExactInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

std::vector<ExactInt> binomial_row(unsigned long n) {
  std::vector<ExactInt> row;
  row.reserve(n + 1);
  row.emplace_back(1);
  // row[k] = row[k-1] * (n-k+1) / k, the division is exact
  for (unsigned long k = 1; k <= n; ++k) {
    ExactInt next = row.back() * ExactInt(n - k + 1);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), k);
    row.push_back(std::move(next));
  }
  return row;
}

void PascalRow::advance() {
  const std::size_t m = row_.size();
  row_.emplace_back(1);
  for (std::size_t k = m - 1; k >= 1; --k) {
    row_[k] += row_[k - 1];
  }
}

}  // namespace museries::exactmath
