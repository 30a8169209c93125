#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace museries::exactmath {

// Arbitrary-magnitude signed integer (GMP-backed).
using ExactInt = mpz_class;

// Rational in lowest terms with positive denominator. All gmpxx
// arithmetic keeps the canonical form; use rational() when building
// one from raw parts.
using ExactRational = mpq_class;

ExactRational rational(long num, long den);

// C(n, k), exact; 0 when k > n.
ExactInt binomial(unsigned long n, unsigned long k);

// [C(n,0), ..., C(n,n)]
std::vector<ExactInt> binomial_row(unsigned long n);

// Row of Pascal's triangle advanced in place by exact additions,
// for engines that consume consecutive rows.
class PascalRow {
 public:
  PascalRow() : row_{ExactInt(1)} {}

  unsigned long n() const { return static_cast<unsigned long>(row_.size()) - 1; }
  const std::vector<ExactInt>& row() const { return row_; }
  const ExactInt& operator[](std::size_t k) const { return row_[k]; }

  void advance();

 private:
  std::vector<ExactInt> row_;
};

}  // namespace museries::exactmath
