#pragma once

#include <mpfr.h>

#include <cstddef>
#include <iosfwd>
#include <string>

#include "museries/exactmath.hpp"

namespace museries {

// Arbitrary-precision real value. The precision (in bits) is fixed at
// construction and is always an explicit parameter, never ambient
// state; arithmetic results carry max(operand precisions). Every
// operation rounds to nearest, so each step is correct to 1 ulp at the
// result precision. Values are immutable after construction and safe
// to share across threads.
class Real {
 public:
  Real() = delete;

  explicit Real(mpfr_prec_t prec);  // zero
  Real(long v, mpfr_prec_t prec);
  Real(int v, mpfr_prec_t prec) : Real(static_cast<long>(v), prec) {}
  Real(unsigned long v, mpfr_prec_t prec);
  Real(double v, mpfr_prec_t prec);
  Real(const exactmath::ExactInt& v, mpfr_prec_t prec);
  Real(const exactmath::ExactRational& v, mpfr_prec_t prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_string(const std::string& s, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);
  static Real pow10(long e, mpfr_prec_t prec);  // 10^e
  static Real exp2i(long e, mpfr_prec_t prec);  // 2^e, exact

  mpfr_prec_t precision() const;
  // Copy rounded (or exactly extended) to the given precision.
  Real at_precision(mpfr_prec_t prec) const;

  bool is_zero() const;
  bool is_nan() const;
  int sign() const;  // -1, 0, +1

  double to_double() const;
  long to_long() const;
  // Decimal string with the given number of significant digits.
  // Positional for moderate exponents, scientific otherwise; output is
  // a pure function of (value, digits).
  std::string to_string(std::size_t significant_digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend Real operator+(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b);
  friend bool operator!=(const Real& a, const Real& b);
  friend bool operator<(const Real& a, const Real& b);
  friend bool operator<=(const Real& a, const Real& b);
  friend bool operator>(const Real& a, const Real& b);
  friend bool operator>=(const Real& a, const Real& b);

  friend bool operator==(const Real& a, long b);
  friend bool operator!=(const Real& a, long b);
  friend bool operator<(const Real& a, long b);
  friend bool operator<=(const Real& a, long b);
  friend bool operator>(const Real& a, long b);
  friend bool operator>=(const Real& a, long b);

  friend Real abs(const Real& a);
  friend Real sqrt(const Real& a);
  friend Real exp(const Real& a);
  friend Real log(const Real& a);
  friend Real pow(const Real& base, const Real& expo);  // 0^0 = 1
  friend Real pow(const Real& base, long expo);         // 0^0 = 1
  friend Real cos(const Real& a);
  friend Real sin(const Real& a);
  friend Real mul_exact_int(const Real& a, const exactmath::ExactInt& m);
  friend Real ldexp2(const Real& a, long e);  // a * 2^e, exact scaling

  // Raw handles for callers that need mpfr functions not wrapped here.
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& v);

// Precision contract used by the series engines: inner alternating
// binomial sums can cancel up to n bits (sum of |C(n,k)| is 2^n), so
// working precision is target + max terms + 32 guard bits.
struct PrecisionPolicy {
  mpfr_prec_t target_bits;

  mpfr_prec_t guard_bits(long max_terms) const {
    return static_cast<mpfr_prec_t>(max_terms) + 32;
  }
  mpfr_prec_t working_bits(long max_terms) const {
    return target_bits + guard_bits(max_terms);
  }
};

}  // namespace museries
