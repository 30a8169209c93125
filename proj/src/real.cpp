#include "museries/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "museries/errors.hpp"

namespace museries {

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t join(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, kRnd);
}

Real::Real(unsigned long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_ui(v_, v, kRnd);
}

Real::Real(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, kRnd);
}

Real::Real(const exactmath::ExactInt& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), kRnd);
}

Real::Real(const exactmath::ExactRational& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), kRnd);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_string(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, kRnd) != 0 || mpfr_nan_p(r.v_)) {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, kRnd);
  return r;
}

Real Real::pow10(long e, mpfr_prec_t prec) {
  Real r(prec);
  Real ten(10L, prec);
  mpfr_pow_si(r.v_, ten.v_, e, kRnd);
  return r;
}

Real Real::exp2i(long e, mpfr_prec_t prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.v_, r.v_, e, kRnd);
  return r;
}

mpfr_prec_t Real::precision() const { return mpfr_get_prec(v_); }

Real Real::at_precision(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

bool Real::is_zero() const { return mpfr_zero_p(v_) != 0; }
bool Real::is_nan() const { return mpfr_nan_p(v_) != 0; }
int Real::sign() const { return mpfr_sgn(v_); }

double Real::to_double() const { return mpfr_get_d(v_, kRnd); }
long Real::to_long() const { return mpfr_get_si(v_, kRnd); }

std::string Real::to_string(std::size_t significant_digits) const {
  if (significant_digits == 0) significant_digits = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";

  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, significant_digits, v_, kRnd);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  // digits represent 0.ddd... * 10^e10
  std::string out;
  const long e = static_cast<long>(e10);
  const long n = static_cast<long>(digits.size());
  if (e >= -4 && e <= n + 6) {
    if (e <= 0) {
      out = "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
    } else if (e >= n) {
      out = digits + std::string(static_cast<std::size_t>(e - n), '0');
    } else {
      out = digits.substr(0, static_cast<std::size_t>(e)) + "." +
            digits.substr(static_cast<std::size_t>(e));
    }
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return sign + out;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }
Real& Real::operator+=(long rhs) { return *this = *this + rhs; }
Real& Real::operator-=(long rhs) { return *this = *this - rhs; }
Real& Real::operator*=(long rhs) { return *this = *this * rhs; }
Real& Real::operator/=(long rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero");
  Real r(join(a, b));
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.v_, a.v_, kRnd);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }

Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, kRnd);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }

Real operator/(const Real& a, long b) {
  if (b == 0) throw DivisionByZero("division by zero");
  Real r(a.precision());
  mpfr_div_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator/(long a, const Real& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero");
  Real r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, kRnd);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
bool operator!=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) != 0; }
bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.v_, a.v_, kRnd);
  return r;
}

Real sqrt(const Real& a) {
  if (a.sign() < 0) throw DomainError("sqrt of negative value");
  Real r(a.precision());
  mpfr_sqrt(r.v_, a.v_, kRnd);
  return r;
}

Real exp(const Real& a) {
  Real r(a.precision());
  mpfr_exp(r.v_, a.v_, kRnd);
  return r;
}

Real log(const Real& a) {
  if (a.sign() <= 0) throw DomainError("log of non-positive value");
  Real r(a.precision());
  mpfr_log(r.v_, a.v_, kRnd);
  return r;
}

Real pow(const Real& base, const Real& expo) {
  Real r(join(base, expo));
  mpfr_pow(r.v_, base.v_, expo.v_, kRnd);  // mpfr: pow(x, +-0) = 1
  return r;
}

Real pow(const Real& base, long expo) {
  Real r(base.precision());
  mpfr_pow_si(r.v_, base.v_, expo, kRnd);  // mpfr: pow(x, 0) = 1
  return r;
}

Real cos(const Real& a) {
  Real r(a.precision());
  mpfr_cos(r.v_, a.v_, kRnd);
  return r;
}

Real sin(const Real& a) {
  Real r(a.precision());
  mpfr_sin(r.v_, a.v_, kRnd);
  return r;
}

Real mul_exact_int(const Real& a, const exactmath::ExactInt& m) {
  Real r(a.precision());
  mpfr_mul_z(r.v_, a.v_, m.get_mpz_t(), kRnd);
  return r;
}

Real ldexp2(const Real& a, long e) {
  Real r(a.precision());
  mpfr_mul_2si(r.v_, a.v_, e, kRnd);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& v) {
  return os << v.to_string(24);
}

}  // namespace museries
