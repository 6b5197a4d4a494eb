#include "qmoment/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qmoment {

namespace {
mpfr_prec_t join(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
  mpfr_set_nan(v_);
}

Real::Real(double value, mpfr_prec_t prec) : Real(prec) {
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(long value, mpfr_prec_t prec) : Real(prec) {
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real Real::from_string(std::string_view s, mpfr_prec_t prec) {
  Real r(prec);
  std::string buf(s);
  if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("Real::from_string: unparsable number '" + buf + "'");
  }
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_precision(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string() const {
  // Enough decimal digits to make value -> string injective at this precision.
  int digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 2;
  return to_string(digits);
}

std::string Real::to_string(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

#define QM_BINOP(name, fn)                         \
  Real name(const Real& a, const Real& b) {       \
    Real r(join(a, b));                           \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);              \
    return r;                                     \
  }

QM_BINOP(operator+, mpfr_add)
QM_BINOP(operator-, mpfr_sub)
QM_BINOP(operator*, mpfr_mul)
QM_BINOP(operator/, mpfr_div)
#undef QM_BINOP

Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}
Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}
Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}
Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}
Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.v_, x.v_);
  return r;
}
Real pow(const Real& base, const Real& exponent) {
  Real r(join(base, exponent));
  mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
  return r;
}
Real pow_si(const Real& base, long exponent) {
  Real r(base.precision());
  mpfr_pow_si(r.v_, base.v_, exponent, MPFR_RNDN);
  return r;
}
Real rootn(const Real& x, unsigned long k) {
  Real r(x.precision());
  mpfr_rootn_ui(r.v_, x.v_, k, MPFR_RNDN);
  return r;
}
Real max(const Real& a, const Real& b) { return (a >= b) ? a : b; }
Real min(const Real& a, const Real& b) { return (a <= b) ? a : b; }
Real ldexp2(const Real& x, long e) {
  Real r(x.precision());
  mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

double ulp_distance(const Real& a, const Real& b) {
  if (b.is_zero() || !b.is_finite()) return a == b ? 0.0 : HUGE_VAL;
  Real diff = abs(a - b);
  if (diff.is_zero()) return 0.0;
  long ulp_exp = static_cast<long>(mpfr_get_exp(b.raw())) - b.precision();
  Real scaled = ldexp2(diff, -ulp_exp);
  return scaled.to_double();
}

}  // namespace qmoment
