#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

namespace qmoment {

// Arbitrary-precision real backed by MPFR. Every value carries its own
// mantissa precision in bits; binary operations produce results at the wider
// of the two operand precisions, rounding to nearest. There is no global
// precision state, so concurrent use from multiple threads is safe as long
// as each Real is touched by one thread at a time.
class Real {
 public:
  Real() : Real(kMinPrecision) {}
  explicit Real(mpfr_prec_t prec);
  Real(double value, mpfr_prec_t prec);
  Real(long value, mpfr_prec_t prec);
  static Real from_string(std::string_view s, mpfr_prec_t prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  // Returns the value rounded (or zero-padded) to `prec` bits.
  Real with_precision(mpfr_prec_t prec) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Full-precision decimal string, deterministic for a given value+precision.
  std::string to_string() const;
  std::string to_string(int digits) const;

  Real operator-() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend Real abs(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real floor(const Real& x);
  friend Real pow(const Real& base, const Real& exponent);
  friend Real pow_si(const Real& base, long exponent);
  // k-th root, k >= 1; x must be nonnegative for even k.
  friend Real rootn(const Real& x, unsigned long k);
  friend Real max(const Real& a, const Real& b);
  friend Real min(const Real& a, const Real& b);
  // x * 2^e, exact.
  friend Real ldexp2(const Real& x, long e);

  // 2^e at the given precision (exact).
  static Real pow2(long e, mpfr_prec_t prec);

  static constexpr mpfr_prec_t kMinPrecision = 64;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

// |a - b| measured in units in the last place of `b` (b nonzero, finite).
double ulp_distance(const Real& a, const Real& b);

}  // namespace qmoment
