#pragma once

#include <gmpxx.h>

#include <string>

#include "qmoment/real.hpp"

namespace qmoment {

// Exact rational arithmetic for exponent bookkeeping.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Integer floor [x] (toward minus infinity).
inline Rational rational_floor(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return Rational(q);
}

inline long rational_floor_long(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q.get_si();
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Canonical "p/q" rendering ("p" when the denominator is 1).
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Real to_real(const Rational& x, mpfr_prec_t prec) {
  Real num(prec);
  mpfr_set_z(num.raw(), x.get_num().get_mpz_t(), MPFR_RNDN);
  Real den(prec);
  mpfr_set_z(den.raw(), x.get_den().get_mpz_t(), MPFR_RNDN);
  return num / den;
}

// base^x for base > 0.
inline Real pow_rational(const Real& base, const Rational& x) {
  if (is_integer(x) && x.get_num().fits_slong_p()) {
    return pow_si(base, x.get_num().get_si());
  }
  return pow(base, to_real(x, base.precision()));
}

}  // namespace qmoment
