#pragma once

#include "qmoment/real.hpp"

namespace qmoment {

// Minimal complex arithmetic over Real; just what polynomial recurrences and
// partial sums off the real axis need.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Real& r) : re(r), im(Real(0L, r.precision())) {}

  static Complex zero(mpfr_prec_t prec) { return Complex(Real(0L, prec), Real(0L, prec)); }

  Complex operator-() const { return Complex(-re, -im); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator*(const Complex& a, const Real& s) {
    return Complex(a.re * s, a.im * s);
  }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
  friend Complex operator/(const Complex& a, const Real& s) {
    return Complex(a.re / s, a.im / s);
  }

  Complex conj() const { return Complex(re, -im); }
  Real abs2() const { return re * re + im * im; }
  friend Real abs(const Complex& a) { return sqrt(a.abs2()); }
};

}  // namespace qmoment
