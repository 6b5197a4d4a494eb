#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qmoment/errors.hpp"
#include "qmoment/real.hpp"

namespace qmoment {

// Shared evaluation parameters: the deformation base q in (0,1), the weight
// exponent v > -1, the working mantissa precision, the truncated geometric
// grid {q^k : k_min <= k <= k_max}, and the relative tolerance driving every
// truncation decision. Immutable after construction.
class QContext {
 public:
  static QContext make(const Real& q, const Real& v, mpfr_prec_t precision = 256,
                       long k_min = -64, long k_max = 64,
                       std::optional<Real> tail_tol = std::nullopt);
  static QContext make(double q, double v, mpfr_prec_t precision = 256, long k_min = -64,
                       long k_max = 64);

  const Real& q() const { return q_; }
  const Real& v() const { return v_; }
  mpfr_prec_t precision() const { return precision_; }
  long k_min() const { return k_min_; }
  long k_max() const { return k_max_; }
  const Real& tail_tol() const { return tail_tol_; }
  // Adaptive evaluations refuse to exceed this many mantissa bits.
  mpfr_prec_t precision_ceiling() const { return 16 * precision_; }

  long grid_size() const { return k_max_ - k_min_ + 1; }
  // q^k at working precision.
  Real grid_point(long k) const { return pow_si(q_, k); }

  Real real(double x) const { return Real(x, precision_); }
  Real real(long x) const { return Real(x, precision_); }

  // Same q, v, precision, tolerance; different window.
  QContext with_window(long k_min, long k_max) const;
  QContext with_precision(mpfr_prec_t precision) const;

 private:
  QContext() = default;
  Real q_;
  Real v_;
  mpfr_prec_t precision_ = 256;
  long k_min_ = -64;
  long k_max_ = 64;
  Real tail_tol_;
};

// A function sampled on the full grid of its context: values[k - k_min] = f(q^k).
class GridFunction {
 public:
  GridFunction(QContext ctx, std::vector<Real> values);

  static GridFunction zero(const QContext& ctx);
  // Indicator-like function: value at grid exponent k, zero elsewhere.
  static GridFunction atom(const QContext& ctx, long k, const Real& value);
  static GridFunction sample(const QContext& ctx, const std::function<Real(const Real&)>& f);

  const QContext& ctx() const { return ctx_; }
  const Real& at(long k) const;
  void set(long k, Real value);
  const std::vector<Real>& values() const { return values_; }

 private:
  QContext ctx_;
  std::vector<Real> values_;
};

}  // namespace qmoment
