#include "qmoment/qcontext.hpp"

namespace qmoment {

QContext QContext::make(const Real& q, const Real& v, mpfr_prec_t precision, long k_min,
                        long k_max, std::optional<Real> tail_tol) {
  if (precision < Real::kMinPrecision) {
    throw ValidationError("precision must be at least 64 bits");
  }
  QContext ctx;
  ctx.precision_ = precision;
  ctx.q_ = q.with_precision(precision);
  ctx.v_ = v.with_precision(precision);
  if (!(ctx.q_ > Real(0L, precision)) || !(ctx.q_ < Real(1L, precision))) {
    throw ValidationError("q must lie in (0,1)");
  }
  if (!(ctx.v_ > Real(-1.0, precision))) {
    throw ValidationError("v must be greater than -1");
  }
  if (!(k_min < 0 && 0 < k_max)) {
    throw ValidationError("grid window must satisfy k_min < 0 < k_max");
  }
  ctx.k_min_ = k_min;
  ctx.k_max_ = k_max;
  if (tail_tol) {
    if (!(*tail_tol > Real(0L, precision))) {
      throw ValidationError("tail_tol must be positive");
    }
    ctx.tail_tol_ = tail_tol->with_precision(precision);
  } else {
    ctx.tail_tol_ = Real::pow2(-(3 * static_cast<long>(precision) / 8), precision);
  }
  return ctx;
}

QContext QContext::make(double q, double v, mpfr_prec_t precision, long k_min, long k_max) {
  return make(Real(q, precision), Real(v, precision), precision, k_min, k_max);
}

QContext QContext::with_window(long k_min, long k_max) const {
  return make(q_, v_, precision_, k_min, k_max, tail_tol_);
}

QContext QContext::with_precision(mpfr_prec_t precision) const {
  return make(q_, v_, precision, k_min_, k_max_);
}

GridFunction::GridFunction(QContext ctx, std::vector<Real> values)
    : ctx_(std::move(ctx)), values_(std::move(values)) {
  if (static_cast<long>(values_.size()) != ctx_.grid_size()) {
    throw ValidationError("grid function values must cover [k_min, k_max]");
  }
}

GridFunction GridFunction::zero(const QContext& ctx) {
  return GridFunction(ctx, std::vector<Real>(ctx.grid_size(), ctx.real(0L)));
}

GridFunction GridFunction::atom(const QContext& ctx, long k, const Real& value) {
  GridFunction g = zero(ctx);
  g.set(k, value);
  return g;
}

GridFunction GridFunction::sample(const QContext& ctx,
                                  const std::function<Real(const Real&)>& f) {
  std::vector<Real> vals;
  vals.reserve(ctx.grid_size());
  for (long k = ctx.k_min(); k <= ctx.k_max(); ++k) {
    vals.push_back(f(ctx.grid_point(k)));
  }
  return GridFunction(ctx, std::move(vals));
}

const Real& GridFunction::at(long k) const {
  if (k < ctx_.k_min() || k > ctx_.k_max()) {
    throw ValidationError("grid exponent outside context window");
  }
  return values_[static_cast<size_t>(k - ctx_.k_min())];
}

void GridFunction::set(long k, Real value) {
  if (k < ctx_.k_min() || k > ctx_.k_max()) {
    throw ValidationError("grid exponent outside context window");
  }
  values_[static_cast<size_t>(k - ctx_.k_min())] = std::move(value);
}

}  // namespace qmoment
