#include "qmoment/qcore.hpp"

namespace qmoment {

Real qpochhammer_finite(const Real& x, const Real& q, long n) {
  mpfr_prec_t prec = std::max(x.precision(), q.precision());
  Real prod(1L, prec);
  Real factor = x;  // q^i * x
  for (long i = 0; i < n; ++i) {
    prod *= (1L - factor);
    factor *= q;
  }
  return prod;
}

PochhammerResult qpochhammer_inf_checked(const Real& x, const Real& q, const QContext& ctx) {
  mpfr_prec_t prec = std::max({x.precision(), q.precision(),
                               static_cast<mpfr_prec_t>(ctx.precision())});
  Real prod(1L, prec);
  Real term = x.with_precision(prec);  // q^i * x
  Real min_factor(prec);
  mpfr_set_inf(min_factor.raw(), 1);
  const Real& tol = ctx.tail_tol();
  int quiet = 0;
  // |q^i x| decays geometrically, so the iteration count is bounded by
  // log(tol)/log(q) plus the guard.
  for (long i = 0; quiet < 3; ++i) {
    Real factor = 1L - term;
    min_factor = min(min_factor, abs(factor));
    prod *= factor;
    term *= q;
    quiet = (abs(term) < tol) ? quiet + 1 : 0;
    if (i > 400000) {
      throw ValidationError("qpochhammer_inf: product did not stabilize (q too close to 1?)");
    }
  }
  return {std::move(prod), std::move(min_factor)};
}

Real qpochhammer_inf(const Real& x, const Real& q, const QContext& ctx) {
  return qpochhammer_inf_checked(x, q, ctx).value;
}

Real q_exp(const Real& x, const Real& q, const QContext& ctx) {
  PochhammerResult p = qpochhammer_inf_checked(x, q, ctx);
  // A factor this small means x coincides with a pole q^-i at working precision.
  Real pole_eps = Real::pow2(-(static_cast<long>(ctx.precision()) - 8), ctx.precision()) *
                  max(Real(1L, ctx.precision()), abs(x));
  if (abs(p.min_factor) <= pole_eps) {
    throw PoleError("q_exp: (x;q)_inf vanishes, x lies on the pole lattice {q^-i}");
  }
  return 1L / p.value;
}

JacksonResult jackson_integral(const GridFunction& f) {
  const QContext& ctx = f.ctx();
  const long kmin = ctx.k_min();
  const long kmax = ctx.k_max();
  const Real two_v_plus_2 = ctx.v() * 2L + 2L;

  std::vector<Real> terms;
  terms.reserve(ctx.grid_size());
  for (long k = kmin; k <= kmax; ++k) {
    Real weight = pow(ctx.q(), two_v_plus_2 * Real(k, ctx.precision()));
    terms.push_back(weight * f.at(k));
  }

  // Divergence sniffing: strictly growing magnitudes for 5 consecutive steps
  // into a window end mean the bilateral series cannot converge there.
  auto grows_into_boundary = [&](bool lower) {
    if (static_cast<long>(terms.size()) < 6) return false;
    for (int j = 0; j < 5; ++j) {
      const Real& nearer = lower ? terms[j] : terms[terms.size() - 1 - j];
      const Real& farther = lower ? terms[j + 1] : terms[terms.size() - 2 - j];
      if (!(abs(nearer) > abs(farther))) return false;
    }
    return true;
  };
  if (grows_into_boundary(true)) {
    throw TailDivergenceError("jackson_integral: terms grow toward k_min; integral diverges on this window");
  }
  if (grows_into_boundary(false)) {
    throw TailDivergenceError("jackson_integral: terms grow toward k_max; integral diverges on this window");
  }

  Real sum(0L, ctx.precision());
  for (const Real& t : terms) sum += t;
  sum *= (1L - ctx.q());

  JacksonResult result;
  Real denom = max(abs(sum), Real::pow2(-4 * static_cast<long>(ctx.precision()), ctx.precision()));
  Real scale = abs(Real(1L, ctx.precision()) - ctx.q());
  result.lower_boundary_ratio = abs(terms.front()) * scale / denom;
  result.upper_boundary_ratio = abs(terms.back()) * scale / denom;
  result.tail_warning = result.lower_boundary_ratio > ctx.tail_tol() ||
                        result.upper_boundary_ratio > ctx.tail_tol();
  result.value = std::move(sum);
  return result;
}

}  // namespace qmoment
