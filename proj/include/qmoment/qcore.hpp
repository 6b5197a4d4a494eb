#pragma once

#include "qmoment/qcontext.hpp"
#include "qmoment/real.hpp"

namespace qmoment {

// Finite q-Pochhammer symbol (x;q)_n = prod_{i=0}^{n-1} (1 - q^i x).
// Empty product (n = 0) is 1. Total function.
Real qpochhammer_finite(const Real& x, const Real& q, long n);

// Infinite product (x;q)_inf, truncated once |q^i x| stays below
// ctx.tail_tol() for 3 consecutive factors.
Real qpochhammer_inf(const Real& x, const Real& q, const QContext& ctx);

// Same, also reporting the smallest |1 - q^i x| met along the way, which is
// how callers detect that x sits on the pole lattice {q^-i}.
struct PochhammerResult {
  Real value;
  Real min_factor;
};
PochhammerResult qpochhammer_inf_checked(const Real& x, const Real& q, const QContext& ctx);

// q-exponential e(x,q) = 1/(x;q)_inf. Throws PoleError when (x;q)_inf
// vanishes at working precision (x on {q^-i}).
Real q_exp(const Real& x, const Real& q, const QContext& ctx);

struct JacksonResult {
  Real value;
  // Boundary term exceeded tail_tol * |sum| at either window end; widen the
  // window if the result matters at that scale.
  bool tail_warning = false;
  Real lower_boundary_ratio;  // |T_{k_min}| / |sum|
  Real upper_boundary_ratio;  // |T_{k_max}| / |sum|
};

// Weighted Jackson sum (1-q) sum_k q^{k(2v+2)} f(q^k) over the context
// window, i.e. the integral of f against x^{2v+1} d_q x on the positive
// geometric grid. Throws TailDivergenceError when the terms grow
// monotonically for 5 consecutive steps into either window end.
JacksonResult jackson_integral(const GridFunction& f);

}  // namespace qmoment
