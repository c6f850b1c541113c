#pragma once

#include "mlradii/params.hpp"

namespace mlradii {

/// phi(omega, beta, gamma, x) with truncation-error accounting.
///
/// Terms are formed in log-magnitude + sign form (or by an exact rational
/// recurrence when omega is an integer) and accumulated with compensated
/// summation in extended precision. The sum terminates once three consecutive
/// term magnitudes fall below tol_rel*|partial sum| + tol_abs without growing.
///
/// Negative arguments are supported up to ten times the first-zero scale
/// Gamma(omega+beta)/(gamma*Gamma(beta)); beyond that the alternating series
/// cancels catastrophically and DomainError is thrown. A 10,000 term cap
/// converts silent divergence into NonConvergence.
EvalResult eval_phi(const MLParams& params, double x);

/// d^order/dx^order of phi at x, order in {1, 2}, by term-wise
/// differentiation of the series (same contracts as eval_phi).
EvalResult eval_phi_derivative(const MLParams& params, double x, int order);

namespace detail {

/// Extended-precision series value with an absolute error bound.
struct SeriesEval {
  long double value;
  long double err;
  int terms;
};

/// Unguarded engine behind eval_phi / eval_phi_derivative. The zero finder
/// and solvers call this directly: they operate past the public argument
/// policy and rely on the error bound instead.
SeriesEval phi_series(const MLParams& params, double x, int order);

/// First-zero scale of phi(omega,beta,gamma,-t) in t, estimated from the
/// leading series coefficients: Gamma(omega+beta)/(gamma*Gamma(beta)).
double first_zero_scale(const MLParams& params);

}  // namespace detail

}  // namespace mlradii
