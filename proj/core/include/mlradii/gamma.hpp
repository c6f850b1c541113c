#pragma once

namespace mlradii {

/// Natural log of Gamma(x) for x > 0 (Lanczos approximation, relative error
/// below 1e-13 on [1e-3, 1e4]). Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

/// Pochhammer symbol (gamma)_k = Gamma(gamma + k) / Gamma(gamma).
/// Direct product for k <= 32, log_gamma otherwise.
double pochhammer(double gamma, int k);

namespace detail {

/// log((gamma)_k) in extended precision; used by the series engine.
long double log_pochhammer(long double gamma, int k);

}  // namespace detail

}  // namespace mlradii
