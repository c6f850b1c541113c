#pragma once

#include "mlradii/params.hpp"

namespace mlradii {

/// z u'(z)/u(z) at z = r for the chosen normalization u in {f, g, h}.
/// Valid for 0 < r < first zero of u (first lambda zero for F/G, its square
/// for H); DomainError once the denominator vanishes or turns negative.
double ratio_starlike(const MLParams& params, Normalization norm, double r);

/// 1 + z u''(z)/u'(z) at z = r. For F this is
/// 1 + z Psi''/Psi' + (1/beta - 1) z Psi'/Psi with Psi(z) = z^beta Gamma(beta) lambda(z).
/// Valid for 0 < r < first zero of the relevant derivative.
double ratio_convex(const MLParams& params, Normalization norm, double r);

/// J(alpha, u)(r) = (1-alpha) z u'/u + alpha (1 + z u''/u').
/// alpha = 0 collapses to ratio_starlike and only needs r below the first
/// function zero; otherwise r must stay below the first derivative zero.
double eval_J(const MLParams& params, Normalization norm, double alpha, double r);

}  // namespace mlradii
