#include "mlradii/ratios.hpp"

#include <cmath>

#include "mlradii/errors.hpp"
#include "mlradii/series.hpp"

namespace mlradii {

namespace {

void check_r(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("ratio: r must be a finite positive real");
  }
}

// Denominators must stay strictly positive below the relevant first zero.
// A value that is nonpositive lies at or past the zero; a positive value whose
// relative evaluation error exceeds 1e-6 is noise-level, which also means r
// sits on the zero to within working precision.
void check_positive(const detail::SeriesEval& d, const char* what) {
  if (!(d.value > 0.0L) || d.err > 1e-6L * d.value) {
    throw DomainError(std::string("ratio: r at or beyond the first zero of ") + what);
  }
}

}  // namespace

double ratio_starlike(const MLParams& params, Normalization norm, double r) {
  params.validate();
  check_r(r);
  if (norm == Normalization::H) {
    const double x = -r;
    const auto p0 = detail::phi_series(params, x, 0);
    const auto p1 = detail::phi_series(params, x, 1);
    check_positive(p0, "h");
    return static_cast<double>(1.0L - r * p1.value / p0.value);
  }
  const double x = -r * r;
  const auto p0 = detail::phi_series(params, x, 0);
  const auto p1 = detail::phi_series(params, x, 1);
  check_positive(p0, "lambda");
  const long double c = (norm == Normalization::F) ? 1.0L / params.beta : 1.0L;
  return static_cast<double>(1.0L - c * 2.0L * (long double)r * r * p1.value / p0.value);
}

double ratio_convex(const MLParams& params, Normalization norm, double r) {
  params.validate();
  check_r(r);
  const long double rl = r;

  if (norm == Normalization::H) {
    const double x = -r;
    const auto p0 = detail::phi_series(params, x, 0);
    const auto p1 = detail::phi_series(params, x, 1);
    const auto p2 = detail::phi_series(params, x, 2);
    // h'(z)/Gamma(beta) = phi(-z) - z phi'(-z)
    detail::SeriesEval d{p0.value - rl * p1.value, p0.err + rl * p1.err, 0};
    check_positive(d, "h'");
    return static_cast<double>(1.0L + rl * (-2.0L * p1.value + rl * p2.value) / d.value);
  }

  const double x = -r * r;
  const auto p0 = detail::phi_series(params, x, 0);
  const auto p1 = detail::phi_series(params, x, 1);
  const auto p2 = detail::phi_series(params, x, 2);
  const long double r2 = rl * rl;

  if (norm == Normalization::G) {
    // g'(z)/Gamma(beta) = lambda + z lambda' = phi - 2z^2 phi'
    detail::SeriesEval d{p0.value - 2.0L * r2 * p1.value, p0.err + 2.0L * r2 * p1.err, 0};
    check_positive(d, "g'");
    const long double num = -6.0L * r2 * p1.value + 4.0L * r2 * r2 * p2.value;
    return static_cast<double>(1.0L + num / d.value);
  }

  // F: 1 + z Psi''/Psi' + (1/beta - 1) z Psi'/Psi with
  //   z Psi'/Psi  = beta - 2z^2 phi'/phi
  //   z Psi''/Psi' = beta - 1 + (-2z^2(beta+2) phi' + 4z^4 phi'') / (beta phi - 2z^2 phi')
  const long double b = params.beta;
  check_positive(p0, "lambda");
  detail::SeriesEval s{b * p0.value - 2.0L * r2 * p1.value, b * p0.err + 2.0L * r2 * p1.err, 0};
  check_positive(s, "Psi'");
  const long double psi_ratio = b - 2.0L * r2 * p1.value / p0.value;
  const long double conv_num = -2.0L * r2 * (b + 2.0L) * p1.value + 4.0L * r2 * r2 * p2.value;
  const long double psi2_ratio = b - 1.0L + conv_num / s.value;
  return static_cast<double>(1.0L + psi2_ratio + (1.0L / b - 1.0L) * psi_ratio);
}

double eval_J(const MLParams& params, Normalization norm, double alpha, double r) {
  params.validate();
  check_r(r);
  if (!std::isfinite(alpha)) throw DomainError("eval_J: alpha must be finite");
  if (alpha == 0.0) return ratio_starlike(params, norm, r);
  return (1.0 - alpha) * ratio_starlike(params, norm, r) +
         alpha * ratio_convex(params, norm, r);
}

}  // namespace mlradii
