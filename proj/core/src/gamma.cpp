#include "mlradii/gamma.hpp"

#include <cmath>

#include "mlradii/errors.hpp"

namespace mlradii {

namespace {

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2 pi)/2

double lanczos_log_gamma(double x) {
  // Valid for x > 0; the series itself behaves for all x above ~ -g.
  double series = kLanczosC[0];
  for (int i = 1; i < 15; ++i) series += kLanczosC[i] / (x + i - 1);
  const double t = x + kLanczosG - 0.5;
  return (x - 0.5) * std::log(t) - t + kHalfLogTwoPi + std::log(series);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be a finite positive real");
  }
  return lanczos_log_gamma(x);
}

double pochhammer(double gamma, int k) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("pochhammer: gamma must be a finite positive real");
  }
  if (k < 0) throw DomainError("pochhammer: k must be nonnegative");
  if (k <= 32) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= gamma + i;
    return p;
  }
  return std::exp(log_gamma(gamma + k) - log_gamma(gamma));
}

namespace detail {

long double log_pochhammer(long double gamma, int k) {
  if (k <= 64) {
    long double s = 0.0L;
    for (int i = 0; i < k; ++i) s += std::log(gamma + i);
    return s;
  }
  return std::lgamma(gamma + k) - std::lgamma(gamma);
}

}  // namespace detail

}  // namespace mlradii
