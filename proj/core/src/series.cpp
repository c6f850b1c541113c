#include "mlradii/series.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "mlradii/errors.hpp"
#include "mlradii/gamma.hpp"

namespace mlradii {

namespace {

constexpr int kMaxTerms = 10000;
constexpr long double kEpsL = LDBL_EPSILON / 2;

// Neumaier-compensated accumulator.
struct Accumulator {
  long double sum = 0.0L;
  long double comp = 0.0L;

  void add(long double v) {
    const long double t = sum + v;
    if (fabsl(sum) >= fabsl(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  long double value() const { return sum + comp; }
};

bool integer_omega(double omega, int* out) {
  const double r = std::round(omega);
  if (std::fabs(omega - r) < 1e-12 && r >= 1.0 && r <= 16.0) {
    *out = static_cast<int>(r);
    return true;
  }
  return false;
}

[[noreturn]] void throw_overflow(const MLParams& p, double x) {
  throw NonConvergence("phi series term overflow at omega=" + std::to_string(p.omega) +
                       ", beta=" + std::to_string(p.beta) + ", x=" + std::to_string(x) +
                       ": argument outside the evaluation policy");
}

}  // namespace

namespace detail {

double first_zero_scale(const MLParams& params) {
  return std::exp(log_gamma(params.omega + params.beta) - log_gamma(params.beta)) /
         params.gamma;
}

// d^m/dx^m phi(omega,beta,gamma,x) = sum_{j>=0} (gamma)_{j+m} x^j / (j! Gamma(omega(j+m)+beta))
SeriesEval phi_series(const MLParams& params, double x, int order) {
  params.validate();
  if (order < 0 || order > 2) throw DomainError("phi_series: order must be 0, 1 or 2");
  if (!std::isfinite(x)) throw DomainError("phi_series: x must be finite");

  const int m = order;
  const long double w = params.omega;
  const long double b = params.beta;
  const long double g = params.gamma;

  const long double log_t0 = log_pochhammer(g, m) - lgammal(w * m + b);
  if (x == 0.0) {
    const long double v = expl(log_t0);
    return {v, fabsl(v) * 64 * kEpsL, 1};
  }

  Accumulator acc;
  long double err = 0.0L;
  long double max_abs = 0.0L;
  long double prev_abs = 0.0L;
  long double last_abs = 0.0L;
  int small_run = 0;
  int terms = 0;

  // Terminate once three consecutive, non-growing term magnitudes fall below
  // tol_rel*|partial sum| + tol_abs. tol_abs is scaled to the largest term
  // seen: anything smaller is invisible next to the rounding already incurred.
  auto stop_after = [&](long double at) {
    const long double thresh =
        0.25L * kEpsL * fabsl(acc.value()) + 1e-3L * kEpsL * max_abs + 0x1p-16300L;
    if (terms > 2 && at <= thresh && (small_run == 0 || at <= prev_abs)) {
      ++small_run;
    } else {
      small_run = 0;
    }
    prev_abs = at;
    last_abs = at;
    return small_run >= 3;
  };

  int w_int = 0;
  if (integer_omega(params.omega, &w_int)) {
    // Gamma(omega(k+1)+beta)/Gamma(omega k+beta) is a plain product for
    // integer omega, so the term recurrence is exact rational arithmetic.
    long double t = expl(log_t0);
    const long double xl = x;
    for (int j = 0;; ++j) {
      acc.add(t);
      ++terms;
      const long double at = fabsl(t);
      if (at > max_abs) max_abs = at;
      err += at * (w_int + 3) * (j + 1) * kEpsL;
      if (stop_after(at)) break;
      if (terms >= kMaxTerms) {
        throw NonConvergence("phi series exceeded 10000 terms (x=" + std::to_string(x) + ")");
      }
      long double denom = static_cast<long double>(j) + 1.0L;
      const long double base = w * (j + m) + b;
      for (int i = 0; i < w_int; ++i) denom *= base + i;
      t *= xl * (g + j + m) / denom;
      if (!std::isfinite(t) || fabsl(t) > 0x1p16300L) throw_overflow(params, x);
    }
  } else {
    // General omega: log-magnitude + sign per term.
    const long double log_ax = logl(fabsl(static_cast<long double>(x)));
    const bool negative = x < 0.0;
    long double log_poch = log_pochhammer(g, m);  // log (gamma)_{j+m}, advanced in place
    long double log_fact = 0.0L;                  // log j!
    for (int j = 0;; ++j) {
      const long double log_gam = lgammal(w * (j + m) + b);
      const long double log_pow = j * log_ax;
      const long double log_mag = log_poch - log_fact - log_gam + log_pow;
      if (log_mag > 11300.0L) throw_overflow(params, x);
      long double t = expl(log_mag);
      if (negative && (j & 1)) t = -t;
      acc.add(t);
      ++terms;
      const long double at = fabsl(t);
      if (at > max_abs) max_abs = at;
      err += at * (fabsl(log_poch) + fabsl(log_fact) + fabsl(log_gam) + fabsl(log_pow) + 4.0L) *
             4.0L * kEpsL;
      if (stop_after(at)) break;
      if (terms >= kMaxTerms) {
        throw NonConvergence("phi series exceeded 10000 terms (x=" + std::to_string(x) + ")");
      }
      log_poch += logl(g + j + m);
      log_fact += logl(static_cast<long double>(j) + 1.0L);
    }
  }

  const long double value = acc.value();
  err += 2.0L * last_abs;              // tail bound: twice the last included term
  err += fabsl(value) * 8.0L * kEpsL;  // shared constants (Gamma(omega m + beta) etc.)
  return {value, err, terms};
}

}  // namespace detail

namespace {

void enforce_argument_policy(const MLParams& params, double x) {
  if (x >= 0.0) return;  // no cancellation on the positive axis; the term cap governs
  const double scale = detail::first_zero_scale(params);
  if (-x > 10.0 * scale) {
    throw DomainError("eval_phi: x = " + std::to_string(x) +
                      " exceeds the supported policy |x| <= 10 * first-zero scale (" +
                      std::to_string(10.0 * scale) + ")");
  }
}

EvalResult to_result(const detail::SeriesEval& s) {
  const double value = static_cast<double>(s.value);
  double est = static_cast<double>(s.err) + std::fabs(value) * DBL_EPSILON;
  return {value, est, s.terms};
}

}  // namespace

EvalResult eval_phi(const MLParams& params, double x) {
  params.validate();
  enforce_argument_policy(params, x);
  return to_result(detail::phi_series(params, x, 0));
}

EvalResult eval_phi_derivative(const MLParams& params, double x, int order) {
  params.validate();
  if (order != 1 && order != 2) {
    throw DomainError("eval_phi_derivative: order must be 1 or 2");
  }
  enforce_argument_policy(params, x);
  return to_result(detail::phi_series(params, x, order));
}

void MLParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega) || !(beta > 0.0) || !std::isfinite(beta) ||
      !(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("MLParams: omega, beta, gamma must be finite positive reals");
  }
}

const char* to_string(Normalization n) {
  switch (n) {
    case Normalization::F: return "f";
    case Normalization::G: return "g";
    case Normalization::H: return "h";
  }
  return "?";
}

}  // namespace mlradii
