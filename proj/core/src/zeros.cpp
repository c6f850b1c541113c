#include "mlradii/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "mlradii/errors.hpp"
#include "mlradii/region.hpp"
#include "mlradii/series.hpp"

namespace mlradii {

const char* to_string(ZeroTarget t) {
  switch (t) {
    case ZeroTarget::LambdaZeros: return "lambda";
    case ZeroTarget::PsiPrimeZeros: return "psiprime";
    case ZeroTarget::GPrimeZeros: return "gprime";
    case ZeroTarget::HPrimeZeros: return "hprime";
    case ZeroTarget::HFunctionZeros: return "hfunction";
  }
  return "?";
}

ScanOutcome scan_brackets(const std::function<double(double)>& f, double lo, double hi,
                          const ScanPolicy& policy) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("scan_brackets: requires finite lo < hi");
  }
  if (!(policy.step > 0.0)) throw DomainError("scan_brackets: step must be positive");

  ScanOutcome out;
  const double min_step = policy.step * policy.min_step_factor;

  double x0 = lo;
  double f0 = f(x0);
  double scale = std::fabs(f0);  // decayed running |f| scale
  double prev_abs = std::fabs(f0);
  bool falling = false;

  while (x0 < hi) {
    const double x1 = std::min(x0 + policy.step, hi);
    const double f1 = f(x1);
    const double a1 = std::fabs(f1);
    scale = std::max(a1, scale * 0.98);

    if ((f0 < 0.0) != (f1 < 0.0)) {
      out.brackets.push_back({x0, x1});
      falling = false;
    } else if (falling && a1 > prev_abs) {
      // |f| bottomed out inside (x0 - step, x1) without a sign change: refine.
      const bool near_zero = prev_abs <= policy.tangency_ratio * scale ||
                             prev_abs <= policy.noise_floor;
      if (near_zero) {
        double a = std::max(lo, x0 - policy.step);
        double b = x1;
        bool crossed = false;
        double step = policy.step / 2.0;
        while (step > min_step && !crossed) {
          double xa = a;
          double fa = f(xa);
          while (xa < b) {
            const double xb = std::min(xa + step, b);
            const double fb = f(xb);
            if ((fa < 0.0) != (fb < 0.0)) {
              out.brackets.push_back({xa, xb});
              crossed = true;
              break;
            }
            xa = xb;
            fa = fb;
          }
          step /= 2.0;
        }
        if (!crossed) out.suspicious.push_back(x0);
      }
      falling = false;
    } else {
      falling = a1 < prev_abs;
    }

    prev_abs = a1;
    x0 = x1;
    f0 = f1;
  }
  return out;
}

double refine_root(const std::function<double(double)>& f, Bracket bracket, double tol) {
  if (!(tol > 0.0)) throw DomainError("refine_root: tol must be positive");
  double a = bracket.lo, b = bracket.hi;
  if (!(a < b)) throw DomainError("refine_root: requires lo < hi");
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0)) {
    throw InvalidBracket("refine_root: no sign change on [" + std::to_string(a) + ", " +
                         std::to_string(b) + "]");
  }
  while (b - a > tol) {
    const double m = a + (b - a) / 2.0;
    if (m <= a || m >= b) break;  // interval no longer splittable
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return a + (b - a) / 2.0;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct ValErr {
  double value;
  double err;
};

struct TargetFn {
  std::function<ValErr(double)> eval;
  double step_scale;  // first-zero scale in the target's own variable
};

TargetFn make_target(const MLParams& p, ZeroTarget target) {
  const double t_scale = detail::first_zero_scale(p);  // scale in x for phi(-x)
  const double beta = p.beta;
  switch (target) {
    case ZeroTarget::LambdaZeros:
      return {[p](double z) {
                const auto f0 = detail::phi_series(p, -z * z, 0);
                return ValErr{static_cast<double>(f0.value), static_cast<double>(f0.err)};
              },
              std::sqrt(t_scale)};
    case ZeroTarget::PsiPrimeZeros:
      // Psi'(z) with Gamma(beta) z^(beta-1) stripped: beta lambda + z lambda'
      return {[p, beta](double z) {
                const auto f0 = detail::phi_series(p, -z * z, 0);
                const auto f1 = detail::phi_series(p, -z * z, 1);
                const double z2 = z * z;
                return ValErr{static_cast<double>(beta * f0.value - 2.0L * z2 * f1.value),
                              static_cast<double>(beta * f0.err + 2.0L * z2 * f1.err)};
              },
              std::sqrt(t_scale)};
    case ZeroTarget::GPrimeZeros:
      return {[p](double z) {
                const auto f0 = detail::phi_series(p, -z * z, 0);
                const auto f1 = detail::phi_series(p, -z * z, 1);
                const double z2 = z * z;
                return ValErr{static_cast<double>(f0.value - 2.0L * z2 * f1.value),
                              static_cast<double>(f0.err + 2.0L * z2 * f1.err)};
              },
              std::sqrt(t_scale)};
    case ZeroTarget::HPrimeZeros:
      return {[p](double z) {
                const auto f0 = detail::phi_series(p, -z, 0);
                const auto f1 = detail::phi_series(p, -z, 1);
                return ValErr{static_cast<double>(f0.value - (long double)z * f1.value),
                              static_cast<double>(f0.err + z * f1.err)};
              },
              t_scale};
    case ZeroTarget::HFunctionZeros:
      return {[p](double z) {
                const auto f0 = detail::phi_series(p, -z, 0);
                return ValErr{static_cast<double>(f0.value), static_cast<double>(f0.err)};
              },
              t_scale};
  }
  throw DomainError("make_target: unknown target");
}

void ensure_real_zero_regime(const MLParams& p, bool assume_real_zeros) {
  if (assume_real_zeros) return;
  if (!(p.omega > 1.0)) {
    throw ParamsNotAdmitted(
        "zeros_of: omega <= 1 lies outside the W_i domain; "
        "pass assume_real_zeros to override");
  }
  const WiVerdict v = in_Wi({1.0 / p.omega, p.beta});
  if (v.status != WiStatus::Member) {
    throw ParamsNotAdmitted(std::string("zeros_of: (1/omega, beta) is ") +
                            (v.status == WiStatus::NonMember ? "not in W_i" : "undecided in W_i") +
                            "; pass assume_real_zeros to override");
  }
}

// Validated zero collection shared by zeros_of and zeros_up_to. Returns true
// if `count` zeros were delivered; false when the series' precision wall cut
// the table short (zeros then holds what was validated).
bool collect_zeros(const MLParams& p, ZeroTarget target, int count, double tol,
                   std::vector<double>* zeros, std::string* wall_reason) {
  const TargetFn tf = make_target(p, target);
  auto value_of = [&tf](double z) { return tf.eval(z).value; };

  ScanPolicy policy;
  policy.step = 0.05 * tf.step_scale;
  double window_lo = 0.0;
  double window_hi = 8.0 * tf.step_scale;

  for (int growth = 0; growth < 10000 && static_cast<int>(zeros->size()) < count; ++growth) {
    ScanOutcome outcome;
    try {
      outcome = scan_brackets(value_of, window_lo, window_hi, policy);
    } catch (const NonConvergence& e) {
      *wall_reason = std::string("series evaluation failed while scanning: ") + e.what();
      return false;
    }

    // Process brackets and suspicious dips in position order.
    std::size_t bi = 0, si = 0;
    while (static_cast<int>(zeros->size()) < count &&
           (bi < outcome.brackets.size() || si < outcome.suspicious.size())) {
      const bool take_suspicious =
          si < outcome.suspicious.size() &&
          (bi >= outcome.brackets.size() || outcome.suspicious[si] < outcome.brackets[bi].lo);
      if (take_suspicious) {
        const double loc = outcome.suspicious[si];
        const ValErr probe = tf.eval(loc);
        if (std::fabs(probe.value) <= 16.0 * probe.err) {
          // Unresolvable dip: could be a tangency drowned in evaluation noise.
          *wall_reason = "evaluation noise hides a possible zero near z=" + fmt(loc);
          return false;
        }
        throw ZeroRealityViolation(
            "zeros_of: |f| has a near-zero local minimum without a sign change near z=" +
            fmt(loc) + "; zeros may form a complex pair");
      }

      const Bracket br = outcome.brackets[bi++];
      const double z = refine_root(value_of, br, tol);
      if (!zeros->empty() && z <= zeros->back()) continue;  // window-overlap duplicate

      // Validation: a sign change must survive at z +/- 10 tol and the
      // evaluation error must pin the position to within tol.
      const ValErr lo10 = tf.eval(z - 10.0 * tol);
      const ValErr hi10 = tf.eval(z + 10.0 * tol);
      const bool signs_solid = std::fabs(lo10.value) > 4.0 * lo10.err &&
                               std::fabs(hi10.value) > 4.0 * hi10.err &&
                               (lo10.value < 0.0) != (hi10.value < 0.0);
      const double slope = std::fabs(hi10.value - lo10.value) / (20.0 * tol);
      const ValErr at = tf.eval(z);
      const double uncertainty = slope > 0.0 ? at.err / slope : INFINITY;
      if (!signs_solid || uncertainty > tol) {
        *wall_reason = "zero near z=" + fmt(z) + " cannot be certified to tol=" +
                       fmt(tol) + " (series precision wall)";
        return false;
      }
      zeros->push_back(z);
      if (zeros->size() >= 2) {
        const double spacing =
            (*zeros)[zeros->size() - 1] - (*zeros)[zeros->size() - 2];
        policy.step = std::min(policy.step, 0.25 * spacing);
      }
    }

    window_lo = window_hi;
    window_hi *= 1.6;
  }

  if (static_cast<int>(zeros->size()) < count) {
    *wall_reason = "scan window growth exhausted";
    return false;
  }
  return true;
}

}  // namespace

ZeroTable zeros_of(const MLParams& params, ZeroTarget target, int count, double per_zero_tol,
                   bool assume_real_zeros) {
  params.validate();
  if (count < 1) throw DomainError("zeros_of: count must be >= 1");
  if (!(per_zero_tol > 0.0)) throw DomainError("zeros_of: per_zero_tol must be positive");
  ensure_real_zero_regime(params, assume_real_zeros);

  ZeroTable table{params, target, {}, per_zero_tol};
  std::string wall;
  if (!collect_zeros(params, target, count, per_zero_tol, &table.zeros, &wall)) {
    throw NonConvergence("zeros_of: found " + std::to_string(table.zeros.size()) + " of " +
                         std::to_string(count) + " requested zeros; " + wall);
  }
  return table;
}

namespace detail {

ZeroTable zeros_up_to(const MLParams& params, ZeroTarget target, int max_count, int min_count,
                      double per_zero_tol, bool assume_real_zeros) {
  params.validate();
  ensure_real_zero_regime(params, assume_real_zeros);
  ZeroTable table{params, target, {}, per_zero_tol};
  std::string wall;
  if (!collect_zeros(params, target, max_count, per_zero_tol, &table.zeros, &wall) &&
      static_cast<int>(table.zeros.size()) < min_count) {
    throw NonConvergence("zeros_up_to: only " + std::to_string(table.zeros.size()) + " of >= " +
                         std::to_string(min_count) + " required zeros; " + wall);
  }
  return table;
}

}  // namespace detail

bool check_interlacing(const ZeroTable& fn_zeros, const ZeroTable& deriv_zeros) {
  if (fn_zeros.zeros.empty() || deriv_zeros.zeros.empty()) {
    throw DomainError("check_interlacing: both tables need at least one zero");
  }
  const auto& fn = fn_zeros.zeros;
  const auto& dv = deriv_zeros.zeros;
  if (!(dv[0] < fn[0])) return false;
  for (std::size_t n = 0; n + 1 < dv.size(); ++n) {
    if (n < fn.size() && !(fn[n] < dv[n + 1])) return false;
    if (n + 1 < fn.size() && !(dv[n + 1] < fn[n + 1])) return false;
  }
  return true;
}

double ZeroAsymptote::operator()(int n) const {
  return scale * std::pow(n + offset, power);
}

ZeroAsymptote fit_zero_asymptote(const std::vector<double>& zeros) {
  ZeroAsymptote fit;
  const int K = static_cast<int>(zeros.size());
  if (K < 3) return fit;

  // Three equally spaced 1-based indices ending at K.
  const int m = std::max(1, K / 3);
  const int n1 = K - 2 * m, n2 = K - m, n3 = K;
  if (n1 < 1) return fit;
  const double v1 = zeros[n1 - 1], v2 = zeros[n2 - 1], v3 = zeros[n3 - 1];
  if (!(v1 > 0.0 && v2 > v1 && v3 > v2)) return fit;

  const double d1 = std::log(v2 / v1), d2 = std::log(v3 / v2);
  const double target = d2 / d1;
  // ratio(b) = log((n3+b)/(n2+b)) / log((n2+b)/(n1+b)) rises from 0 toward 1
  // (indices equally spaced), so target must sit strictly inside (0, 1).
  if (!(target > 1e-12 && target < 1.0 - 1e-12)) return fit;

  auto ratio = [&](double b) {
    return std::log((n3 + b) / (n2 + b)) / std::log((n2 + b) / (n1 + b));
  };
  double blo = -n1 + 1e-9, bhi = 1e9;
  if (ratio(blo) > target || ratio(bhi) < target) return fit;
  for (int i = 0; i < 200; ++i) {
    const double bm = blo + (bhi - blo) / 2.0;
    if (ratio(bm) < target) {
      blo = bm;
    } else {
      bhi = bm;
    }
  }
  const double b = blo + (bhi - blo) / 2.0;
  const double p = d2 / std::log((n3 + b) / (n2 + b));
  if (!(p > 0.3 && p < 8.0)) return fit;
  const double a = v3 / std::pow(n3 + b, p);

  fit.scale = a;
  fit.offset = b;
  fit.power = p;
  // Validate on points the fit did not touch. For m >= 2 the interior of
  // [n1, K] provides them; for m == 1 fall back to the point just below the
  // knots. A fit with no held-out point at all is unusable.
  double worst = 0.0;
  int held_out = 0;
  for (int n = n1; n <= K; ++n) {
    const double pred = a * std::pow(n + b, p);
    worst = std::max(worst, std::fabs(pred - zeros[n - 1]) / zeros[n - 1]);
    if (n != n1 && n != n2 && n != n3) ++held_out;
  }
  if (m == 1 && n1 - 1 >= 1) {
    const int n = n1 - 1;
    const double pred = a * std::pow(n + b, p);
    worst = std::max(worst, std::fabs(pred - zeros[n - 1]) / zeros[n - 1]);
    ++held_out;
  }
  fit.fit_residual = worst;
  fit.valid = held_out > 0 && worst <= 1e-3;
  return fit;
}

}  // namespace mlradii
