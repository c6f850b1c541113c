#include "mlradii/radii.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "mlradii/errors.hpp"
#include "mlradii/gamma.hpp"
#include "mlradii/ratios.hpp"
#include "mlradii/region.hpp"
#include "mlradii/series.hpp"
#include "mlradii/zeros.hpp"

namespace mlradii {

const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::UniformConvex: return "ucv";
    case ProblemKind::AlphaConvex: return "alphaconvex";
    case ProblemKind::ParabolicStarlike: return "sp";
    case ProblemKind::StrongStarlike: return "strong";
    case ProblemKind::Starlike: return "star";
    case ProblemKind::Convex: return "convex";
  }
  return "?";
}

const char* to_string(VerifyState v) {
  switch (v) {
    case VerifyState::Unverified: return "unverified";
    case VerifyState::Passed: return "passed";
    case VerifyState::Failed: return "failed";
  }
  return "?";
}

void ProblemSpec::validate() const {
  if (!std::isfinite(eta) || !std::isfinite(alpha) || !std::isfinite(rho)) {
    throw DomainError("ProblemSpec: parameters must be finite");
  }
  switch (kind) {
    case ProblemKind::UniformConvex:
    case ProblemKind::ParabolicStarlike:
      if (eta < 0.0) throw DomainError("ProblemSpec: eta must be >= 0");
      if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("ProblemSpec: rho must lie in [0,1)");
      break;
    case ProblemKind::AlphaConvex:
      if (alpha < 0.0) throw DomainError("ProblemSpec: alpha must be >= 0");
      if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("ProblemSpec: rho must lie in [0,1)");
      break;
    case ProblemKind::StrongStarlike:
      if (!(rho > 0.0 && rho <= 1.0)) {
        throw DomainError("ProblemSpec: strong starlikeness requires rho in (0,1]");
      }
      break;
    case ProblemKind::Starlike:
    case ProblemKind::Convex:
      if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("ProblemSpec: rho must lie in [0,1)");
      break;
  }
}

namespace {

void ensure_admitted(const MLParams& p, const SolverOptions& opts) {
  if (opts.assume_real_zeros) return;
  if (!(p.omega > 1.0)) {
    throw ParamsNotAdmitted(
        "radius solver: omega <= 1 lies outside the W_i domain; "
        "pass assume_real_zeros to override");
  }
  const WiVerdict v = in_Wi({1.0 / p.omega, p.beta}, opts.max_c_depth);
  if (v.status != WiStatus::Member) {
    throw ParamsNotAdmitted(std::string("radius solver: (1/omega, beta) is ") +
                            (v.status == WiStatus::NonMember ? "not in W_i" : "undecided in W_i") +
                            "; pass assume_real_zeros to override");
  }
}

double first_zero(const MLParams& p, ZeroTarget target, const SolverOptions& opts) {
  return detail::zeros_up_to(p, target, 1, 1, opts.zero_tol, true).zeros[0];
}

ZeroTarget derivative_target(Normalization norm) {
  switch (norm) {
    case Normalization::F: return ZeroTarget::PsiPrimeZeros;
    case Normalization::G: return ZeroTarget::GPrimeZeros;
    case Normalization::H: return ZeroTarget::HPrimeZeros;
  }
  throw DomainError("unknown normalization");
}

ZeroTarget function_target(Normalization norm) {
  return norm == Normalization::H ? ZeroTarget::HFunctionZeros : ZeroTarget::LambdaZeros;
}

struct BisectOut {
  double root;
  double residual;
  int iterations;
};

// Bisection on (lo, hi) for an equation with one sign change: positive at the
// lo side and negative at the hi side when `decreasing`, flipped otherwise.
// Runs until both the bracket width and the residual drop below tol.
BisectOut bisect_monotone(const std::function<double(double)>& E, double lo, double hi,
                          double tol, bool decreasing) {
  const double span = hi - lo;
  double a = lo + std::max(1e-12 * hi, 1e-9 * span);
  double b = hi - std::max(1e-12 * hi, 1e-9 * span);
  const double flip = decreasing ? 1.0 : -1.0;
  const double fa = flip * E(a);
  const double fb = flip * E(b);
  if (!(fa > 0.0)) {
    throw ConvergenceFailure("bisect: equation not of the proven sign at the low bracket edge");
  }
  if (!(fb < 0.0)) {
    throw ConvergenceFailure("bisect: equation not of the proven sign at the high bracket edge");
  }
  int it = 0;
  double mid = a + (b - a) / 2.0;
  double fm = flip * E(mid);
  while (it < 200) {
    ++it;
    if (fm > 0.0) {
      a = mid;
    } else {
      b = mid;
    }
    const double next = a + (b - a) / 2.0;
    if (next <= a || next >= b) break;  // no doubles left between a and b
    mid = next;
    fm = flip * E(mid);
    if (b - a <= tol && std::fabs(fm) <= tol) break;
  }
  if (b - a > tol) {
    throw ConvergenceFailure("bisect: bracket failed to contract below tolerance");
  }
  return {mid, flip * fm, it};
}

RadiusResult make_result(ProblemSpec prob, Normalization norm, const MLParams& p,
                         const BisectOut& out, double hi, int zeros_used) {
  return {prob, norm, p, out.root, 0.0, hi, out.residual, out.iterations, zeros_used,
          VerifyState::Unverified};
}

// --- strong starlikeness -----------------------------------------------------
//
// psi(r) = sum_n [cm/(v_n - y) + cp/(v_n + y)] - s  with s = sin(pi rho / 2),
// v_n the squared lambda zeros (the h-function zeros coincide with them), and
//   F: y = r^2, cm = (1+s) r^2 / beta, cp = (1-s) r^2 / beta
//   G: y = r^2, cm = (1+s) r^2,        cp = (1-s) r^2
//   H: y = r,   cm = (1+s) r / 2,      cp = (1-s) r / 2
// which is the partial-fraction form of the printed sums
// sum r^2 (lambda_n^2 + r^2 s)/(lambda_n^4 - r^4) (resp. the H variant).
//
// The head runs over the certified zero table; the tail beyond it expands in
// powers of y against the Rayleigh power sums p_m = sum_n v_n^{-m}, which are
// exact: phi's Hadamard product gives Pi_n (1 + x/v_n) = sum_k e_k x^k with
// e_k = Gamma(beta) (gamma)_k / (k! Gamma(omega k + beta)), so Newton's
// identities turn the series coefficients into the p_m directly.

constexpr int kStrongMoments = 40;

struct StrongContext {
  std::vector<double> v;             // leading v_n from the validated zero table
  std::vector<long double> moments;  // p_1 .. p_m, exact power sums of 1/v_n
  double hi;                         // bracket top: first v (H) or first lambda zero
};

std::vector<long double> rayleigh_moments(const MLParams& p, int count, double v1) {
  std::vector<long double> e(count + 1), mom(count + 1, 0.0L);
  const long double b = p.beta, g = p.gamma, w = p.omega;
  for (int k = 0; k <= count; ++k) {
    e[k] = expl(lgammal(b) + detail::log_pochhammer(g, k) - lgammal((long double)k + 1) -
                lgammal(w * k + b));
  }
  for (int m = 1; m <= count; ++m) {
    long double s = 0.0L;
    for (int i = 1; i < m; ++i) {
      const long double t = e[i] * mom[m - i];
      s += (i % 2) ? t : -t;
    }
    s += ((m % 2) ? 1.0L : -1.0L) * m * e[m];
    mom[m] = s;
  }
  // p_m v_1^m = sum_n (v_1/v_n)^m decreases monotonically toward 1; a break
  // marks the depth where the recursion's cancellation took over. The slack
  // absorbs the tabulated v_1's own tolerance raised to the m-th power.
  std::vector<long double> out;
  out.reserve(count);
  long double q_prev = 0.0L;
  for (int m = 1; m <= count; ++m) {
    const long double q = mom[m] * powl((long double)v1, m);
    if (!(q >= 1.0L - 1e-6L) || (m > 1 && q > q_prev * (1.0L + 1e-6L))) break;
    q_prev = q;
    out.push_back(mom[m]);
  }
  return out;
}

// T_m = p_m - sum_{n<=head} v_n^(-m): the power sums of the zeros past the
// explicitly summed head.
std::vector<long double> tail_moments(const StrongContext& ctx, int head) {
  std::vector<long double> t(ctx.moments.size());
  for (std::size_t m = 0; m < ctx.moments.size(); ++m) {
    long double partial = 0.0L;
    for (int n = 0; n < head; ++n) partial += powl((long double)ctx.v[n], -(long double)(m + 1));
    t[m] = ctx.moments[m] - partial;
  }
  return t;
}

double strong_psi(const StrongContext& ctx, Normalization norm, const MLParams& p, double s,
                  double r, int head, const std::vector<long double>& tail_mom) {
  head = std::min<int>(head, static_cast<int>(ctx.v.size()));
  double y, cm, cp;
  if (norm == Normalization::H) {
    y = r;
    cm = (1.0 + s) * r / 2.0;
    cp = (1.0 - s) * r / 2.0;
  } else {
    y = r * r;
    cm = (1.0 + s) * r * r;
    cp = (1.0 - s) * r * r;
    if (norm == Normalization::F) {
      cm /= p.beta;
      cp /= p.beta;
    }
  }

  long double total = 0.0L;
  for (int n = 0; n < head; ++n) {
    total += cm / (ctx.v[n] - y) + cp / (ctx.v[n] + y);
  }
  // tail: sum_{n>head} = sum_j (cm y^j + cp (-y)^j) T_{j+1}, geometric in
  // y/v_{head+1}. Near the bracket top the expansion slows, but there the
  // head's leading pole dominates the sign anyway.
  long double y_pow = 1.0L;
  for (std::size_t j = 0; j < tail_mom.size(); ++j) {
    const long double coef = (j % 2) ? (cm - cp) : (cm + cp);
    const long double term = coef * y_pow * tail_mom[j];
    total += term;
    if (fabsl(term) <= 1e-18L * (1.0L + fabsl(total))) break;
    y_pow *= y;
  }
  return static_cast<double>(total) - s;
}

StrongContext build_strong_context(const MLParams& p, Normalization norm,
                                   const SolverOptions& opts) {
  // All three sums run over the squared lambda zeros, so the context is built
  // from the lambda ladder. The per-zero tolerance sits at 1e-9: the sums are
  // insensitive to position error at that level and the looser tolerance
  // reaches a few more zeros past the cancellation wall, which sharpens the
  // moment tail's convergence.
  (void)opts;
  const double table_tol = 1e-9;
  const ZeroTable table =
      detail::zeros_up_to(p, ZeroTarget::LambdaZeros, 48, 4, table_tol, true);
  StrongContext ctx;
  ctx.v.reserve(table.zeros.size());
  for (double z : table.zeros) ctx.v.push_back(z * z);
  ctx.hi = norm == Normalization::H ? ctx.v[0] : table.zeros[0];
  ctx.moments = rayleigh_moments(p, kStrongMoments, ctx.v[0]);
  if (ctx.moments.size() < 8) {
    throw TailNotConverged("strong starlike: Rayleigh moment recursion lost precision");
  }
  return ctx;
}

BisectOut solve_strong_at(const StrongContext& ctx, Normalization norm, const MLParams& p,
                          double s, int N, double tol) {
  const int head = std::min<int>(N, static_cast<int>(ctx.v.size()));
  const std::vector<long double> tmom = tail_moments(ctx, head);
  auto E = [&](double r) { return strong_psi(ctx, norm, p, s, r, head, tmom); };
  return bisect_monotone(E, 0.0, ctx.hi, tol, /*decreasing=*/false);
}

}  // namespace

RadiusResult radius_uniform_convex(const MLParams& params, Normalization norm, double eta,
                                   double rho, const SolverOptions& opts) {
  params.validate();
  ProblemSpec prob{ProblemKind::UniformConvex, eta, 0.0, rho};
  prob.validate();
  ensure_admitted(params, opts);
  const double hi = first_zero(params, derivative_target(norm), opts);
  auto E = [&](double r) { return (1.0 + eta) * ratio_convex(params, norm, r) - (eta + rho); };
  const BisectOut out = bisect_monotone(E, 0.0, hi, opts.tol, true);
  return make_result(prob, norm, params, out, hi, 0);
}

RadiusResult radius_alpha_convex(const MLParams& params, Normalization norm, double alpha,
                                 double rho, const SolverOptions& opts) {
  params.validate();
  ProblemSpec prob{ProblemKind::AlphaConvex, 0.0, alpha, rho};
  prob.validate();
  ensure_admitted(params, opts);

  const ZeroTarget bracket_target =
      alpha == 0.0 ? function_target(norm) : derivative_target(norm);
  const double hi = first_zero(params, bracket_target, opts);
  auto E = [&](double r) { return eval_J(params, norm, alpha, r) - rho; };
  const BisectOut out = bisect_monotone(E, 0.0, hi, opts.tol, true);
  RadiusResult result = make_result(prob, norm, params, out, hi, 0);

  if (alpha > 0.0 && alpha < 1.0) {
    // r^c_rho < r_{alpha,rho} < r*_rho
    const double rc = radius_uniform_convex(params, norm, 0.0, rho, opts).radius;
    const double rs = radius_parabolic_starlike(params, norm, 0.0, rho, opts).radius;
    result.verified =
        (rc < result.radius && result.radius < rs) ? VerifyState::Passed : VerifyState::Failed;
  }
  return result;
}

RadiusResult radius_parabolic_starlike(const MLParams& params, Normalization norm, double eta,
                                       double rho, const SolverOptions& opts) {
  params.validate();
  ProblemSpec prob{ProblemKind::ParabolicStarlike, eta, 0.0, rho};
  prob.validate();
  ensure_admitted(params, opts);

  const double hi = first_zero(params, function_target(norm), opts);
  auto E_ratio = [&](double r) {
    return (1.0 + eta) * ratio_starlike(params, norm, r) - (eta + rho);
  };
  // The printed transcendental form (1+eta) r lambda'(r) - c (rho-1) lambda(r),
  // written through phi and its x-derivative.
  auto E_lambda = [&](double r) -> double {
    if (norm == Normalization::H) {
      const auto p0 = detail::phi_series(params, -r, 0);
      const auto p1 = detail::phi_series(params, -r, 1);
      return static_cast<double>(2.0L * (1.0 - rho) * p0.value -
                                 2.0L * (1.0 + eta) * (long double)r * p1.value);
    }
    const auto p0 = detail::phi_series(params, -r * r, 0);
    const auto p1 = detail::phi_series(params, -r * r, 1);
    const long double c = norm == Normalization::F ? params.beta : 1.0L;
    return static_cast<double>(c * (1.0 - rho) * p0.value -
                               2.0L * (1.0 + eta) * (long double)r * r * p1.value);
  };

  const BisectOut ratio_out = bisect_monotone(E_ratio, 0.0, hi, opts.tol, true);
  const BisectOut lambda_out = bisect_monotone(E_lambda, 0.0, hi, opts.tol, true);
  if (std::fabs(ratio_out.root - lambda_out.root) > 1e-9) {
    throw ConvergenceFailure(
        "parabolic starlike: ratio-form and lambda-form roots disagree by " +
        std::to_string(std::fabs(ratio_out.root - lambda_out.root)));
  }
  BisectOut combined = ratio_out;
  combined.iterations = ratio_out.iterations + lambda_out.iterations;
  return make_result(prob, norm, params, combined, hi, 0);
}

RadiusResult radius_strong_starlike(const MLParams& params, Normalization norm, double rho,
                                    const SolverOptions& opts) {
  params.validate();
  ProblemSpec prob{ProblemKind::StrongStarlike, 0.0, 0.0, rho};
  prob.validate();
  ensure_admitted(params, opts);

  const StrongContext ctx = build_strong_context(params, norm, opts);
  const double s = std::sin(M_PI * rho / 2.0);
  const double stab_tol = 1e-9;
  constexpr int kMaxZeros = 1 << 16;

  double prev_root = -1.0;
  for (int N = 4; N <= kMaxZeros; N *= 2) {
    const BisectOut out = solve_strong_at(ctx, norm, params, s, N, opts.tol);
    if (prev_root >= 0.0 && std::fabs(out.root - prev_root) < stab_tol) {
      const int head = std::min<int>(N, static_cast<int>(ctx.v.size()));
      return make_result(prob, norm, params, out, ctx.hi, head);
    }
    prev_root = out.root;
  }
  throw TailNotConverged("strong starlike: root did not stabilize within 2^16 zeros");
}

RadiusResult radius_starlike(const MLParams& params, Normalization norm, double rho,
                             const SolverOptions& opts) {
  RadiusResult result = radius_parabolic_starlike(params, norm, 0.0, rho, opts);
  result.problem.kind = ProblemKind::Starlike;
  return result;
}

RadiusResult radius_convex(const MLParams& params, Normalization norm, double rho,
                           const SolverOptions& opts) {
  RadiusResult result = radius_uniform_convex(params, norm, 0.0, rho, opts);
  result.problem.kind = ProblemKind::Convex;
  return result;
}

RadiusResult solve_radius(const MLParams& params, Normalization norm, const ProblemSpec& problem,
                          const SolverOptions& opts) {
  problem.validate();
  switch (problem.kind) {
    case ProblemKind::UniformConvex:
      return radius_uniform_convex(params, norm, problem.eta, problem.rho, opts);
    case ProblemKind::AlphaConvex:
      return radius_alpha_convex(params, norm, problem.alpha, problem.rho, opts);
    case ProblemKind::ParabolicStarlike:
      return radius_parabolic_starlike(params, norm, problem.eta, problem.rho, opts);
    case ProblemKind::StrongStarlike:
      return radius_strong_starlike(params, norm, problem.rho, opts);
    case ProblemKind::Starlike:
      return radius_starlike(params, norm, problem.rho, opts);
    case ProblemKind::Convex:
      return radius_convex(params, norm, problem.rho, opts);
  }
  throw DomainError("solve_radius: unknown problem kind");
}

double strong_equation_root(const MLParams& params, Normalization norm, double rho, int n_zeros,
                            const SolverOptions& opts) {
  params.validate();
  ProblemSpec prob{ProblemKind::StrongStarlike, 0.0, 0.0, rho};
  prob.validate();
  if (n_zeros < 1) throw DomainError("strong_equation_root: n_zeros must be >= 1");
  ensure_admitted(params, opts);
  const StrongContext ctx = build_strong_context(params, norm, opts);
  const double s = std::sin(M_PI * rho / 2.0);
  return solve_strong_at(ctx, norm, params, s, n_zeros, opts.tol).root;
}

namespace detail {

double strong_psi_value(const MLParams& params, Normalization norm, double rho, double r,
                        int n_zeros, const SolverOptions& opts) {
  params.validate();
  ProblemSpec prob{ProblemKind::StrongStarlike, 0.0, 0.0, rho};
  prob.validate();
  if (n_zeros < 1) throw DomainError("strong_psi_value: n_zeros must be >= 1");
  if (!(r > 0.0)) throw DomainError("strong_psi_value: r must be positive");
  const StrongContext ctx = build_strong_context(params, norm, opts);
  if (!(r < ctx.hi)) {
    throw DomainError("strong_psi_value: r must stay below the first function zero");
  }
  const int head = std::min<int>(n_zeros, static_cast<int>(ctx.v.size()));
  return strong_psi(ctx, norm, params, std::sin(M_PI * rho / 2.0), r, head,
                    tail_moments(ctx, head));
}

}  // namespace detail

}  // namespace mlradii
