#include "mlradii/verify.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mlradii/errors.hpp"
#include "mlradii/ratios.hpp"
#include "mlradii/series.hpp"

namespace mlradii {

bool conic_membership(double u, double v, double eta, double rho) {
  if (!(eta >= 0.0) || !(rho >= 0.0 && rho < 1.0)) {
    throw DomainError("conic_membership: requires eta >= 0 and rho in [0,1)");
  }
  return u > eta * std::hypot(u - 1.0, v) + rho;
}

namespace {

using cplx = std::complex<double>;

constexpr int kModelZeros = 48;   // truncated sum length (real zeros + fitted extension)
constexpr int kRealZeroCap = 12;  // validated zeros requested before extending

// One truncated zero sum: T(z) = sum_{n<=K} 2 z^2/(v_n - z^2) (quadratic kind,
// v_n the squared z-plane zeros) or sum_{n<=K} z/(v_n - z) (linear kind, for
// the H normalization whose expansions run over lambda_n^2 in the h variable).
struct ZeroSum {
  std::vector<double> v;
  bool quadratic;
  double v_next;  // fitted v_{K+1}, for the truncation uncertainty bound

  cplx eval(cplx z) const {
    const cplx z2 = quadratic ? z * z : z;
    cplx total = 0.0;
    for (double vn : v) total += (quadratic ? 2.0 : 1.0) * z2 / (vn - z2);
    return total;
  }
  double eval_real(double r) const {
    const double r2 = quadratic ? r * r : r;
    long double total = 0.0L;
    for (double vn : v) total += (quadratic ? 2.0L : 1.0L) * r2 / (vn - r2);
    return static_cast<double>(total);
  }
  // The calibrated tail scales like z^2 (resp. z); the leftover error on
  // |z| = r is bounded by the tail's next-order moment.
  double shape_error_factor(double r) const {
    const double y = quadratic ? r * r : r;
    return 2.0 * y / (v_next - y);
  }
};

// square_entries: the sum runs over the squares of the tabulated zeros (the
// H-normalization's function sums run over lambda_n^2, taken from the deeper
// lambda ladder rather than the h-variable table).
ZeroSum build_sum(const MLParams& p, ZeroTarget target, bool quadratic, double zero_tol,
                  bool square_entries = false) {
  const ZeroTable table =
      detail::zeros_up_to(p, target, kRealZeroCap, 3, zero_tol, true);
  const ZeroAsymptote fit = fit_zero_asymptote(table.zeros);
  std::vector<double> zs = table.zeros;
  if (fit.valid) {
    for (int n = static_cast<int>(zs.size()) + 1; n <= kModelZeros; ++n) zs.push_back(fit(n));
  }
  if (square_entries) {
    for (double& z : zs) z = z * z;
  }
  ZeroSum sum;
  sum.quadratic = quadratic;
  sum.v.reserve(zs.size());
  for (double z : zs) sum.v.push_back(quadratic ? z * z : z);
  const int next_n = static_cast<int>(zs.size()) + 1;
  double z_next;
  if (fit.valid) {
    z_next = fit(next_n);
    if (square_entries) z_next *= z_next;
  } else {
    // without a fit, place the next zero one spacing beyond the table
    z_next = zs.back() + (zs.back() - zs[zs.size() - 2]);
  }
  sum.v_next = quadratic ? z_next * z_next : z_next;
  return sum;
}

// Boundary evaluator for z u'/u and 1 + z u''/u' on a circle |z| = rbar.
// Each ratio is a constant minus weighted zero sums; the truncation deficit is
// measured against the direct series on the positive real axis and re-applied
// with the tail's leading z-shape.
class BoundaryRatios {
 public:
  BoundaryRatios(const MLParams& p, Normalization norm, double rbar, bool need_star,
                 bool need_convex, double zero_tol)
      : params_(p), norm_(norm), rbar_(rbar) {
    const bool quad = norm != Normalization::H;
    if (need_star || (need_convex && norm == Normalization::F)) {
      // H runs its linear sums over lambda_n^2, sourced from the deeper
      // lambda ladder
      if (norm == Normalization::H) {
        fn_sum_ = build_sum(p, ZeroTarget::LambdaZeros, false, zero_tol,
                            /*square_entries=*/true);
      } else {
        fn_sum_ = build_sum(p, function_target(), quad, zero_tol);
      }
    }
    if (need_star) {
      star_coef_ = norm == Normalization::F ? 1.0 / p.beta : 1.0;
      const double trunc = 1.0 - star_coef_ * fn_sum_.eval_real(rbar);
      star_deficit_ = ratio_starlike(p, norm, rbar) - trunc;
      star_uncertainty_ = std::fabs(star_deficit_) * fn_sum_.shape_error_factor(rbar) * 2.0;
      has_star_ = true;
    }
    if (need_convex) {
      deriv_sum_ = build_sum(p, derivative_target(), quad, zero_tol);
      fn_conv_coef_ = norm == Normalization::F ? 1.0 / p.beta - 1.0 : 0.0;
      double trunc = 1.0 - deriv_sum_.eval_real(rbar);
      if (fn_conv_coef_ != 0.0) trunc -= fn_conv_coef_ * fn_sum_.eval_real(rbar);
      convex_deficit_ = ratio_convex(p, norm, rbar) - trunc;
      double shape = deriv_sum_.shape_error_factor(rbar);
      if (fn_conv_coef_ != 0.0) shape = std::max(shape, fn_sum_.shape_error_factor(rbar));
      convex_uncertainty_ = std::fabs(convex_deficit_) * shape * 2.0;
      has_convex_ = true;
    }
  }

  cplx star(cplx z) const {
    return 1.0 - star_coef_ * fn_sum_.eval(z) + star_deficit_ * shape(z);
  }

  cplx convex(cplx z) const {
    cplx value = 1.0 - deriv_sum_.eval(z) + convex_deficit_ * shape(z);
    if (fn_conv_coef_ != 0.0) value -= fn_conv_coef_ * fn_sum_.eval(z);
    return value;
  }

  cplx J(double alpha, cplx z) const {
    if (alpha == 0.0) return star(z);
    if (alpha == 1.0) return convex(z);
    return (1.0 - alpha) * star(z) + alpha * convex(z);
  }

  double uncertainty() const {
    return (has_star_ ? star_uncertainty_ : 0.0) + (has_convex_ ? convex_uncertainty_ : 0.0);
  }

 private:
  ZeroTarget function_target() const {
    return norm_ == Normalization::H ? ZeroTarget::HFunctionZeros : ZeroTarget::LambdaZeros;
  }
  ZeroTarget derivative_target() const {
    switch (norm_) {
      case Normalization::F: return ZeroTarget::PsiPrimeZeros;
      case Normalization::G: return ZeroTarget::GPrimeZeros;
      case Normalization::H: return ZeroTarget::HPrimeZeros;
    }
    throw DomainError("unknown normalization");
  }
  cplx shape(cplx z) const {
    // leading angular shape of the truncated tail: z^2/rbar^2 (z/rbar for H)
    if (norm_ == Normalization::H) return z / rbar_;
    return (z * z) / (rbar_ * rbar_);
  }

  MLParams params_;
  Normalization norm_;
  double rbar_;
  ZeroSum fn_sum_, deriv_sum_;
  double star_coef_ = 1.0, fn_conv_coef_ = 0.0;
  double star_deficit_ = 0.0, convex_deficit_ = 0.0;
  double star_uncertainty_ = 0.0, convex_uncertainty_ = 0.0;
  bool has_star_ = false, has_convex_ = false;
};

double margin_of(const ProblemSpec& prob, const BoundaryRatios& model, cplx z) {
  switch (prob.kind) {
    case ProblemKind::UniformConvex: {
      const cplx w = model.convex(z);
      return w.real() - prob.eta * std::abs(w - 1.0) - prob.rho;
    }
    case ProblemKind::Convex:
      return model.convex(z).real() - prob.rho;
    case ProblemKind::AlphaConvex:
      return model.J(prob.alpha, z).real() - prob.rho;
    case ProblemKind::ParabolicStarlike: {
      const cplx w = model.star(z);
      return w.real() - prob.eta * std::abs(w - 1.0) - prob.rho;
    }
    case ProblemKind::Starlike:
      return model.star(z).real() - prob.rho;
    case ProblemKind::StrongStarlike:
      return M_PI * prob.rho / 2.0 - std::fabs(std::arg(model.star(z)));
  }
  throw DomainError("unknown problem kind");
}

}  // namespace

VerificationReport verify_radius_geometric(const MLParams& params, Normalization norm,
                                           const ProblemSpec& problem, double radius,
                                           double delta, int grid) {
  params.validate();
  problem.validate();
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("verify_radius_geometric: radius must be a finite positive real");
  }
  if (!(delta > 0.0 && delta < 0.5)) {
    throw DomainError("verify_radius_geometric: delta must lie in (0, 0.5)");
  }
  if (grid < 8) throw DomainError("verify_radius_geometric: grid must be >= 8");

  const bool need_star = problem.kind == ProblemKind::ParabolicStarlike ||
                         problem.kind == ProblemKind::Starlike ||
                         problem.kind == ProblemKind::StrongStarlike ||
                         (problem.kind == ProblemKind::AlphaConvex && problem.alpha != 1.0);
  const bool need_convex = problem.kind == ProblemKind::UniformConvex ||
                           problem.kind == ProblemKind::Convex ||
                           (problem.kind == ProblemKind::AlphaConvex && problem.alpha != 0.0);

  VerificationReport report;
  report.problem = problem;
  report.radius = radius;
  report.samples = grid;
  report.delta = delta;
  report.violation_angle_outer = std::nan("");

  double tail_uncertainty = 0.0;
  double worst_abs_margin = INFINITY;

  for (int side = 0; side < 2; ++side) {
    const double r = side == 0 ? radius * (1.0 - delta) : radius * (1.0 + delta);

    if (side == 1 && problem.kind == ProblemKind::StrongStarlike) {
      // The strong-starlike radius is a disk-in-sector certificate: the
      // sampled |arg| need not exceed the sector just outside it. The outer
      // check therefore tests the certificate equation itself, whose value
      // psi increases through zero exactly at the radius. The bounding disk
      // touches the sector along the direction where the paper's inequality
      // is tight, which is the positive real axis.
      const double psi = detail::strong_psi_value(params, norm, problem.rho, r, 4096);
      report.outer_fail = psi > 0.0;
      if (report.outer_fail) report.violation_angle_outer = 0.0;
      worst_abs_margin = std::min(worst_abs_margin, std::fabs(psi));
      continue;
    }

    const BoundaryRatios model(params, norm, r, need_star, need_convex, 1e-9);
    tail_uncertainty = std::max(tail_uncertainty, model.uncertainty());

    double worst = INFINITY;
    double worst_angle = 0.0;
    for (int j = 0; j < grid; ++j) {
      const double theta = 2.0 * M_PI * j / grid;
      const cplx z = std::polar(r, theta);
      const double m = margin_of(problem, model, z);
      if (m < worst) {
        worst = m;
        worst_angle = theta > M_PI ? theta - 2.0 * M_PI : theta;
      }
    }
    if (side == 0) {
      report.worst_margin_inner = worst;
      report.inner_pass = worst >= 0.0;
    } else {
      report.outer_fail = worst < 0.0;
      if (report.outer_fail) report.violation_angle_outer = worst_angle;
    }
    worst_abs_margin = std::min(worst_abs_margin, std::fabs(worst));
  }

  if (tail_uncertainty > 0.1 * worst_abs_margin) {
    throw InsufficientZeroTable(
        "verify_radius_geometric: zero-sum tail uncertainty " +
        std::to_string(tail_uncertainty) + " exceeds 10% of the observed margin " +
        std::to_string(worst_abs_margin));
  }
  return report;
}

VerificationReport verify_radius(const MLParams& params, Normalization norm,
                                 RadiusResult& result, double delta, int grid) {
  VerificationReport report =
      verify_radius_geometric(params, norm, result.problem, result.radius, delta, grid);
  const bool ok = report.inner_pass && report.outer_fail;
  if (result.verified == VerifyState::Failed) {
    // keep an earlier failure (e.g. the alpha-convexity sandwich)
  } else {
    result.verified = ok ? VerifyState::Passed : VerifyState::Failed;
  }
  return report;
}

double crosscheck_zero_sum(const MLParams& params, Normalization norm, double r,
                           const ZeroTable& fn_zeros) {
  params.validate();
  const ZeroTarget expected =
      norm == Normalization::H ? ZeroTarget::HFunctionZeros : ZeroTarget::LambdaZeros;
  if (fn_zeros.target != expected) {
    throw DomainError("crosscheck_zero_sum: table target does not match the normalization");
  }
  const double direct = ratio_starlike(params, norm, r);

  long double sum = 0.0L;
  if (norm == Normalization::H) {
    for (double v : fn_zeros.zeros) sum += (long double)r / (v - r);
  } else {
    const long double r2 = (long double)r * r;
    for (double z : fn_zeros.zeros) sum += 2.0L * r2 / ((long double)z * z - r2);
  }
  const double coef = norm == Normalization::F ? 1.0 / params.beta : 1.0;
  const double truncated = 1.0 - coef * static_cast<double>(sum);
  return std::fabs(direct - truncated);
}

bool lemma_inequality_check(double a, double b, double lam, std::complex<double> z) {
  const double r = std::abs(z);
  if (!(a > b && b > r) || !(lam >= 0.0 && lam <= 1.0)) {
    throw DomainError("lemma_inequality_check: requires a > b > |z| and lambda in [0,1]");
  }
  const double slack = 1e-12 * (1.0 + std::fabs(a) + std::fabs(b));
  const cplx lhs = z / (b - z) - lam * z / (a - z);
  const double rhs = r / (b - r) - lam * r / (a - r);
  if (std::abs(lhs) > rhs + slack) return false;                    // (uc1)
  if (lhs.real() > rhs + slack) return false;                       // (uc2)
  const cplx zb = z / (b - z);
  if (zb.real() > std::abs(zb) + slack) return false;               // (uc3) first half
  if (std::abs(zb) > r / (b - r) + slack) return false;             // (uc3) second half
  return true;
}

bool theta_bound_check(std::complex<double> z, double theta) {
  const double r = std::abs(z);
  if (!(theta > r)) throw DomainError("theta_bound_check: requires theta > |z|");
  const double slack = 1e-12 * (1.0 + std::fabs(theta));
  return r / (theta - r) >= (z / (theta - z)).real() - slack;
}

bool disk_in_sector_check(std::complex<double> c, double Rc, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw DomainError("disk_in_sector_check: requires rho in (0,1]");
  }
  if (!(Rc >= 0.0)) throw DomainError("disk_in_sector_check: requires Rc >= 0");
  if (c.imag() < 0.0) throw DomainError("disk_in_sector_check: requires Im(c) >= 0");
  const double half_angle = M_PI * rho / 2.0;
  if (std::fabs(std::arg(c)) > half_angle) {
    throw DomainError("disk_in_sector_check: center must satisfy |arg c| <= pi rho / 2");
  }
  return Rc <= c.real() * std::sin(half_angle) - c.imag() * std::cos(half_angle);
}

}  // namespace mlradii
