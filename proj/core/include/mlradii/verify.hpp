#pragma once

#include <complex>

#include "mlradii/params.hpp"
#include "mlradii/radii.hpp"
#include "mlradii/zeros.hpp"

namespace mlradii {

/// Membership of w = u + iv in the conic domain
/// R_{eta,rho} = { u + iv : u > eta sqrt((u-1)^2 + v^2) + rho }, strict.
bool conic_membership(double u, double v, double eta, double rho);

struct VerificationReport {
  ProblemSpec problem;
  double radius;
  bool inner_pass;                // condition holds everywhere on |z| = r(1-delta)
  bool outer_fail;                // condition violated somewhere on |z| = r(1+delta)
  double worst_margin_inner;
  double violation_angle_outer;   // radians in (-pi, pi]; NaN if no violation
  int samples;                    // grid points per circle
  double delta;
};

/// Samples the defining inequality of `problem` on the circles
/// |z| = radius (1 -/+ delta) at `grid` angles. Complex ratios are evaluated
/// through the zero-sum expansions, truncated to the available tables and
/// corrected by a tail calibrated against the direct series on the positive
/// real axis. Throws InsufficientZeroTable when the correction's uncertainty
/// exceeds 10% of the observed margin.
VerificationReport verify_radius_geometric(const MLParams& params, Normalization norm,
                                           const ProblemSpec& problem, double radius,
                                           double delta = 1e-3, int grid = 720);

/// Runs verify_radius_geometric and stamps result.verified with the outcome
/// (inner_pass && outer_fail). Never alters the radius.
VerificationReport verify_radius(const MLParams& params, Normalization norm,
                                 RadiusResult& result, double delta = 1e-3, int grid = 720);

/// |direct-series starlike ratio - zero-sum ratio truncated to the table|,
/// at z = r on the positive real axis. Shrinks as the table grows.
double crosscheck_zero_sum(const MLParams& params, Normalization norm, double r,
                           const ZeroTable& fn_zeros);

/// The bound |z/(b-z) - lam z/(a-z)| <= r/(b-r) - lam r/(a-r) for
/// a > b > r = |z|, lam in [0,1], together with its real-part consequences.
bool lemma_inequality_check(double a, double b, double lam, std::complex<double> z);

/// |z|/(theta - |z|) >= Re(z/(theta - z)) for theta > |z|.
bool theta_bound_check(std::complex<double> z, double theta);

/// Whether the disk |w - c| <= Rc lies in the sector |arg w| <= pi rho / 2,
/// by the sufficient condition Rc <= Re(c) sin(pi rho/2) - Im(c) cos(pi rho/2).
/// Requires |arg c| <= pi rho / 2, Im(c) >= 0, Rc >= 0.
bool disk_in_sector_check(std::complex<double> c, double Rc, double rho);

}  // namespace mlradii
