#pragma once

#include "mlradii/params.hpp"

namespace mlradii {

enum class ProblemKind {
  UniformConvex,      // Re(1+zf''/f') > eta |zf''/f'| + rho
  AlphaConvex,        // Re J(alpha, f) > rho
  ParabolicStarlike,  // Re(zf'/f) > eta |zf'/f - 1| + rho
  StrongStarlike,     // |arg(zf'/f)| < pi rho / 2
  Starlike,           // Re(zf'/f) > rho
  Convex,             // Re(1+zf''/f') > rho
};

const char* to_string(ProblemKind k);

struct ProblemSpec {
  ProblemKind kind;
  double eta = 0.0;    // UniformConvex, ParabolicStarlike
  double alpha = 0.0;  // AlphaConvex
  double rho = 0.0;

  /// Enforces the per-kind parameter ranges: eta >= 0, alpha >= 0,
  /// rho in [0,1) everywhere except StrongStarlike which needs rho in (0,1].
  void validate() const;
};

enum class VerifyState { Unverified, Passed, Failed };

const char* to_string(VerifyState v);

struct RadiusResult {
  ProblemSpec problem;
  Normalization norm;
  MLParams params;
  double radius;
  double bracket_lo;  // proven bracket: equation positive at lo side,
  double bracket_hi;  // negative at hi side (reversed for StrongStarlike)
  double residual;    // equation value at radius
  int iterations;
  int zeros_used;     // strong-starlike sums only, 0 otherwise
  VerifyState verified;
};

struct SolverOptions {
  double tol = 1e-10;             // radius bracket tolerance
  double zero_tol = 1e-11;        // per-zero tolerance for bracket endpoints
  bool assume_real_zeros = false; // skip the W_i admission check
  int max_c_depth = 64;           // W_i search depth
};

/// Smallest positive root of 1 - rho + (1+eta) r u''(r)/u'(r) = 0 (with the
/// Psi-based form for F) on (0, first derivative zero).
RadiusResult radius_uniform_convex(const MLParams& params, Normalization norm,
                                   double eta, double rho, const SolverOptions& opts = {});

/// Smallest positive root of J(alpha, u)(r) = rho. Bracket (0, first
/// derivative zero) for alpha > 0 and (0, first function zero) for alpha = 0.
/// For alpha in (0,1) the sandwich r^c_rho < r < r*_rho is checked and
/// recorded in `verified`.
RadiusResult radius_alpha_convex(const MLParams& params, Normalization norm,
                                 double alpha, double rho, const SolverOptions& opts = {});

/// Smallest positive root of (1+eta) r lambda'(r) - beta(rho-1) lambda(r) = 0
/// (and its G/H analogues). Solved in the equivalent ratio form
/// (1+eta) zu'/u - (eta+rho) = 0 as well; the two roots must agree to 1e-9.
RadiusResult radius_parabolic_starlike(const MLParams& params, Normalization norm,
                                       double eta, double rho, const SolverOptions& opts = {});

/// Unique root of the strong-starlikeness equation psi(r) = 0 built from the
/// zero sums over lambda_n. The head of the sum runs over explicitly computed
/// zeros and the remainder expands against the exact Rayleigh power sums
/// sum_n lambda_n^(-2m) (Newton's identities on the series coefficients); the
/// head count doubles until consecutive roots agree, with zeros_used
/// recording the zeros summed explicitly at termination. rho must lie in
/// (0, 1].
RadiusResult radius_strong_starlike(const MLParams& params, Normalization norm,
                                    double rho, const SolverOptions& opts = {});

/// Starlike of order rho: parabolic starlike with eta = 0.
RadiusResult radius_starlike(const MLParams& params, Normalization norm, double rho,
                             const SolverOptions& opts = {});

/// Convex of order rho: uniform convex with eta = 0.
RadiusResult radius_convex(const MLParams& params, Normalization norm, double rho,
                           const SolverOptions& opts = {});

/// Dispatch on problem.kind.
RadiusResult solve_radius(const MLParams& params, Normalization norm,
                          const ProblemSpec& problem, const SolverOptions& opts = {});

/// Root of the strong-starlike equation truncated at exactly n_zeros terms
/// (plus tail correction), without the stabilization loop. Exposed so the
/// N vs 2N agreement at termination can be audited.
double strong_equation_root(const MLParams& params, Normalization norm, double rho,
                            int n_zeros, const SolverOptions& opts = {});

namespace detail {

/// Value of the strong-starlikeness equation psi at r (truncated at n_zeros
/// with tail correction). psi < 0 certifies the disk-in-sector condition at
/// radius r; the theorem's radius is psi's unique root.
double strong_psi_value(const MLParams& params, Normalization norm, double rho, double r,
                        int n_zeros, const SolverOptions& opts = {});

}  // namespace detail

}  // namespace mlradii
