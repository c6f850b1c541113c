#pragma once

#include <functional>
#include <vector>

#include "mlradii/params.hpp"

namespace mlradii {

/// Which function's positive real zeros a table holds, all in terms of
/// lambda(z) = phi(omega,beta,gamma,-z^2):
///   LambdaZeros    zeros of lambda (zeros of f and g up to normalization)
///   PsiPrimeZeros  zeros of Psi' with the z^(beta-1) factor stripped,
///                  i.e. of beta*lambda(z) + z*lambda'(z)
///   GPrimeZeros    zeros of g', i.e. of lambda(z) + z*lambda'(z)
///   HPrimeZeros    zeros of h'(z) ~ phi(-z) - z phi'(-z)
///   HFunctionZeros zeros of phi(omega,beta,gamma,-r): the squares of the
///                  lambda zeros
enum class ZeroTarget {
  LambdaZeros,
  PsiPrimeZeros,
  GPrimeZeros,
  HPrimeZeros,
  HFunctionZeros,
};

const char* to_string(ZeroTarget t);

struct ZeroTable {
  MLParams params;
  ZeroTarget target;
  std::vector<double> zeros;  // strictly increasing, positive
  double per_zero_tol;
};

struct Bracket {
  double lo;
  double hi;
};

struct ScanPolicy {
  double step;                     // initial scan step
  double min_step_factor = 1e-4;   // tangency refinement floor, relative to step
  double tangency_ratio = 0.02;    // |f| dip below this fraction of the local scale
  double noise_floor = 0.0;        // |f| below this is indistinguishable from 0
};

/// Brackets plus the locations where |f| dipped near zero without a sign
/// change surviving refinement (possible complex pair / double root).
struct ScanOutcome {
  std::vector<Bracket> brackets;
  std::vector<double> suspicious;
};

/// Walks [lo, hi] with adaptive step halving near suspected tangencies and
/// returns every sign-change bracket in order.
ScanOutcome scan_brackets(const std::function<double(double)>& f, double lo, double hi,
                          const ScanPolicy& policy);

/// Bisection to within tol on a sign-change bracket. Throws InvalidBracket
/// if the endpoint signs agree.
double refine_root(const std::function<double(double)>& f, Bracket bracket, double tol);

/// The first `count` positive zeros of the chosen target. Each returned zero
/// carries a verified sign change across [z - 10 tol, z + 10 tol] and a
/// position uncertainty (evaluation error over local slope) below tol.
///
/// Requires (1/omega, beta) in W_i unless assume_real_zeros is set. A
/// near-zero |f| minimum without sign change raises ZeroRealityViolation;
/// exhausting the scan window or the series' precision raises NonConvergence.
ZeroTable zeros_of(const MLParams& params, ZeroTarget target, int count,
                   double per_zero_tol = 1e-11, bool assume_real_zeros = false);

/// true iff deriv_zeros[0] < fn_zeros[0] and the tables keep alternating
/// fn[n] < deriv[n+1] < fn[n+1] for every entry both tables cover.
bool check_interlacing(const ZeroTable& fn_zeros, const ZeroTable& deriv_zeros);

/// Asymptotic model z_n ~ scale * (n + offset)^power fitted to the tail of a
/// zero table (n is 1-based). Used to extend truncated zero sums.
struct ZeroAsymptote {
  double scale = 0;
  double offset = 0;
  double power = 0;
  bool valid = false;
  double fit_residual = 0;  // worst relative misfit over the fitted range

  double operator()(int n) const;
};

ZeroAsymptote fit_zero_asymptote(const std::vector<double>& zeros);

namespace detail {

/// Like zeros_of but stops early at the series' precision wall instead of
/// throwing, returning however many validated zeros fit (at least min_count,
/// else it throws like zeros_of).
ZeroTable zeros_up_to(const MLParams& params, ZeroTarget target, int max_count,
                      int min_count, double per_zero_tol, bool assume_real_zeros);

}  // namespace detail

}  // namespace mlradii
