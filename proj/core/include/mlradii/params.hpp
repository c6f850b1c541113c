#pragma once

namespace mlradii {

/// Parameter triple (omega, beta, gamma) of the generalized Mittag-Leffler
/// function phi(omega, beta, gamma, x) = sum_k (gamma)_k x^k / (k! Gamma(omega k + beta)).
struct MLParams {
  double omega;
  double beta;
  double gamma;

  /// Throws DomainError unless all three parameters are finite and positive.
  void validate() const;
};

/// The three normalized functions built from phi.
///   F : z -> (z^beta Gamma(beta) phi(omega,beta,gamma,-z^2))^(1/beta)
///   G : z -> z Gamma(beta) phi(omega,beta,gamma,-z^2)
///   H : z -> z Gamma(beta) phi(omega,beta,gamma,-z)
enum class Normalization { F, G, H };

const char* to_string(Normalization n);

/// Outcome of a series evaluation. est_error bounds the absolute error
/// (rounding accumulated term by term plus a tail bound of twice the last
/// included term).
struct EvalResult {
  double value;
  double est_error;
  int terms_used;
};

}  // namespace mlradii
