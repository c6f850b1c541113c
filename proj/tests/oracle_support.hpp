#pragma once

// Test-side oracles, kept independent of the library's evaluation path:
// fixed-length extended-precision summation with precomputed coefficients and
// plain bisection on closed forms.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

// 200-term direct summation of d^m/dx^m phi(w,b,g,x) in long double.
// Coefficients via lgammal, no compensation, no stopping rule.
inline long double phi(double w, double b, double g, long double x, int order = 0) {
  const int terms = 200;
  long double sum = 0.0L;
  long double pow_x = 1.0L;
  for (int j = 0; j < terms; ++j) {
    const int k = j + order;
    const long double log_c =
        lgammal((long double)g + k) - lgammal((long double)g) - lgammal((long double)j + 1) -
        lgammal((long double)w * k + b);
    sum += expl(log_c) * pow_x;
    pow_x *= x;
  }
  return sum;
}

inline long double lambda_fn(double w, double b, double g, long double z) {
  return phi(w, b, g, -z * z, 0);
}

inline long double lambda_prime(double w, double b, double g, long double z) {
  return -2.0L * z * phi(w, b, g, -z * z, 1);
}

inline long double lambda_second(double w, double b, double g, long double z) {
  return -2.0L * phi(w, b, g, -z * z, 1) + 4.0L * z * z * phi(w, b, g, -z * z, 2);
}

inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-14) {
  double fa = f(a);
  if ((fa < 0.0) == (f(b) < 0.0)) throw std::runtime_error("oracle::bisect: bad bracket");
  while (b - a > tol) {
    const double m = a + (b - a) / 2.0;
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return a + (b - a) / 2.0;
}

// Fine-grid scan-and-bisect zero finder over the oracle series.
inline std::vector<double> scan_zeros(const std::function<double(double)>& f, double lo,
                                      double hi, double step, int count) {
  std::vector<double> zs;
  double x = lo, fx = f(x);
  while ((int)zs.size() < count && x < hi) {
    const double x2 = x + step;
    const double f2 = f(x2);
    if ((fx < 0.0) != (f2 < 0.0)) zs.push_back(bisect(f, x, x2));
    x = x2;
    fx = f2;
  }
  return zs;
}

// Frozen reference values, computed with 40-digit arithmetic from the series
// definition and the closed-form reductions before the implementation was
// written.
namespace frozen {

// phi(1.5, 1.2, 2.5, -2) and its first two x-derivatives
inline constexpr double phi_152_125_m2 = -0.49413348422694857;
inline constexpr double phi_152_125_m2_d1 = 0.21266561503643281;
inline constexpr double phi_152_125_m2_d2 = 0.37782318564129342;

// z g'/g for (1.5,1,1) at r = 0.5
inline constexpr double star_ratio_15_05 = 0.59101774031312279;

// roots of the sin/cos closed forms
inline constexpr double root_rtanr_1 = 0.86033358901937976;     // r tan r = 1
inline constexpr double root_rtanr_half = 0.65327118709440310;  // r tan r = 1/2
inline constexpr double root_tanr_2r = 1.1655611852072113;      // tan r = 2r
inline constexpr double root_alpha_half = 1.0143789190552171;   // r cot r + 1 - r tan r = 0

// strong starlikeness, rho = 1/2
inline constexpr double strong_g221_rho_half = 1.3783675704981299;
inline constexpr double strong_g221_rho_half_trunc1e5 = 1.3783708817055671;
inline constexpr double strong_g311_rho_half = 1.2958226411194704;
inline constexpr double strong_h211_rho_half = 0.98787117178107944;

// (1.5,1,1): the three real lambda zeros and leading g' zeros
inline constexpr double lam_15[3] = {1.4526792778608254, 3.7101728035661770, 4.9237472275490150};
inline constexpr double gp_15[4] = {0.73685152926257761, 2.4211183732770800, 4.2148562730104046,
                                    5.7341540207366345};

// (3,1,1): lambda zeros, first g' zeros, and radii
inline constexpr double lam_311[5] = {2.5158901228339112, 12.692466548034212, 27.311083231220998,
                                      45.240867903463978, 65.954985950115399};
inline constexpr double gp1_311 = 1.4347537320226557;
inline constexpr double convex_311 = 0.82295578628690493;
inline constexpr double alpha_half_311 = 0.95935573857228346;
inline constexpr double star_rho03_311 = 1.2618094632532186;

// F and H normalization spot values
inline constexpr double ucv_f221 = 1.1699314697651445;       // eta=0, rho=0
inline constexpr double psip_221_1 = 2.0287578381104342;     // first zero of sin z/z + cos z
inline constexpr double star_h211 = 1.1596575823950747;      // = first h' zero
inline constexpr double convex_h211 = 0.55610303635582497;
inline constexpr double convex_ratio_h211_07 = -0.62254097913143682;
inline constexpr double convex_ratio_g211_03 = 0.69620589114854394;
inline constexpr double J_half_g221_r1 = 0.042342445639714236;

// |r cot r - (1 - sum_{n<=200} 2r^2/(n^2 pi^2 - r^2))| at r = 1
inline constexpr double crosscheck_221_r1_n200 = 0.0010106838776321497;

}  // namespace frozen

}  // namespace oracle
