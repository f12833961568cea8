#pragma once

#include <vector>

namespace oscriesz {

// ln Gamma(x) for x > 0, relative error below 1e-13 on [1e-3, 1e6].
double log_gamma(double x);

// Gamma(z+r)/Gamma(z+t) through log-space differences; requires z+r > 0 and
// z+t > 0. Never overflows for z up to 1e6.
double gamma_ratio(double z, double r, double t);

// e^{-z} I_alpha(z) for z >= 0, alpha >= -1/2. Scaling keeps the value finite
// for z up to 1e8. For alpha < 0 the limit z -> 0 diverges; +inf is returned
// at z = 0 in that case.
double bessel_i_scaled(double alpha, double z);

// log(e^{-z} I_alpha(z)) for z > 0; stays finite where the plain value
// underflows (large alpha with small argument).
double log_bessel_i_scaled(double alpha, double z);

// Laguerre polynomial L_k^alpha(x), alpha > -1, by the three-term recurrence
//   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
double laguerre_poly(int k, double alpha, double x);

// Laguerre function of convolution type,
//   l_k^alpha(x) = (2 k! / Gamma(k+alpha+1))^{1/2} L_k^alpha(x^2) e^{-x^2/2},
// orthonormal in L^2(R_+, x^{2 alpha + 1} dx). The normalization is folded
// into the recurrence so no individual factor can overflow.
double laguerre_fn(int k, double alpha, double x);

// All of l_0^alpha(x) .. l_kmax^alpha(x) in one recurrence pass.
std::vector<double> laguerre_fn_seq(int kmax, double alpha, double x);

// d/dx l_k^alpha(x), computed from dL_k^alpha(u)/du = -L_{k-1}^{alpha+1}(u)
// on the unnormalized polynomials (an independent route from laguerre_fn).
double laguerre_fn_deriv(int k, double alpha, double x);

// Normalized Hermite function h_k(x) = (sqrt(pi) 2^k k!)^{-1/2} H_k(x) e^{-x^2/2}.
double hermite_fn(int k, double x);

// h_0(x) .. h_kmax(x) in one pass.
std::vector<double> hermite_fn_seq(int kmax, double x);

// d/dx h_k(x) via the Hermite polynomial route H_k' = 2k H_{k-1}
// (independent of the normalized recurrence used by hermite_fn).
double hermite_fn_deriv(int k, double x);

}  // namespace oscriesz
