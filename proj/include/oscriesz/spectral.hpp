#pragma once

#include <functional>
#include <vector>

#include "oscriesz/quadrature.hpp"

namespace oscriesz {

// Coefficients c_k = <f, l_k^alpha> of a radial function in the Laguerre
// basis of order alpha, truncated at K = c.size() - 1. Parseval:
// sum c_k^2 <= ||f||^2 in L^2(d mu_alpha).
struct ExpansionCoeffs {
  double alpha = 0.0;
  std::vector<double> c;

  int order() const { return static_cast<int>(c.size()) - 1; }
};

// Twist data u_j(x) = x^{a j}; requires a >= 1 so alpha + a j stays >= -1/2
// whenever the base order does.
struct TwistParams {
  double a = 1.0;
  int j = 0;

  double power() const { return a * j; }
};

enum class TwistedOp { riesz, angular };

ExpansionCoeffs project(const std::function<double(double)>& f, double alpha,
                        int K, const QuadratureRule& rule);

double synthesize(const ExpansionCoeffs& coeffs, double x);

// c_k -> e^{-t(4k+2a+2)} c_k, t > 0.
ExpansionCoeffs heat_apply(const ExpansionCoeffs& coeffs, double t);

// c_k -> (4k+2a+2)^{-sigma} c_k, sigma > 0.
ExpansionCoeffs fractional_integral(const ExpansionCoeffs& coeffs,
                                    double sigma);

// Laguerre heat kernel, closed form
//   G_{a,t}(x,y) = (sinh 2t)^{-1} e^{-coth(2t)(x^2+y^2)/2} (xy)^{-a}
//                  I_a(xy / sinh 2t),
// with the Bessel scaling fused into the exponent so nothing overflows.
double heat_kernel_closed(double alpha, double t, double x, double y);

// Truncated spectral series sum_{k<=K} e^{-t(4k+2a+2)} l_k(x) l_k(y); the
// K <= 0 overload picks K so that the dropped tail is below 1e-14.
double heat_kernel_spectral(double alpha, double t, double x, double y,
                            int K = 0);

// Riesz image: the input expansion mapped onto the orthonormal basis
// {x l_k^{alpha+1}}_{k >= 0} with output coefficient at k equal to
// -2 sqrt((k+1)/(4(k+1)+2 alpha+2)) c_{k+1}; the k = 0 input is annihilated.
struct RieszImageCoeffs {
  double alpha;  // order of the image basis is alpha + 1
  std::vector<double> d;
};

RieszImageCoeffs riesz_apply(const ExpansionCoeffs& coeffs);
double synthesize_riesz(const RieszImageCoeffs& image, double x);

// (1/x) L_alpha^{-1/2} f evaluated at x.
double angular_apply(const ExpansionCoeffs& coeffs, double x);

// u_j(x) Op^{alpha + a j}(u_j^{-1} f)(x), projecting u_j^{-1} f in the
// shifted basis; the angular variant carries the extra factor j.
double twisted_apply(TwistedOp op, double alpha, const TwistParams& tw,
                     const std::function<double(double)>& f, double x, int K);

}  // namespace oscriesz
