#pragma once

#include "oscriesz/quadrature.hpp"
#include "oscriesz/spectral.hpp"

namespace oscriesz {

// Signed magnitude carried in log space; kernel quadratures combine terms
// spanning hundreds of orders of magnitude before the final (bounded) value
// emerges, so plain doubles would over/underflow half way through.
struct LogVal {
  double log_abs = -1e300;
  double sign = 0.0;

  double value() const;
  LogVal scaled(double log_factor, double sign_factor = 1.0) const;
  static LogVal from_value(double v);
};

LogVal logval_add(const LogVal& a, const LogVal& b);

struct QPair {
  double q_plus, q_minus;

  // q_pm = x^2 + y^2 +- 2xys
  static QPair at(double x, double y, double s) {
    const double sq = x * x + y * y;
    return {sq + 2.0 * x * y * s, sq - 2.0 * x * y * s};
  }
};

// beta_a(xi) = sqrt(2/pi) ((1-xi^2)/(2 xi))^{1+a} (1-xi^2)^{-1}
//              (log((1+xi)/(1-xi)))^{-1/2} on (0, 1).
double beta_fn(double alpha, double xi);
double log_beta_fn(double alpha, double xi);

// Inner xi-integral
//   int_0^1 xi^{-k} (sum_p c_p xi^p) beta_m(xi) e^{-q_plus/(4 xi)}
//           [e^{-xi q_minus / 4}] dxi
// evaluated on two exponentially fitted panels: xi = q_plus/(4v) on (0, 1/2]
// (Gauss-Laguerre in the shifted exponent) and w = -log(1 - xi^2) on
// (1/2, 1) (Gauss-Laguerre in (m+1) w, which absorbs the endpoint
// singularity of beta). Laurent coefficients c[p+2], p = -2..2.
struct XiIntegrand {
  double c[5] = {0.0, 0.0, 1.0, 0.0, 0.0};
  double k_extra = 0.0;    // additional xi^{-k} power
  double q_minus = -1.0;   // < 0 disables the e^{-xi q_minus/4} factor
};

LogVal xi_integral(double m, double q_plus, const XiIntegrand& fi, int n_xi);

// The s-integral against Pi_m(ds) has a linear exponent and is evaluated in
// closed form through scaled Bessel functions (the Schlaefli identity read
// backwards); only the xi-integral is quadrature.
struct KernelQuad {
  int n_xi = 48;       // Gauss-Laguerre nodes per xi panel
  bool refine = true;  // double the count once for the error estimate
};

struct KernelEval {
  double value = 0.0;
  double est_abs_error = 0.0;
};

struct KernelGrad {
  KernelEval ddx, ddy;
};

// Twisted Riesz kernel (xy)^{aj} R^{alpha+aj}(x, y) for x != y:
//   (xy)^{aj} int_{-1}^{1} int_0^1 beta_m(xi)
//       (x - (x+ys)/(2 xi) - xi (x-ys)/2) e^{-q_+/(4 xi) - xi q_-/4}
//       dxi Pi_m(ds),   m = alpha + a j.
KernelEval riesz_kernel(double alpha, const TwistParams& tw, double x,
                        double y, const KernelQuad& kq = {});

// Analytic x- and y-derivatives of the twisted kernel (product rule on the
// twist plus differentiation under the integral sign).
KernelGrad riesz_kernel_grad(double alpha, const TwistParams& tw, double x,
                             double y, const KernelQuad& kq = {});

// Twisted angular kernel j (xy)^{aj} T^{alpha+aj}(x, y) with
//   T^m(x, y) = (1/x) int_0^1 beta_m(xi) int_{-1}^{1}
//               e^{-q_+/(4 xi) - xi q_-/4} Pi_m(ds) dxi.
KernelEval angular_kernel(double alpha, const TwistParams& tw, double x,
                          double y, const KernelQuad& kq = {});

KernelGrad angular_kernel_grad(double alpha, const TwistParams& tw, double x,
                               double y, const KernelQuad& kq = {});

// LHS/RHS of the single-integral estimate
//   int_0^1 xi^{-k} beta_m(xi) e^{-q_+/(4 xi)} dxi
//     <= C_k 2^m Gamma(m+k+1/2) / q_+^{m+k+1/2};
// requires m >= -1/2 and k+m > -1/2.
double lemma_a_check(double k, double m, double q_plus);

// LHS/RHS of
//   int_0^1 (1-s)^{c+d-1/2} (A-Bs)^{-(c+d+lambda+1/2)} ds
//     <= C(d) / (A^{c+1/2} B^d (A-B)^lambda),
// C(d) = Gamma(d) Gamma(lambda) / Gamma(d+lambda) for d > 0, else 1.
// Requires 0 < B < A, lambda > 0, d >= 0 and c+d > -1/2 (integrability).
double lemma0_check(double c, double A, double B, double lambda, double d);

// LHS/RHS of the double-integral estimate
//   I_k <= C / ((x+y)^{2 alpha + 1} (xy)^{aj} |x-y|^{2k}),
//   I_k = int int xi^{-k} beta_{alpha+aj}(xi) e^{-q_+/(4 xi)} dxi Pi(ds).
double lemma_breve_check(double alpha, double a, int j, double k, double x,
                         double y);

}  // namespace oscriesz
