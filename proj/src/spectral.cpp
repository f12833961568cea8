#include "oscriesz/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "oscriesz/specfun.hpp"

namespace oscriesz {

ExpansionCoeffs project(const std::function<double(double)>& f, double alpha,
                        int K, const QuadratureRule& rule) {
  if (K < 0) throw std::domain_error("project: K must be >= 0");
  ExpansionCoeffs out;
  out.alpha = alpha;
  out.c.assign(static_cast<std::size_t>(K) + 1, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double wf = rule.weights[i] * f(x);
    if (wf == 0.0) continue;
    const std::vector<double> lk = laguerre_fn_seq(K, alpha, x);
    for (int k = 0; k <= K; ++k)
      out.c[static_cast<std::size_t>(k)] += wf * lk[static_cast<std::size_t>(k)];
  }
  return out;
}

double synthesize(const ExpansionCoeffs& coeffs, double x) {
  const int K = coeffs.order();
  if (K < 0) return 0.0;
  const std::vector<double> lk = laguerre_fn_seq(K, coeffs.alpha, x);
  double s = 0.0;
  for (int k = 0; k <= K; ++k)
    s += coeffs.c[static_cast<std::size_t>(k)] * lk[static_cast<std::size_t>(k)];
  return s;
}

ExpansionCoeffs heat_apply(const ExpansionCoeffs& coeffs, double t) {
  if (!(t > 0.0)) throw std::domain_error("heat_apply: t must be positive");
  ExpansionCoeffs out = coeffs;
  for (int k = 0; k <= coeffs.order(); ++k)
    out.c[static_cast<std::size_t>(k)] *=
        std::exp(-t * (4.0 * k + 2.0 * coeffs.alpha + 2.0));
  return out;
}

ExpansionCoeffs fractional_integral(const ExpansionCoeffs& coeffs,
                                    double sigma) {
  if (!(sigma > 0.0))
    throw std::domain_error("fractional_integral: sigma must be positive");
  ExpansionCoeffs out = coeffs;
  for (int k = 0; k <= coeffs.order(); ++k)
    out.c[static_cast<std::size_t>(k)] *=
        std::pow(4.0 * k + 2.0 * coeffs.alpha + 2.0, -sigma);
  return out;
}

double heat_kernel_closed(double alpha, double t, double x, double y) {
  if (!(t > 0.0) || !(x > 0.0) || !(y > 0.0))
    throw std::domain_error("heat_kernel_closed: t, x, y must be positive");
  const double sh = std::sinh(2.0 * t);
  const double ch = std::cosh(2.0 * t);
  const double z = x * y / sh;
  // coth(2t)(x^2+y^2)/2 - z = ((x-y)^2 + (ch-1)(x^2+y^2)) / (2 sh), all
  // nonnegative pieces, so the fused exponent never cancels.
  const double expo =
      -((x - y) * (x - y) + (ch - 1.0) * (x * x + y * y)) / (2.0 * sh);
  const double logpre =
      -std::log(sh) - alpha * std::log(x * y) + std::log(bessel_i_scaled(alpha, z));
  return std::exp(logpre + expo);
}

double heat_kernel_spectral(double alpha, double t, double x, double y,
                            int K) {
  if (!(t > 0.0)) throw std::domain_error("heat_kernel_spectral: t <= 0");
  if (K <= 0) K = static_cast<int>(std::ceil(14.0 * std::log(10.0) / (4.0 * t))) + 8;
  const std::vector<double> lx = laguerre_fn_seq(K, alpha, x);
  const std::vector<double> ly = laguerre_fn_seq(K, alpha, y);
  double s = 0.0;
  for (int k = K; k >= 0; --k)  // small terms first
    s += std::exp(-t * (4.0 * k + 2.0 * alpha + 2.0)) *
         lx[static_cast<std::size_t>(k)] * ly[static_cast<std::size_t>(k)];
  return s;
}

RieszImageCoeffs riesz_apply(const ExpansionCoeffs& coeffs) {
  if (!(coeffs.alpha >= -0.5))
    throw std::domain_error("riesz_apply: alpha must be >= -1/2");
  RieszImageCoeffs out;
  out.alpha = coeffs.alpha;
  const int K = coeffs.order();
  out.d.assign(K >= 1 ? static_cast<std::size_t>(K) : 0, 0.0);
  for (int k = 1; k <= K; ++k)
    out.d[static_cast<std::size_t>(k) - 1] =
        -2.0 * std::sqrt(k / (4.0 * k + 2.0 * coeffs.alpha + 2.0)) *
        coeffs.c[static_cast<std::size_t>(k)];
  return out;
}

double synthesize_riesz(const RieszImageCoeffs& image, double x) {
  if (image.d.empty()) return 0.0;
  const int K = static_cast<int>(image.d.size()) - 1;
  const std::vector<double> lk = laguerre_fn_seq(K, image.alpha + 1.0, x);
  double s = 0.0;
  for (int k = 0; k <= K; ++k)
    s += image.d[static_cast<std::size_t>(k)] * lk[static_cast<std::size_t>(k)];
  return x * s;
}

double angular_apply(const ExpansionCoeffs& coeffs, double x) {
  if (!(x > 0.0)) throw std::domain_error("angular_apply: x must be positive");
  return synthesize(fractional_integral(coeffs, 0.5), x) / x;
}

double twisted_apply(TwistedOp op, double alpha, const TwistParams& tw,
                     const std::function<double(double)>& f, double x, int K) {
  if (!(tw.a >= 1.0)) throw std::domain_error("twisted_apply: a must be >= 1");
  const double m = alpha + tw.power();
  if (!(m >= -0.5))
    throw std::domain_error("twisted_apply: shifted order must be >= -1/2");
  const double aj = tw.power();
  auto shifted = [&](double xx) { return std::pow(xx, -aj) * f(xx); };
  QuadratureRule rule =
      make_radial_rule(m, 0.0, default_radial_window(m, K), std::max(8, K / 2));
  const ExpansionCoeffs coeffs = project(shifted, m, K, rule);
  const double twist = std::pow(x, aj);
  if (op == TwistedOp::riesz) return twist * synthesize_riesz(riesz_apply(coeffs), x);
  return tw.j * twist * angular_apply(coeffs, x);
}

}  // namespace oscriesz
