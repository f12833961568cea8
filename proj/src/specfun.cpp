#include "oscriesz/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace oscriesz {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2 pi))

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_log_gamma(double x) {
  // Valid for x >= 0.5.
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x must be positive");
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate range.
    return std::log(kPi / std::sin(kPi * x)) - lanczos_log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(x);
}

double gamma_ratio(double z, double r, double t) {
  if (!(z + r > 0.0) || !(z + t > 0.0))
    throw std::domain_error("gamma_ratio: z+r and z+t must be positive");
  return std::exp(log_gamma(z + r) - log_gamma(z + t));
}

double log_bessel_i_scaled(double alpha, double z) {
  if (!(z > 0.0))
    throw std::domain_error("log_bessel_i_scaled: z must be > 0");

  const double series_cut = std::fmax(30.0, 2.0 * alpha * alpha);
  if (z <= series_cut) {
    // log of e^{-z} sum_m (z/2)^{alpha+2m} / (m! Gamma(m+alpha+1)): leading
    // term in log space, the rest as a rescaled relative series (the
    // relative sum can overflow a double for long series).
    const double log_t0 =
        alpha * std::log(0.5 * z) - log_gamma(alpha + 1.0) - z;
    double rel = 1.0, sum = 1.0, log_offset = 0.0;
    const double z2q = 0.25 * z * z;
    for (int m = 0; m < 6000; ++m) {
      rel *= z2q / ((m + 1.0) * (m + alpha + 1.0));
      sum += rel;
      if (rel < 1e-18 * sum) break;
      if (sum > 1e250) {
        log_offset += std::log(sum);
        rel /= sum;
        sum = 1.0;
      }
    }
    return log_t0 + log_offset + std::log(sum);
  }

  // Asymptotic expansion for large argument:
  //   e^{-z} I_a(z) ~ (2 pi z)^{-1/2} sum_m (-1)^m a_m(a) / z^m,
  // truncated at the smallest term.
  const double mu = 4.0 * alpha * alpha;
  double term = 1.0, sum = 1.0;
  for (int m = 0; m < 40; ++m) {
    const double num = mu - (2.0 * m + 1.0) * (2.0 * m + 1.0);
    const double next = -term * num / (8.0 * (m + 1.0) * z);
    if (std::fabs(next) >= std::fabs(term)) break;  // divergent tail
    term = next;
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return std::log(sum) - 0.5 * std::log(2.0 * kPi * z);
}

double bessel_i_scaled(double alpha, double z) {
  if (z < 0.0) throw std::domain_error("bessel_i_scaled: z must be >= 0");
  if (z == 0.0) {
    if (alpha == 0.0) return 1.0;
    if (alpha > 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  const double lg = log_bessel_i_scaled(alpha, z);
  return (lg > -745.0) ? std::exp(lg) : 0.0;
}

double laguerre_poly(int k, double alpha, double x) {
  if (k < 0) throw std::domain_error("laguerre_poly: k must be >= 0");
  if (k == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int i = 1; i < k; ++i) {
    const double lp1 = ((2.0 * i + 1.0 + alpha - x) * l - (i + alpha) * lm1) /
                       (i + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

std::vector<double> laguerre_fn_seq(int kmax, double alpha, double x) {
  if (kmax < 0) throw std::domain_error("laguerre_fn_seq: kmax must be >= 0");
  if (!(alpha > -1.0))
    throw std::domain_error("laguerre_fn_seq: alpha must be > -1");
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1);

  // Recurrence on t_k = norm_k L_k^alpha(x^2) e^{-x^2/2}:
  //   t_{k+1} = (2k+1+alpha-u)/sqrt((k+1)(k+alpha+1)) t_k
  //             - sqrt(k(k+alpha)/((k+1)(k+alpha+1))) t_{k-1},  u = x^2.
  // Values are carried relative to a floating log offset so neither the tiny
  // starting value (large alpha or large x) nor its inverse can overflow.
  const double u = x * x;
  double off = 0.5 * (std::log(2.0) - log_gamma(alpha + 1.0)) - 0.5 * u;
  double scale = (off > -700.0) ? std::exp(off) : 0.0;

  double tm1 = 0.0;
  double t = 1.0;  // l_0 relative to the offset
  out[0] = t * scale;
  for (int k = 0; k < kmax; ++k) {
    const double c1 = (2.0 * k + 1.0 + alpha - u) /
                      std::sqrt((k + 1.0) * (k + alpha + 1.0));
    const double c2 =
        std::sqrt(k * (k + alpha) / ((k + 1.0) * (k + alpha + 1.0)));
    const double tp1 = c1 * t - c2 * tm1;
    tm1 = t;
    t = tp1;
    const double mag = std::fmax(std::fabs(t), std::fabs(tm1));
    if (mag > 1e120 || (mag < 1e-120 && mag > 0.0)) {
      const double shift = (mag > 1.0) ? 1e-120 : 1e120;
      tm1 *= shift;
      t *= shift;
      off -= std::log(shift);
      scale = (off > -700.0 && off < 700.0) ? std::exp(off) : (off <= -700.0 ? 0.0 : std::numeric_limits<double>::infinity());
    }
    out[static_cast<std::size_t>(k) + 1] = t * scale;
  }
  return out;
}

double laguerre_fn(int k, double alpha, double x) {
  return laguerre_fn_seq(k, alpha, x)[static_cast<std::size_t>(k)];
}

double laguerre_fn_deriv(int k, double alpha, double x) {
  // l_k' = norm_k e^{-u/2} (2x dL/du - x L_k^alpha(u)), u = x^2, with
  // dL_k^alpha/du = -L_{k-1}^{alpha+1}(u) evaluated on raw polynomials.
  const double u = x * x;
  const double lognorm = 0.5 * (std::log(2.0) + log_gamma(k + 1.0) -
                                log_gamma(k + alpha + 1.0));
  const double dpoly = (k >= 1) ? -laguerre_poly(k - 1, alpha + 1.0, u) : 0.0;
  const double poly = laguerre_poly(k, alpha, u);
  return std::exp(lognorm - 0.5 * u) * (2.0 * x * dpoly - x * poly);
}

std::vector<double> hermite_fn_seq(int kmax, double x) {
  if (kmax < 0) throw std::domain_error("hermite_fn_seq: kmax must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
  const double h0 = std::exp(-0.5 * x * x) / std::pow(kPi, 0.25);
  out[0] = h0;
  if (kmax == 0) return out;
  out[1] = std::sqrt(2.0) * x * h0;
  for (int k = 1; k < kmax; ++k) {
    out[static_cast<std::size_t>(k) + 1] =
        x * std::sqrt(2.0 / (k + 1.0)) * out[static_cast<std::size_t>(k)] -
        std::sqrt(k / (k + 1.0)) * out[static_cast<std::size_t>(k) - 1];
  }
  return out;
}

double hermite_fn(int k, double x) {
  return hermite_fn_seq(k, x)[static_cast<std::size_t>(k)];
}

double hermite_fn_deriv(int k, double x) {
  // h_k' = c_k (H_k' - x H_k) e^{-x^2/2} with H_k' = 2k H_{k-1} on the raw
  // Hermite polynomials, c_k = (sqrt(pi) 2^k k!)^{-1/2}.
  double hm1 = 0.0, h = 1.0;  // H_0
  for (int i = 0; i < k; ++i) {
    const double hp1 = 2.0 * x * h - 2.0 * i * hm1;
    hm1 = h;
    h = hp1;
  }
  const double logc =
      -0.5 * (0.5 * std::log(kPi) + k * std::log(2.0) + log_gamma(k + 1.0));
  const double dH = (k >= 1) ? 2.0 * k * hm1 : 0.0;
  return std::exp(logc - 0.5 * x * x) * (dH - x * h);
}

}  // namespace oscriesz
