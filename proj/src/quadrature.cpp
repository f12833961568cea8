#include "oscriesz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oscriesz/specfun.hpp"

namespace oscriesz {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double QuadratureRule::total_mass() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

void symtridiag_eigen_firstrow(std::vector<double>& diag,
                               std::vector<double>& off,
                               std::vector<double>& firstrow) {
  const int n = static_cast<int>(diag.size());
  firstrow.assign(static_cast<std::size_t>(n), 0.0);
  if (n == 0) return;
  firstrow[0] = 1.0;
  if (n == 1) return;

  std::vector<double> e(off);
  e.resize(static_cast<std::size_t>(n), 0.0);
  const double eps = 2.22e-16;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      while (m < n - 1 &&
             std::fabs(e[m]) > eps * (std::fabs(diag[m]) + std::fabs(diag[m + 1])))
        ++m;
      if (m == l) break;
      if (++iter > 50)
        throw std::runtime_error("symtridiag_eigen: no convergence");

      // Implicit QL sweep with Wilkinson shift.
      double g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = diag[m] - diag[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          diag[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = diag[i + 1] - p;
        r = (diag[i] - g) * s + 2.0 * c * b;
        p = s * r;
        diag[i + 1] = g + p;
        g = c * r - b;
        // Rotate the tracked first row of the eigenvector matrix.
        f = firstrow[static_cast<std::size_t>(i) + 1];
        firstrow[static_cast<std::size_t>(i) + 1] =
            s * firstrow[static_cast<std::size_t>(i)] + c * f;
        firstrow[static_cast<std::size_t>(i)] =
            c * firstrow[static_cast<std::size_t>(i)] - s * f;
      }
      if (underflow) continue;
      diag[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  // Sort eigenvalues ascending, carrying the first-row components along.
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return diag[a] < diag[b]; });
  std::vector<double> d2(static_cast<std::size_t>(n));
  std::vector<double> f2(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    d2[static_cast<std::size_t>(i)] = diag[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    f2[static_cast<std::size_t>(i)] = firstrow[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
  }
  diag.swap(d2);
  firstrow.swap(f2);
}

namespace {

// Monic Jacobi-matrix coefficients for weight (1-x)^a (1+x)^b on [-1,1]:
// diagonal a_k and squared off-diagonal b_k.
void jacobi_matrix_coeffs(int n, double a, double b, std::vector<double>& diag,
                          std::vector<double>& offsq) {
  const double ab = a + b;
  diag.assign(static_cast<std::size_t>(n), 0.0);
  offsq.assign(static_cast<std::size_t>(n) - 1, 0.0);
  diag[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag[static_cast<std::size_t>(k)] = (b * b - a * a) / den;
  }
  if (n > 1)
    offsq[0] =
        4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
  for (int k = 2; k < n; ++k) {
    const double t = 2.0 * k + ab;
    offsq[static_cast<std::size_t>(k) - 1] =
        4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t * t - 1.0));
  }
}

// Nodes plus first-row eigenvector components of the Jacobi matrix;
// quadrature weights are mu0 * firstrow^2 (Golub-Welsch).
void golub_welsch_raw(std::vector<double> diag, const std::vector<double>& offsq,
                      std::vector<double>& nodes, std::vector<double>& firstrow) {
  std::vector<double> off(offsq.size());
  for (std::size_t i = 0; i < offsq.size(); ++i) off[i] = std::sqrt(offsq[i]);
  symtridiag_eigen_firstrow(diag, off, firstrow);
  nodes = std::move(diag);
}

std::pair<std::vector<double>, std::vector<double>> golub_welsch(
    std::vector<double> diag, const std::vector<double>& offsq, double mu0) {
  std::vector<double> nodes, firstrow;
  golub_welsch_raw(std::move(diag), offsq, nodes, firstrow);
  std::vector<double> w(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    w[i] = mu0 * firstrow[i] * firstrow[i];
  return {std::move(nodes), std::move(w)};
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
  std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
  std::vector<double> offsq(static_cast<std::size_t>(n) - 1);
  for (int k = 1; k < n; ++k)
    offsq[static_cast<std::size_t>(k) - 1] = k * k / (4.0 * k * k - 1.0);
  return golub_welsch(std::move(diag), offsq, 2.0);
}

std::pair<std::vector<double>, std::vector<double>> gauss_laguerre(int n,
                                                                   double a) {
  if (n < 1) throw std::domain_error("gauss_laguerre: n must be >= 1");
  if (!(a > -1.0)) throw std::domain_error("gauss_laguerre: a must be > -1");
  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> offsq(static_cast<std::size_t>(n) - 1);
  for (int k = 0; k < n; ++k)
    diag[static_cast<std::size_t>(k)] = 2.0 * k + 1.0 + a;
  for (int k = 1; k < n; ++k)
    offsq[static_cast<std::size_t>(k) - 1] = k * (k + a);
  return golub_welsch(std::move(diag), offsq, std::exp(log_gamma(1.0 + a)));
}

std::pair<std::vector<double>, std::vector<double>> gauss_jacobi(int n,
                                                                 double a,
                                                                 double b) {
  if (n < 1) throw std::domain_error("gauss_jacobi: n must be >= 1");
  if (!(a > -1.0) || !(b > -1.0))
    throw std::domain_error("gauss_jacobi: parameters must be > -1");
  std::vector<double> diag, offsq;
  jacobi_matrix_coeffs(n, a, b, diag, offsq);
  const double logmu0 = (a + b + 1.0) * std::log(2.0) + log_gamma(a + 1.0) +
                        log_gamma(b + 1.0) - log_gamma(a + b + 2.0);
  return golub_welsch(std::move(diag), offsq, std::exp(logmu0));
}

QuadratureRule make_pi_alpha_rule(double alpha, int n) {
  if (!(alpha >= -0.5))
    throw std::domain_error("make_pi_alpha_rule: alpha must be >= -1/2");
  if (n < 1) throw std::domain_error("make_pi_alpha_rule: n must be >= 1");

  QuadratureRule rule;
  rule.kind = RuleKind::jacobi_pi_alpha;
  rule.alpha = alpha;
  rule.lo = -1.0;
  rule.hi = 1.0;

  if (alpha == -0.5) {
    // Atomic limit: atoms at +-1, each of mass (1/2) sqrt(2/pi); the total
    // continues the family mass 1/(2^alpha Gamma(alpha+1)) and keeps the
    // Schlaefli identity exact (I_{-1/2}(z) = sqrt(2/(pi z)) cosh z).
    const double atom = 0.5 * std::sqrt(2.0 / kPi);
    rule.nodes = {-1.0, 1.0};
    rule.weights = {atom, atom};
    return rule;
  }

  auto [x, w] = gauss_jacobi(n, alpha - 0.5, alpha - 0.5);
  const double scale = std::exp(-0.5 * std::log(kPi) - alpha * std::log(2.0) -
                                log_gamma(alpha + 0.5));
  for (double& wi : w) wi *= scale;
  rule.nodes = std::move(x);
  rule.weights = std::move(w);
  return rule;
}

PiRuleLog make_pi_alpha_rule_log(double alpha, int n) {
  if (!(alpha >= -0.5))
    throw std::domain_error("make_pi_alpha_rule_log: alpha must be >= -1/2");
  PiRuleLog rule;
  rule.alpha = alpha;

  if (alpha == -0.5) {
    const double logatom = std::log(0.5 * std::sqrt(2.0 / kPi));
    rule.nodes = {-1.0, 1.0};
    rule.log_weights = {logatom, logatom};
    return rule;
  }

  std::vector<double> diag, offsq;
  jacobi_matrix_coeffs(n, alpha - 0.5, alpha - 0.5, diag, offsq);
  std::vector<double> nodes, firstrow;
  golub_welsch_raw(std::move(diag), offsq, nodes, firstrow);

  // log w_i = log(total Pi_alpha mass) + 2 log |q_i|, mass = 1/(2^a Gamma(a+1)).
  const double logmass = -alpha * std::log(2.0) - log_gamma(alpha + 1.0);
  rule.nodes = std::move(nodes);
  rule.log_weights.resize(firstrow.size());
  for (std::size_t i = 0; i < firstrow.size(); ++i) {
    const double q = std::fabs(firstrow[i]);
    rule.log_weights[i] = (q > 0.0) ? logmass + 2.0 * std::log(q) : -1e30;
  }
  return rule;
}

QuadratureRule make_radial_rule(double alpha, double lo, double hi,
                                int panel_count, int panel_order) {
  if (!(alpha > -1.0))
    throw std::domain_error("make_radial_rule: alpha must be > -1");
  if (!(lo >= 0.0) || !(hi > lo))
    throw std::domain_error("make_radial_rule: need 0 <= lo < hi");
  if (panel_count < 1 || panel_order < 1)
    throw std::domain_error("make_radial_rule: bad panel configuration");

  auto [gx, gw] = gauss_legendre(panel_order);
  QuadratureRule rule;
  rule.kind = RuleKind::radial_mu_alpha;
  rule.alpha = alpha;
  rule.lo = lo;
  rule.hi = hi;
  rule.nodes.reserve(static_cast<std::size_t>(panel_count) * gx.size());
  rule.weights.reserve(static_cast<std::size_t>(panel_count) * gx.size());

  const double h = (hi - lo) / panel_count;
  const double expo = 2.0 * alpha + 1.0;
  for (int p = 0; p < panel_count; ++p) {
    const double a = lo + p * h;
    if (p == 0 && lo == 0.0) {
      // The x^{2a+1} density has fractional-order derivatives at 0, which
      // ruins plain Gauss-Legendre; fold the power into a Jacobi rule so the
      // first panel stays exact for polynomial integrands.
      auto [ju, jw] = gauss_jacobi(panel_order, 0.0, expo);
      const double scale = std::pow(0.5 * h, expo + 1.0);
      for (std::size_t i = 0; i < ju.size(); ++i) {
        rule.nodes.push_back(0.5 * h * (1.0 + ju[i]));
        rule.weights.push_back(scale * jw[i]);
      }
      continue;
    }
    const double mid = a + 0.5 * h;
    for (std::size_t i = 0; i < gx.size(); ++i) {
      const double x = mid + 0.5 * h * gx[i];
      rule.nodes.push_back(x);
      rule.weights.push_back(0.5 * h * gw[i] * std::pow(x, expo));
    }
  }
  return rule;
}

double default_radial_window(double alpha, int max_order) {
  return std::sqrt(16.0 * max_order + 8.0 * std::fabs(alpha) + 20.0);
}

}  // namespace oscriesz
