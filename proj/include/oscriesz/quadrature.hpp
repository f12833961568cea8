#pragma once

#include <utility>
#include <vector>

namespace oscriesz {

enum class RuleKind { radial_mu_alpha, jacobi_pi_alpha, xi_unit_interval };

// Nodes and positive weights realizing one of the measures the library
// integrates against. total_mass() must match the closed form of the measure
// of [lo, hi] to 1e-12 relative (checked in the tests).
struct QuadratureRule {
  RuleKind kind;
  double alpha;
  double lo, hi;
  std::vector<double> nodes;
  std::vector<double> weights;

  double total_mass() const;

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

// Eigen decomposition of a symmetric tridiagonal matrix (implicit QL with
// Wilkinson shifts). diag/off are destroyed; on return diag holds ascending
// eigenvalues and firstrow[i] the first component of the i-th normalized
// eigenvector. Backbone of all Gauss rule constructions here.
void symtridiag_eigen_firstrow(std::vector<double>& diag,
                               std::vector<double>& off,
                               std::vector<double>& firstrow);

// Gauss-Legendre on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

// Generalized Gauss-Laguerre: weight x^a e^{-x} on (0, inf), a > -1.
std::pair<std::vector<double>, std::vector<double>> gauss_laguerre(int n,
                                                                   double a);

// Gauss-Jacobi: weight (1-x)^a (1+x)^b on [-1, 1], a, b > -1.
std::pair<std::vector<double>, std::vector<double>> gauss_jacobi(int n,
                                                                 double a,
                                                                 double b);

// Rule for the measure Pi_alpha(ds) = (1-s^2)^{alpha-1/2} ds
// / (sqrt(pi) 2^alpha Gamma(alpha+1/2)) on [-1, 1], alpha > -1/2. The limit
// alpha = -1/2 degenerates to atoms at +-1; each atom carries mass
// (1/2) sqrt(2/pi) so that the Schlaefli identity
//   I_alpha(z) = z^alpha \int e^{-zs} Pi_alpha(ds)
// stays exact through the limit (the family total mass 1/(2^alpha
// Gamma(alpha+1)) is continuous at alpha = -1/2).
QuadratureRule make_pi_alpha_rule(double alpha, int n);

// Same nodes but with weights kept in log space; needed by the kernel
// quadratures where alpha + a*j is large enough that plain weights underflow.
struct PiRuleLog {
  double alpha;
  std::vector<double> nodes;
  std::vector<double> log_weights;
};
PiRuleLog make_pi_alpha_rule_log(double alpha, int n);

// Composite Gauss-Legendre for d mu_alpha = x^{2 alpha + 1} dx on a window
// [lo, hi] within [0, inf): panel_count uniform panels of panel_order nodes,
// with the measure density multiplied into the weights.
QuadratureRule make_radial_rule(double alpha, double lo, double hi,
                                int panel_count, int panel_order = 16);

// Radial window adequate for content of Laguerre order up to K: the
// functions decay like e^{-x^2/2} past the turning point ~ sqrt(4K+2a+2).
double default_radial_window(double alpha, int max_order);

}  // namespace oscriesz
