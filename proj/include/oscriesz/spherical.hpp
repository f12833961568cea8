#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "oscriesz/measure.hpp"
#include "oscriesz/quadrature.hpp"

namespace oscriesz {

using Point = std::array<double, 3>;  // third coordinate ignored for n = 2
using PointFn = std::function<double(const Point&)>;

// dim of the space of spherical harmonics of degree j: 2 - delta_{j0} for
// n = 2, 2j + 1 for n = 3.
int harmonic_dim(int n, int j);

// Real orthonormal harmonics on S^{n-1}. Basis index l runs 1..harmonic_dim.
// angles = {theta} on the circle, {theta, phi} on the sphere (theta polar).
double harmonic_eval(int n, int j, int l, const double* angles);

// Tangential spherical gradient: out = {dY/dtheta} for n = 2,
// {dY/dtheta, (1/sin theta) dY/dphi} for n = 3 (components in the
// orthonormal tangent frame, so |grad Y|^2 = sum of squares).
void harmonic_grad(int n, int j, int l, const double* angles, double* out);

Point unit_vector(int n, const double* angles);
void angles_of(int n, const Point& x, double* angles);

// Product quadrature on S^{n-1}: trapezoid on the circle, Gauss-Legendre in
// cos(theta) times uniform phi on the sphere; exact for harmonics up to
// max_degree in products.
struct AngularGrid {
  int n = 2;
  std::vector<std::array<double, 2>> angles;
  std::vector<double> weights;

  static AngularGrid make(int n, int max_degree);
};

// Radial profiles of f against the harmonic basis. Profiles are stored in
// the factored form g_{j,l}(r) = r^{-j} f_{j,l}(r) (band-limited profiles
// vanish like r^j, and every consumer multiplies the power back).
struct SphericalDecomposition {
  int n = 2;
  int j_max = 0;
  std::vector<double> r_nodes;
  std::vector<double> r_weights;  // plain dr weights (no r^{n-1})
  // factored[j][l-1][node]
  std::vector<std::vector<std::vector<double>>> factored;

  double profile(int j, int l, std::size_t node) const;  // f_{j,l}(r_node)
};

SphericalDecomposition decompose(const PointFn& f, int n, int j_max,
                                 double r_max, int r_panels = 12,
                                 int panel_order = 16);

// || (sum_{j,l} |f_{j,l}(r)|^2)^{1/2} ||_{L^p(w(r) r^{n-1} dr)}.
double mixed_norm(const SphericalDecomposition& dec, double p,
                  const WeightSpec& w);

// One channel of R f: order alpha = n/2 - 1 + j, input coefficients c_k,
// plus the derived ladder image. radial_x = (the x'-directed scalar)
// combines the ladder part A = r^j R^alpha(...) with the twist part
// B = j r^j T^alpha(...); angular_coeff C = r^j T^alpha(...) multiplies the
// tangential gradient of Y_{j,l}.
struct RieszChannel {
  int j = 0, l = 1;
  double alpha = 0.0;
  std::vector<double> c;        // input Laguerre coefficients
  std::vector<double> riesz_d;  // image coefficients over x l_k^{alpha+1}

  double ladder_part(double r) const;    // A
  double angular_part(double r) const;   // C (0 for j = 0)
  double radial_x(double r) const;       // A + j C
};

struct RieszOutput {
  int n = 2;
  int j_max = 0;
  std::vector<RieszChannel> channels;

  // int_{S^{n-1}} |Rf(r x')|^2 dsigma(x') by channel orthogonality:
  // sum (A+B)^2 + sum j(j+n-2) C^2.
  double magnitude_sq(double r) const;

  // pointwise |Rf(x)|
  double eval_abs(const Point& x) const;

  // pieces for the angular bookkeeping inequality: sum A^2 and
  // sum_{j>=1} ((2j+n-2)/j) B^2 at radius r.
  std::pair<double, double> inequality_parts(double r) const;
};

RieszOutput oscillator_riesz(const SphericalDecomposition& dec, int K);

// Finite Hermite expansion on R^2 (degree k1 + k2 <= degree), the Cartesian
// eigenfunction system. Coefficients normalized to unit l^2.
struct HermiteExpansion2 {
  int degree = 0;
  std::vector<double> coef;  // index k1 * (degree+1) + k2

  double eval(double x1, double x2) const;
  static HermiteExpansion2 random(int degree, std::uint64_t seed);
};

// |(grad + x) H^{-1/2} f|(x): ladder annihilation on each coordinate and the
// eigenvalue 2|k| + 2 of the oscillator; the independent check of the
// spherical route.
double hermite_oracle_riesz(const HermiteExpansion2& f, double x1, double x2);

// Oscillator eigenfunction in spherical form:
// l_k^{n/2-1+m-2k}(r) r^{m-2k} Y_{m-2k,l}(x'), eigenvalue n + 2m.
double eigenfunction_eval(int n, int m, int k, int l, const Point& x);

}  // namespace oscriesz
