#include "oscriesz/spherical.hpp"

#include <cmath>
#include <stdexcept>

#include "oscriesz/rng.hpp"
#include "oscriesz/specfun.hpp"
#include "oscriesz/spectral.hpp"

namespace oscriesz {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

int harmonic_dim(int n, int j) {
  if (j < 0) throw std::domain_error("harmonic_dim: j must be >= 0");
  if (n == 2) return j == 0 ? 1 : 2;
  if (n == 3) return 2 * j + 1;
  throw std::domain_error("harmonic_dim: n must be 2 or 3");
}

namespace {

// Fully normalized associated Legendre values Q_l^m(theta) such that the
// real harmonics built from them are orthonormal on S^2:
//   Y_{l,0} = Q_l^0,  Y_{l,m} = sqrt(2) Q_l^m cos(m phi),
//   Y_{l,-m} = sqrt(2) Q_l^m sin(m phi).
// Returns Q_j^m and Q_{j-1}^m (the latter for the theta derivative).
void normalized_legendre(int j, int m, double theta, double* qj,
                         double* qjm1) {
  const double ct = std::cos(theta), st = std::sin(theta);
  double qmm = 1.0 / std::sqrt(4.0 * kPi);  // Q_0^0
  for (int i = 1; i <= m; ++i)
    qmm *= st * std::sqrt((2.0 * i + 1.0) / (2.0 * i));
  if (j == m) {
    *qj = qmm;
    *qjm1 = 0.0;
    return;
  }
  double qprev = qmm;                                  // Q_m^m
  double q = std::sqrt(2.0 * m + 3.0) * ct * qmm;      // Q_{m+1}^m
  for (int l = m + 2; l <= j; ++l) {
    const double a =
        std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
    const double b = std::sqrt(((l - 1.0) * (l - 1.0) - m * m) /
                               (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
    const double qnext = a * (ct * q - b * qprev);
    qprev = q;
    q = qnext;
  }
  *qj = q;
  *qjm1 = qprev;
}

double dtheta_normalized_legendre(int j, int m, double theta) {
  double qj, qjm1;
  normalized_legendre(j, m, theta, &qj, &qjm1);
  const double ct = std::cos(theta), st = std::sin(theta);
  if (j == 0) return 0.0;
  const double coef = std::sqrt((2.0 * j + 1.0) / (2.0 * j - 1.0)) *
                      std::sqrt(static_cast<double>(j) * j - static_cast<double>(m) * m);
  return (j * ct * qj - coef * qjm1) / st;
}

void check_l(int n, int j, int l) {
  if (l < 1 || l > harmonic_dim(n, j))
    throw std::out_of_range("harmonic basis index out of range");
}

}  // namespace

double harmonic_eval(int n, int j, int l, const double* angles) {
  check_l(n, j, l);
  if (n == 2) {
    if (j == 0) return 1.0 / std::sqrt(2.0 * kPi);
    const double t = angles[0];
    return (l == 1 ? std::cos(j * t) : std::sin(j * t)) / std::sqrt(kPi);
  }
  // n == 3: l -> m with m = l - j - 1 in [-j, j]
  const int m = l - j - 1;
  const int am = std::abs(m);
  double qj, qjm1;
  normalized_legendre(j, am, angles[0], &qj, &qjm1);
  if (m == 0) return qj;
  const double ang = am * angles[1];
  return std::sqrt(2.0) * qj * (m > 0 ? std::cos(ang) : std::sin(ang));
}

void harmonic_grad(int n, int j, int l, const double* angles, double* out) {
  check_l(n, j, l);
  if (n == 2) {
    if (j == 0) {
      out[0] = 0.0;
      return;
    }
    const double t = angles[0];
    out[0] = j * (l == 1 ? -std::sin(j * t) : std::cos(j * t)) / std::sqrt(kPi);
    return;
  }
  const int m = l - j - 1;
  const int am = std::abs(m);
  const double theta = angles[0];
  const double dq = dtheta_normalized_legendre(j, am, theta);
  double qj, qjm1;
  normalized_legendre(j, am, theta, &qj, &qjm1);
  if (m == 0) {
    out[0] = dq;
    out[1] = 0.0;
    return;
  }
  const double ang = am * angles[1];
  const double root2 = std::sqrt(2.0);
  if (m > 0) {
    out[0] = root2 * dq * std::cos(ang);
    out[1] = root2 * qj * (-am * std::sin(ang)) / std::sin(theta);
  } else {
    out[0] = root2 * dq * std::sin(ang);
    out[1] = root2 * qj * (am * std::cos(ang)) / std::sin(theta);
  }
}

Point unit_vector(int n, const double* angles) {
  if (n == 2) return {std::cos(angles[0]), std::sin(angles[0]), 0.0};
  const double st = std::sin(angles[0]);
  return {st * std::cos(angles[1]), st * std::sin(angles[1]),
          std::cos(angles[0])};
}

void angles_of(int n, const Point& x, double* angles) {
  if (n == 2) {
    angles[0] = std::atan2(x[1], x[0]);
    return;
  }
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  angles[0] = std::acos(x[2] / r);
  angles[1] = std::atan2(x[1], x[0]);
}

AngularGrid AngularGrid::make(int n, int max_degree) {
  AngularGrid grid;
  grid.n = n;
  if (n == 2) {
    const int nt = std::max(16, 2 * max_degree + 4);
    for (int i = 0; i < nt; ++i) {
      grid.angles.push_back({2.0 * kPi * i / nt, 0.0});
      grid.weights.push_back(2.0 * kPi / nt);
    }
    return grid;
  }
  if (n != 3) throw std::domain_error("AngularGrid: n must be 2 or 3");
  const int nu = std::max(8, max_degree + 2);
  const int nphi = std::max(16, 2 * max_degree + 4);
  auto [u, w] = gauss_legendre(nu);
  for (int i = 0; i < nu; ++i) {
    const double theta = std::acos(u[static_cast<std::size_t>(i)]);
    for (int k = 0; k < nphi; ++k) {
      grid.angles.push_back({theta, 2.0 * kPi * k / nphi});
      grid.weights.push_back(w[static_cast<std::size_t>(i)] * 2.0 * kPi / nphi);
    }
  }
  return grid;
}

double SphericalDecomposition::profile(int j, int l, std::size_t node) const {
  return std::pow(r_nodes[node], j) *
         factored[static_cast<std::size_t>(j)][static_cast<std::size_t>(l) - 1]
                 [node];
}

SphericalDecomposition decompose(const PointFn& f, int n, int j_max,
                                 double r_max, int r_panels, int panel_order) {
  if (n != 2 && n != 3) throw std::domain_error("decompose: n must be 2 or 3");
  SphericalDecomposition dec;
  dec.n = n;
  dec.j_max = j_max;

  auto [gx, gw] = gauss_legendre(panel_order);
  const double h = r_max / r_panels;
  for (int p = 0; p < r_panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t i = 0; i < gx.size(); ++i) {
      dec.r_nodes.push_back(mid + 0.5 * h * gx[i]);
      dec.r_weights.push_back(0.5 * h * gw[i]);
    }
  }

  // Angular products f * Y_{j,l} have degree <= band limit + j_max; the grid
  // is exact well past 2*j_max for the band-limited inputs used here.
  const AngularGrid grid = AngularGrid::make(n, 2 * j_max + 8);

  // Basis values on the angular grid.
  std::vector<std::vector<std::vector<double>>> ytab(
      static_cast<std::size_t>(j_max) + 1);
  for (int j = 0; j <= j_max; ++j) {
    ytab[static_cast<std::size_t>(j)].resize(
        static_cast<std::size_t>(harmonic_dim(n, j)));
    for (int l = 1; l <= harmonic_dim(n, j); ++l) {
      auto& col = ytab[static_cast<std::size_t>(j)][static_cast<std::size_t>(l) - 1];
      col.resize(grid.angles.size());
      for (std::size_t a = 0; a < grid.angles.size(); ++a)
        col[a] = harmonic_eval(n, j, l, grid.angles[a].data());
    }
  }

  dec.factored.assign(static_cast<std::size_t>(j_max) + 1, {});
  for (int j = 0; j <= j_max; ++j)
    dec.factored[static_cast<std::size_t>(j)].assign(
        static_cast<std::size_t>(harmonic_dim(n, j)),
        std::vector<double>(dec.r_nodes.size(), 0.0));

  std::vector<double> fvals(grid.angles.size());
  for (std::size_t ri = 0; ri < dec.r_nodes.size(); ++ri) {
    const double r = dec.r_nodes[ri];
    for (std::size_t a = 0; a < grid.angles.size(); ++a) {
      const Point xp = unit_vector(n, grid.angles[a].data());
      fvals[a] = f({r * xp[0], r * xp[1], r * xp[2]});
    }
    for (int j = 0; j <= j_max; ++j) {
      const double rj = std::pow(r, -j);
      for (int l = 1; l <= harmonic_dim(n, j); ++l) {
        double s = 0.0;
        const auto& col =
            ytab[static_cast<std::size_t>(j)][static_cast<std::size_t>(l) - 1];
        for (std::size_t a = 0; a < grid.angles.size(); ++a)
          s += grid.weights[a] * fvals[a] * col[a];
        dec.factored[static_cast<std::size_t>(j)][static_cast<std::size_t>(l) - 1]
                    [ri] = s * rj;
      }
    }
  }
  return dec;
}

double mixed_norm(const SphericalDecomposition& dec, double p,
                  const WeightSpec& w) {
  if (!(p >= 1.0)) throw std::domain_error("mixed_norm: p must be >= 1");
  double acc = 0.0;
  for (std::size_t ri = 0; ri < dec.r_nodes.size(); ++ri) {
    const double r = dec.r_nodes[ri];
    double sq = 0.0;
    for (int j = 0; j <= dec.j_max; ++j)
      for (int l = 1; l <= harmonic_dim(dec.n, j); ++l) {
        const double v = dec.profile(j, l, ri);
        sq += v * v;
      }
    acc += dec.r_weights[ri] * std::pow(sq, 0.5 * p) * w.eval(r) *
           std::pow(r, dec.n - 1.0);
  }
  return std::pow(acc, 1.0 / p);
}

double RieszChannel::ladder_part(double r) const {
  RieszImageCoeffs img;
  img.alpha = alpha;
  img.d = riesz_d;
  return std::pow(r, j) * synthesize_riesz(img, r);
}

double RieszChannel::angular_part(double r) const {
  if (j == 0) return 0.0;
  ExpansionCoeffs ec;
  ec.alpha = alpha;
  ec.c = c;
  return std::pow(r, j) * angular_apply(ec, r);
}

double RieszChannel::radial_x(double r) const {
  return ladder_part(r) + j * angular_part(r);
}

double RieszOutput::magnitude_sq(double r) const {
  double acc = 0.0;
  for (const RieszChannel& ch : channels) {
    const double s = ch.radial_x(r);
    acc += s * s;
    if (ch.j >= 1) {
      const double cpart = ch.angular_part(r);
      acc += ch.j * (ch.j + n - 2.0) * cpart * cpart;
    }
  }
  return acc;
}

double RieszOutput::eval_abs(const Point& x) const {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  double ang[2];
  angles_of(n, x, ang);
  double radial = 0.0;
  double tangent[2] = {0.0, 0.0};
  const int tdim = n - 1;
  for (const RieszChannel& ch : channels) {
    const double y = harmonic_eval(n, ch.j, ch.l, ang);
    radial += ch.radial_x(r) * y;
    if (ch.j >= 1) {
      double g[2];
      harmonic_grad(n, ch.j, ch.l, ang, g);
      const double cpart = ch.angular_part(r);
      for (int d = 0; d < tdim; ++d) tangent[d] += cpart * g[d];
    }
  }
  double sq = radial * radial;
  for (int d = 0; d < tdim; ++d) sq += tangent[d] * tangent[d];
  return std::sqrt(sq);
}

std::pair<double, double> RieszOutput::inequality_parts(double r) const {
  double sum_a = 0.0, sum_b = 0.0;
  for (const RieszChannel& ch : channels) {
    const double a = ch.ladder_part(r);
    sum_a += a * a;
    if (ch.j >= 1) {
      const double b = ch.j * ch.angular_part(r);
      sum_b += (2.0 * ch.j + n - 2.0) / ch.j * b * b;
    }
  }
  return {sum_a, sum_b};
}

RieszOutput oscillator_riesz(const SphericalDecomposition& dec, int K) {
  RieszOutput out;
  out.n = dec.n;
  out.j_max = dec.j_max;
  for (int j = 0; j <= dec.j_max; ++j) {
    const double alpha = 0.5 * dec.n - 1.0 + j;
    for (int l = 1; l <= harmonic_dim(dec.n, j); ++l) {
      RieszChannel ch;
      ch.j = j;
      ch.l = l;
      ch.alpha = alpha;
      ch.c.assign(static_cast<std::size_t>(K) + 1, 0.0);
      // c_k = int (r^{-j} f_{j,l}) l_k^alpha(r) r^{n-1+2j} dr
      const auto& g =
          dec.factored[static_cast<std::size_t>(j)][static_cast<std::size_t>(l) - 1];
      for (std::size_t ri = 0; ri < dec.r_nodes.size(); ++ri) {
        const double r = dec.r_nodes[ri];
        const double wmu =
            dec.r_weights[ri] * std::pow(r, dec.n - 1.0 + 2.0 * j) * g[ri];
        if (wmu == 0.0) continue;
        const std::vector<double> lk = laguerre_fn_seq(K, alpha, r);
        for (int k = 0; k <= K; ++k)
          ch.c[static_cast<std::size_t>(k)] += wmu * lk[static_cast<std::size_t>(k)];
      }
      ExpansionCoeffs ec;
      ec.alpha = alpha;
      ec.c = ch.c;
      ch.riesz_d = riesz_apply(ec).d;
      out.channels.push_back(std::move(ch));
    }
  }
  return out;
}

double HermiteExpansion2::eval(double x1, double x2) const {
  const std::vector<double> h1 = hermite_fn_seq(degree, x1);
  const std::vector<double> h2 = hermite_fn_seq(degree, x2);
  double s = 0.0;
  for (int k1 = 0; k1 <= degree; ++k1)
    for (int k2 = 0; k2 + k1 <= degree; ++k2)
      s += coef[static_cast<std::size_t>(k1) * (degree + 1) + k2] *
           h1[static_cast<std::size_t>(k1)] * h2[static_cast<std::size_t>(k2)];
  return s;
}

HermiteExpansion2 HermiteExpansion2::random(int degree, std::uint64_t seed) {
  HermiteExpansion2 f;
  f.degree = degree;
  f.coef.assign(static_cast<std::size_t>(degree + 1) * (degree + 1), 0.0);
  SplitMix64 rng(seed);
  double norm = 0.0;
  for (int k1 = 0; k1 <= degree; ++k1)
    for (int k2 = 0; k2 + k1 <= degree; ++k2) {
      const double v = rng.uniform(-1.0, 1.0);
      f.coef[static_cast<std::size_t>(k1) * (degree + 1) + k2] = v;
      norm += v * v;
    }
  norm = std::sqrt(norm);
  for (double& v : f.coef) v /= norm;
  return f;
}

double hermite_oracle_riesz(const HermiteExpansion2& f, double x1, double x2) {
  const int D = f.degree;
  const std::vector<double> h1 = hermite_fn_seq(D, x1);
  const std::vector<double> h2 = hermite_fn_seq(D, x2);
  // (d_i + x_i) phi_k = sqrt(2 k_i) phi_{k - e_i}; H^{-1/2} is division by
  // sqrt(2|k| + 2).
  double comp1 = 0.0, comp2 = 0.0;
  for (int k1 = 0; k1 <= D; ++k1)
    for (int k2 = 0; k2 + k1 <= D; ++k2) {
      const double c = f.coef[static_cast<std::size_t>(k1) * (D + 1) + k2];
      if (c == 0.0) continue;
      const double inv_sqrt_ev = 1.0 / std::sqrt(2.0 * (k1 + k2) + 2.0);
      if (k1 >= 1)
        comp1 += c * inv_sqrt_ev * std::sqrt(2.0 * k1) *
                 h1[static_cast<std::size_t>(k1) - 1] *
                 h2[static_cast<std::size_t>(k2)];
      if (k2 >= 1)
        comp2 += c * inv_sqrt_ev * std::sqrt(2.0 * k2) *
                 h1[static_cast<std::size_t>(k1)] *
                 h2[static_cast<std::size_t>(k2) - 1];
    }
  return std::sqrt(comp1 * comp1 + comp2 * comp2);
}

double eigenfunction_eval(int n, int m, int k, int l, const Point& x) {
  if (m < 0 || k < 0 || 2 * k > m)
    throw std::domain_error("eigenfunction_eval: need 0 <= 2k <= m");
  const int j = m - 2 * k;
  const double alpha = 0.5 * n - 1.0 + j;
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (r == 0.0) {
    if (j > 0) return 0.0;
    const double y0 = (n == 2) ? 1.0 / std::sqrt(2.0 * kPi)
                               : 1.0 / std::sqrt(4.0 * kPi);
    return laguerre_fn(k, alpha, 0.0) * y0;
  }
  double ang[2];
  angles_of(n, x, ang);
  return laguerre_fn(k, alpha, r) * std::pow(r, j) *
         harmonic_eval(n, j, l, ang);
}

}  // namespace oscriesz
