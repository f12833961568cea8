#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oscriesz/spherical.hpp"

using namespace oscriesz;

namespace {

double sq(double v) { return v * v; }

}  // namespace

TEST_CASE("harmonic basis orthonormality, n = 2 and n = 3") {
  for (int n : {2, 3}) {
    const int jmax = 6;
    const AngularGrid grid = AngularGrid::make(n, 2 * jmax + 4);
    for (int j = 0; j <= jmax; ++j)
      for (int l = 1; l <= harmonic_dim(n, j); ++l)
        for (int j2 = j; j2 <= jmax; ++j2)
          for (int l2 = (j2 == j ? l : 1); l2 <= harmonic_dim(n, j2); ++l2) {
            double ip = 0.0;
            for (std::size_t a = 0; a < grid.angles.size(); ++a)
              ip += grid.weights[a] *
                    harmonic_eval(n, j, l, grid.angles[a].data()) *
                    harmonic_eval(n, j2, l2, grid.angles[a].data());
            const double want = (j == j2 && l == l2) ? 1.0 : 0.0;
            CHECK(std::fabs(ip - want) <= 1e-10);
          }
  }
}

TEST_CASE("n = 2 constant harmonic value") {
  const double ang[2] = {0.7, 0.0};
  CHECK(harmonic_eval(2, 0, 1, ang) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-14));
  CHECK_THROWS_AS(harmonic_eval(2, 0, 2, ang), std::out_of_range);
}

TEST_CASE("tangential gradient norms give j(j+n-2)") {
  for (int n : {2, 3}) {
    const AngularGrid grid = AngularGrid::make(n, 16);
    for (int j = 1; j <= 4; ++j)
      for (int l = 1; l <= harmonic_dim(n, j); ++l) {
        double ip = 0.0;
        for (std::size_t a = 0; a < grid.angles.size(); ++a) {
          double g[2] = {0.0, 0.0};
          harmonic_grad(n, j, l, grid.angles[a].data(), g);
          ip += grid.weights[a] * (sq(g[0]) + (n == 3 ? sq(g[1]) : 0.0));
        }
        CHECK(ip == doctest::Approx(j * (j + n - 2.0)).epsilon(1e-9));
      }
  }
}

TEST_CASE("homogeneous-extension gradient norms give j(2j+n-2)") {
  // grad(r^j Y) restricted to the sphere is j Y x' + grad_0 Y, whose square
  // integral is j^2 + j(j+n-2) = j(2j+n-2): 18 at (n=2, j=3), 10 at
  // (n=3, j=2).
  for (int n : {2, 3}) {
    const AngularGrid grid = AngularGrid::make(n, 16);
    for (int j = 1; j <= 4; ++j)
      for (int l = 1; l <= harmonic_dim(n, j); ++l) {
        double ip = 0.0;
        for (std::size_t a = 0; a < grid.angles.size(); ++a) {
          double g[2] = {0.0, 0.0};
          harmonic_grad(n, j, l, grid.angles[a].data(), g);
          const double y = harmonic_eval(n, j, l, grid.angles[a].data());
          ip += grid.weights[a] *
                (sq(j * y) + sq(g[0]) + (n == 3 ? sq(g[1]) : 0.0));
        }
        CHECK(ip == doctest::Approx(j * (2.0 * j + n - 2.0)).epsilon(1e-9));
      }
  }
  // the spot values quoted above
  {
    const AngularGrid g2 = AngularGrid::make(2, 16);
    double ip = 0.0;
    for (std::size_t a = 0; a < g2.angles.size(); ++a) {
      double g[2];
      harmonic_grad(2, 3, 1, g2.angles[a].data(), g);
      const double y = harmonic_eval(2, 3, 1, g2.angles[a].data());
      ip += g2.weights[a] * (9.0 * y * y + g[0] * g[0]);
    }
    CHECK(ip == doctest::Approx(18.0).epsilon(1e-10));
  }
  {
    const AngularGrid g3 = AngularGrid::make(3, 16);
    double ip = 0.0;
    for (std::size_t a = 0; a < g3.angles.size(); ++a) {
      double g[2];
      harmonic_grad(3, 2, 4, g3.angles[a].data(), g);
      const double y = harmonic_eval(3, 2, 4, g3.angles[a].data());
      ip += g3.weights[a] * (4.0 * y * y + g[0] * g[0] + g[1] * g[1]);
    }
    CHECK(ip == doctest::Approx(10.0).epsilon(1e-10));
  }
}

TEST_CASE("decompose recovers a single-channel function") {
  for (int n : {2, 3}) {
    auto f = [n](const Point& x) {
      const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
      double ang[2];
      angles_of(n, x, ang);
      return std::exp(-r * r) * harmonic_eval(n, 2, 1, ang);
    };
    const SphericalDecomposition dec = decompose(f, n, 4, 6.0, 10, 12);
    for (std::size_t ri = 0; ri < dec.r_nodes.size(); ri += 7) {
      const double r = dec.r_nodes[ri];
      for (int j = 0; j <= 4; ++j)
        for (int l = 1; l <= harmonic_dim(n, j); ++l) {
          const double want = (j == 2 && l == 1) ? std::exp(-r * r) : 0.0;
          CHECK(std::fabs(dec.profile(j, l, ri) - want) <= 1e-10);
        }
    }
  }
}

TEST_CASE("eigenfunctions: values, norms, angular Parseval") {
  // ground state of the planar oscillator is pi^{-1/2} e^{-r^2/2}
  CHECK(eigenfunction_eval(2, 0, 0, 1, {1e-14, 0.0, 0.0}) ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-10));

  // unit L^2 norm over R^n
  for (int n : {2, 3}) {
    for (auto [m, k, l] : {std::array<int, 3>{0, 0, 1},
                           std::array<int, 3>{3, 1, 1},
                           std::array<int, 3>{5, 2, 1}}) {
      auto f = [&](const Point& x) {
        return eigenfunction_eval(n, m, k, l, x);
      };
      const SphericalDecomposition dec = decompose(f, n, m, 9.0, 14, 14);
      const double nrm = mixed_norm(dec, 2.0, WeightSpec::one(2.0));
      CHECK(nrm == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("eigenfunction satisfies the PDE under finite differences") {
  // H = -Laplace + |x|^2 on tilde-phi_{3,1,1} in R^3, eigenvalue 3 + 6 = 9
  const int n = 3, m = 3, k = 1, l = 1;
  auto f = [&](double x, double y, double z) {
    return eigenfunction_eval(n, m, k, l, {x, y, z});
  };
  auto H = [&](double x, double y, double z, double h) {
    const double lap =
        (f(x + h, y, z) + f(x - h, y, z) + f(x, y + h, z) + f(x, y - h, z) +
         f(x, y, z + h) + f(x, y, z - h) - 6.0 * f(x, y, z)) /
        (h * h);
    return -lap + (x * x + y * y + z * z) * f(x, y, z);
  };
  const double x = 0.8, y = -0.5, z = 1.1;
  const double want = (n + 2.0 * m) * f(x, y, z);
  const double e1 = std::fabs(H(x, y, z, 2e-3) - want);
  const double e2 = std::fabs(H(x, y, z, 1e-3) - want);
  CHECK(e1 / e2 > 3.0);
  CHECK(e1 / e2 < 5.0);
}

TEST_CASE("decompose of an eigenfunction hits a single Laguerre mode") {
  const int n = 2, m = 5, k = 2, l = 1;  // j = 1
  const int j = m - 2 * k;
  auto f = [&](const Point& x) { return eigenfunction_eval(n, m, k, l, x); };
  const SphericalDecomposition dec = decompose(f, n, 4, 9.0, 14, 14);
  const RieszOutput out = oscillator_riesz(dec, 5);
  for (const RieszChannel& ch : out.channels) {
    for (int kk = 0; kk < static_cast<int>(ch.c.size()); ++kk) {
      const double want = (ch.j == j && ch.l == l && kk == k) ? 1.0 : 0.0;
      CHECK(std::fabs(ch.c[static_cast<std::size_t>(kk)] - want) <= 1e-9);
    }
  }
}

TEST_CASE("mixed norm: Plancherel at p = 2 and single channels") {
  auto f = [](const Point& x) {
    const double r2 = x[0] * x[0] + x[1] * x[1];
    return (1.0 + x[0] + 0.3 * x[0] * x[1]) * std::exp(-r2 / 2.0);
  };
  const SphericalDecomposition dec = decompose(f, 2, 6, 9.0, 14, 14);
  // reference L^2 norm by direct planar quadrature
  const AngularGrid grid = AngularGrid::make(2, 20);
  double ref = 0.0;
  for (std::size_t ri = 0; ri < dec.r_nodes.size(); ++ri) {
    const double r = dec.r_nodes[ri];
    double ang_int = 0.0;
    for (std::size_t a = 0; a < grid.angles.size(); ++a) {
      const Point xp = unit_vector(2, grid.angles[a].data());
      ang_int += grid.weights[a] * sq(f({r * xp[0], r * xp[1], 0.0}));
    }
    ref += dec.r_weights[ri] * ang_int * r;
  }
  CHECK(mixed_norm(dec, 2.0, WeightSpec::one(2.0)) ==
        doctest::Approx(std::sqrt(ref)).epsilon(1e-9));
}

TEST_CASE("hermite oracle: annihilation and the one-rung ladder") {
  HermiteExpansion2 ground;
  ground.degree = 0;
  ground.coef = {1.0};
  CHECK(hermite_oracle_riesz(ground, 0.7, -0.4) == 0.0);

  HermiteExpansion2 f;
  f.degree = 1;
  f.coef = {0.0, 0.0, 1.0, 0.0};  // phi_{(1,0)}
  for (auto [x, y] : {std::pair{0.5, 0.2}, std::pair{-1.0, 1.3}}) {
    const double want = (1.0 / std::sqrt(2.0)) *
                        std::exp(-(x * x + y * y) / 2.0) / std::sqrt(M_PI);
    CHECK(hermite_oracle_riesz(f, x, y) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("spherical route of the one-rung ladder matches the closed form") {
  HermiteExpansion2 f;
  f.degree = 1;
  f.coef = {0.0, 0.0, 1.0, 0.0};
  const PointFn fp = [&](const Point& x) { return f.eval(x[0], x[1]); };
  const SphericalDecomposition dec = decompose(fp, 2, 3, 8.0, 12, 14);
  const RieszOutput out = oscillator_riesz(dec, 3);
  for (auto [x, y] : {std::pair{0.5, 0.2}, std::pair{-0.8, 1.1}}) {
    const double want = (1.0 / std::sqrt(2.0)) *
                        std::exp(-(x * x + y * y) / 2.0) / std::sqrt(M_PI);
    CHECK(out.eval_abs({x, y, 0.0}) == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("flagship equivalence at reduced size") {
  const int degree = 6;
  const HermiteExpansion2 f = HermiteExpansion2::random(degree, 20240917ull);
  const PointFn fp = [&](const Point& x) { return f.eval(x[0], x[1]); };
  const SphericalDecomposition dec = decompose(fp, 2, degree, 9.0, 14, 16);
  const RieszOutput out = oscillator_riesz(dec, degree / 2 + 1);

  double scale = 0.0;
  std::vector<std::pair<Point, double>> samples;
  for (int i = 0; i < 40; ++i) {
    const double r = 0.2 + 4.0 * i / 39.0;
    const double th = 0.17 + 6.1 * i / 39.0;
    const Point p{r * std::cos(th), r * std::sin(th), 0.0};
    const double want = hermite_oracle_riesz(f, p[0], p[1]);
    samples.push_back({p, want});
    scale = std::fmax(scale, want);
  }
  for (const auto& [p, want] : samples) {
    const double got = out.eval_abs(p);
    CHECK(std::fabs(got - want) / std::fmax(want, 1e-4 * scale) <= 1e-6);
  }
}
