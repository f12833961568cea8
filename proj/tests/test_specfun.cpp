#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oscriesz/specfun.hpp"

using namespace oscriesz;

namespace {

// Brute-force scaled Bessel series in long double, independent of the
// library path (std::lgammal instead of the Lanczos sum, naive ordering).
double bessel_series_oracle(double alpha, double z, int terms) {
  long double sum = 0.0L;
  const long double lz = logl(static_cast<long double>(z) / 2.0L);
  for (int m = 0; m < terms; ++m) {
    const long double lt = (alpha + 2.0L * m) * lz - lgammal(m + 1.0L) -
                           lgammal(m + alpha + 1.0L) -
                           static_cast<long double>(z);
    sum += expl(lt);
  }
  return static_cast<double>(sum);
}

// Hermite polynomial coefficient route: H_k as explicit coefficients,
// evaluated by Horner, then normalized.
double hermite_coefficient_oracle(int k, double x) {
  std::vector<double> prev{1.0}, cur{0.0, 2.0};
  if (k == 0) cur = prev;
  for (int i = 1; i < k; ++i) {
    std::vector<double> next(static_cast<std::size_t>(i) + 2, 0.0);
    for (std::size_t p = 0; p < cur.size(); ++p) next[p + 1] += 2.0 * cur[p];
    for (std::size_t p = 0; p < prev.size(); ++p) next[p] -= 2.0 * i * prev[p];
    prev = cur;
    cur = next;
  }
  double h = 0.0;
  for (std::size_t p = cur.size(); p-- > 0;) h = h * x + cur[p];
  const double logc = -0.5 * (0.5 * std::log(M_PI) + k * std::log(2.0) +
                              std::lgamma(k + 1.0));
  return h * std::exp(logc - 0.5 * x * x);
}

}  // namespace

TEST_CASE("log_gamma exact points") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(0.57236494292470008707).epsilon(1e-14));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.0), std::domain_error);
}

TEST_CASE("log_gamma matches std::lgamma over [1e-3, 1e6]") {
  for (int i = 0; i <= 400; ++i) {
    const double x = 1e-3 * std::pow(1e9, i / 400.0);
    const double ref = std::lgamma(x);
    const double got = log_gamma(x);
    const double denom = std::fmax(std::fabs(ref), 1e-2);
    CHECK(std::fabs(got - ref) / denom <= 1e-13);
  }
}

TEST_CASE("gamma_ratio recurrence and asymptotics") {
  CHECK(gamma_ratio(10.0, 1.0, 0.0) == doctest::Approx(10.0).epsilon(1e-13));
  // Gamma(3.5)/Gamma(3) with Gamma(3.5) = 15/8 sqrt(pi)
  const double ref = (15.0 / 8.0) * std::sqrt(M_PI) / 2.0;
  CHECK(gamma_ratio(3.0, 0.5, 0.0) == doctest::Approx(ref).epsilon(1e-13));
  // large-z asymptotic z^{r-t}
  const double asym = std::pow(500.0, 2.5);
  CHECK(std::fabs(gamma_ratio(500.0, 2.5, 0.0) - asym) / asym < 0.01);
  CHECK_THROWS_AS(gamma_ratio(1.0, -2.0, 0.0), std::domain_error);
}

TEST_CASE("bessel_i_scaled special values and oracle") {
  CHECK(bessel_i_scaled(0.0, 0.0) == 1.0);
  const double half = std::sqrt(2.0 / (M_PI * 1.0)) * std::exp(-1.0) * std::sinh(1.0);
  CHECK(bessel_i_scaled(0.5, 1.0) == doctest::Approx(half).epsilon(1e-12));
  CHECK(bessel_i_scaled(3.7, 12.0) ==
        doctest::Approx(bessel_series_oracle(3.7, 12.0, 200)).epsilon(1e-10));
  // asymptotic branch against the series oracle
  CHECK(bessel_i_scaled(3.7, 40.0) ==
        doctest::Approx(bessel_series_oracle(3.7, 40.0, 400)).epsilon(1e-10));
  CHECK(bessel_i_scaled(0.0, 200.0) ==
        doctest::Approx(bessel_series_oracle(0.0, 200.0, 1200)).epsilon(1e-9));
  CHECK_THROWS_AS(bessel_i_scaled(0.0, -1.0), std::domain_error);
}

TEST_CASE("bessel_i_scaled stays bounded and decays") {
  // never exceeds 1 for alpha >= 0; decreasing past the maximum, which for
  // order a sits near z ~ a^2
  for (double alpha : {0.0, 0.5, 2.0, 5.0}) {
    double prev = 1e300;
    for (double z = std::fmax(5.0, 3.0 * alpha * alpha); z <= 1e8; z *= 3.0) {
      const double v = bessel_i_scaled(alpha, z);
      CHECK(v <= 1.0);
      CHECK(v > 0.0);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("laguerre_poly closed forms") {
  CHECK(laguerre_poly(0, 2.3, 7.0) == 1.0);
  CHECK(laguerre_poly(1, 0.0, 1.0) == doctest::Approx(0.0));
  // L_2^alpha(x) = x^2/2 - (alpha+2) x + (alpha+1)(alpha+2)/2
  CHECK(laguerre_poly(2, 1.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
  for (double x : {0.3, 1.7, 4.0}) {
    const double ref = x * x / 2.0 - 3.5 * x + 2.5 * 3.5 / 2.0;
    CHECK(laguerre_poly(2, 1.5, x) == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("laguerre_fn values") {
  CHECK(laguerre_fn(0, 0.0, 0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // l_0^{1/2}(1) = (2/Gamma(3/2))^{1/2} e^{-1/2}
  const double ref = std::sqrt(2.0 / std::tgamma(1.5)) * std::exp(-0.5);
  CHECK(laguerre_fn(0, 0.5, 1.0) == doctest::Approx(ref).epsilon(1e-13));
  // sequence evaluator consistent with the definition at larger order
  const double direct = std::sqrt(2.0 * std::tgamma(6.0) / std::tgamma(6.0 + 3.7)) *
                        laguerre_poly(5, 3.7, 2.25) * std::exp(-2.25 / 2.0);
  CHECK(laguerre_fn(5, 3.7, 1.5) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("laguerre_fn_seq survives extreme scales") {
  // large order + large argument: the starting value e^{-x^2/2} norm_0
  // underflows a plain double long before the oscillatory region
  const auto seq = laguerre_fn_seq(400, 60.0, 30.0);
  for (double v : seq) CHECK(std::isfinite(v));
  CHECK(std::fabs(seq[0]) < 1e-20);
  // x = 30 lies inside the oscillatory region once 4k+2a+2 > x^2, i.e.
  // k ~ 195; there the natural O(1) quantity is l_k(x) x^{alpha+1/2}
  double mx = 0.0;
  for (int k = 150; k <= 250; ++k)
    mx = std::fmax(mx, std::fabs(seq[static_cast<std::size_t>(k)]));
  const double log10_scaled = std::log10(mx) + 60.5 * std::log10(30.0);
  CHECK(log10_scaled > -3.0);
  CHECK(log10_scaled < 3.0);
}

TEST_CASE("hermite_fn values and oracle") {
  CHECK(hermite_fn(0, 0.0) == doctest::Approx(std::pow(M_PI, -0.25)).epsilon(1e-14));
  const double h1 = std::sqrt(2.0) * std::pow(M_PI, -0.25) * std::exp(-0.5);
  CHECK(hermite_fn(1, 1.0) == doctest::Approx(h1).epsilon(1e-14));
  for (double x : {-2.0, 0.3, 2.0}) {
    CHECK(hermite_fn(10, x) ==
          doctest::Approx(hermite_coefficient_oracle(10, x)).epsilon(1e-10));
  }
}

TEST_CASE("hermite raising identity via polynomial-route derivative") {
  for (int k = 0; k <= 30; ++k) {
    double scale = 0.0;
    for (int i = 0; i <= 60; ++i) {
      const double x = -3.0 + 0.1 * i;
      scale = std::fmax(scale, std::fabs(std::sqrt(2.0 * (k + 1.0)) *
                                         hermite_fn(k + 1, x)));
    }
    for (int i = 0; i <= 60; ++i) {
      const double x = -3.0 + 0.1 * i;
      const double lhs = x * hermite_fn(k, x) - hermite_fn_deriv(k, x);
      const double rhs = std::sqrt(2.0 * (k + 1.0)) * hermite_fn(k + 1, x);
      CHECK(std::fabs(lhs - rhs) / std::fmax(std::fabs(rhs), 1e-4 * scale) <=
            1e-9);
    }
  }
}

TEST_CASE("laguerre ladder identity, derivative from the polynomial route") {
  for (double alpha : {-0.5, 0.0, 3.7}) {
    for (int k = 1; k <= 30; ++k) {
      double scale = 0.0;
      for (int i = 0; i <= 80; ++i) {
        const double x = 0.05 + (6.0 - 0.05) * i / 80.0;
        scale = std::fmax(scale, std::fabs(2.0 * std::sqrt(double(k)) * x *
                                           laguerre_fn(k - 1, alpha + 1.0, x)));
      }
      for (int i = 0; i <= 80; ++i) {
        const double x = 0.05 + (6.0 - 0.05) * i / 80.0;
        const double lhs =
            laguerre_fn_deriv(k, alpha, x) + x * laguerre_fn(k, alpha, x);
        const double rhs = -2.0 * std::sqrt(double(k)) * x *
                           laguerre_fn(k - 1, alpha + 1.0, x);
        CHECK(std::fabs(lhs - rhs) / std::fmax(std::fabs(rhs), 1e-4 * scale) <=
              1e-8);
      }
    }
  }
}
