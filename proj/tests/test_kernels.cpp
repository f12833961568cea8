#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oscriesz/kernels.hpp"
#include "oscriesz/rng.hpp"

using namespace oscriesz;

namespace {

// Brute-force oracle: midpoint rule on (0, 0.9], then the substitution
// xi = 1 - e^{-tau} to resolve the (1-xi)^{m-1/2}-type endpoint. Entirely
// independent of the exponentially fitted panels in the library.
double xi_integral_bruteforce(double m, double q_plus, double k_extra,
                              double q_minus, const double* laurent) {
  auto integrand = [&](double xi) {
    double f = 0.0;
    for (int p = -2; p <= 2; ++p) f += laurent[p + 2] * std::pow(xi, p);
    return f * std::pow(xi, -k_extra) * beta_fn(m, xi) *
           std::exp(-0.25 * q_plus / xi -
                    (q_minus > 0 ? 0.25 * xi * q_minus : 0.0));
  };
  const int n1 = 300000;
  double sum = 0.0;
  for (int i = 0; i < n1; ++i) {
    const double xi = 0.9 * (i + 0.5) / n1;
    sum += 0.9 * integrand(xi) / n1;
  }
  const int n2 = 300000;
  const double tau_lo = -std::log(0.1), tau_hi = 45.0;
  for (int i = 0; i < n2; ++i) {
    const double tau = tau_lo + (tau_hi - tau_lo) * (i + 0.5) / n2;
    const double ximinus = std::exp(-tau);  // 1 - xi
    const double xi = 1.0 - ximinus;
    if (xi >= 1.0) break;  // underflow of 1 - xi; the tail is zero anyway
    sum += (tau_hi - tau_lo) * integrand(xi) * ximinus / n2;
  }
  return sum;
}

}  // namespace

TEST_CASE("beta_fn closed-form value and domain") {
  // sqrt(2/pi) * 0.75 * (1/0.75) * (log 3)^{-1/2}
  const double want = std::sqrt(2.0 / M_PI) / std::sqrt(std::log(3.0));
  CHECK(beta_fn(0.0, 0.5) == doctest::Approx(want).epsilon(1e-13));
  CHECK_THROWS_AS(beta_fn(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), std::domain_error);
}

TEST_CASE("beta_fn small-xi bound") {
  // beta_a(xi) <= C 2^{-a} xi^{-a-3/2} on (0, 1/2]; the sharp prefactor
  // tends to 1/(2 sqrt(pi)) as xi -> 0
  double worst = 0.0;
  for (double alpha : {-0.5, 0.0, 1.0, 7.0, 40.0}) {
    for (int i = 1; i <= 500; ++i) {
      const double xi = 0.5 * i / 500.0;
      const double ratio = std::exp(log_beta_fn(alpha, xi) +
                                    alpha * std::log(2.0) +
                                    (alpha + 1.5) * std::log(xi));
      worst = std::fmax(worst, ratio);
    }
  }
  CHECK(worst < 0.33);
  CHECK(worst > 0.1);
}

TEST_CASE("beta_fn endpoint asymptotics at xi -> 1") {
  // beta_a(xi) (1-xi^2)^{-a} (-log(1-xi^2))^{1/2} -> sqrt(2/pi) 2^{-1-a}
  for (double alpha : {-0.5, 0.0, 2.0}) {
    const double limit = std::sqrt(2.0 / M_PI) * std::pow(2.0, -1.0 - alpha);
    double prev_err = 1e300;
    for (int mexp = 2; mexp <= 8; ++mexp) {
      const double ximinus = std::pow(10.0, -mexp);
      const double xi = 1.0 - ximinus;
      const double one_minus_sq = ximinus * (1.0 + xi);
      const double v = beta_fn(alpha, xi) * std::pow(one_minus_sq, -alpha) *
                       std::sqrt(-std::log(one_minus_sq));
      const double err = std::fabs(v - limit) / limit;
      CHECK(err < prev_err + 1e-12);
      prev_err = err;
    }
    // convergence is logarithmic (the Meda factor carries a +2 log 2 shift),
    // so only a few percent of residual is reachable by xi = 1 - 1e-8
    CHECK(prev_err < 5e-2);
  }
}

TEST_CASE("QPair invariants") {
  SplitMix64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const double x = rng.uniform(0.01, 5.0);
    const double y = rng.uniform(0.01, 5.0);
    const double s = rng.uniform(-1.0, 1.0);
    const QPair q = QPair::at(x, y, s);
    CHECK(q.q_plus >= (x - y) * (x - y) - 1e-12);
    CHECK(q.q_minus >= 0.0);
    // q+ q- = (x^2+y^2)^2 - 4 x^2 y^2 s^2 >= (x^2 - y^2)^2
    const double prod = q.q_plus * q.q_minus;
    const double want = std::pow(x * x + y * y, 2) - 4.0 * x * x * y * y * s * s;
    CHECK(prod == doctest::Approx(want).epsilon(1e-12));
    // |x - ys| <= sqrt(q_minus)
    CHECK(std::fabs(x - y * s) <= std::sqrt(q.q_minus) + 1e-12);
  }
}

TEST_CASE("xi_integral against midpoint brute force") {
  SUBCASE("plain integrand") {
    const double c[5] = {0.0, 0.0, 1.0, 0.0, 0.0};
    XiIntegrand fi;
    const LogVal got = xi_integral(0.7, 2.3, fi, 96);
    const double ref = xi_integral_bruteforce(0.7, 2.3, 0.0, -1.0, c);
    CHECK(got.value() == doctest::Approx(ref).epsilon(1e-7));
  }
  SUBCASE("laurent factor, extra power and q_minus") {
    const double c[5] = {0.0, -1.3, 0.4, 0.9, 0.0};
    XiIntegrand fi;
    fi.c[0] = 0.0;
    fi.c[1] = -1.3;
    fi.c[2] = 0.4;
    fi.c[3] = 0.9;
    fi.c[4] = 0.0;
    fi.k_extra = 0.5;
    fi.q_minus = 1.7;
    const LogVal got = xi_integral(1.2, 0.8, fi, 96);
    const double ref = xi_integral_bruteforce(1.2, 0.8, 0.5, 1.7, c);
    CHECK(got.value() == doctest::Approx(ref).epsilon(1e-6));
  }
  SUBCASE("atomic-order edge m = -1/2") {
    XiIntegrand fi;
    const LogVal got = xi_integral(-0.5, 1.0, fi, 96);
    const double c[5] = {0.0, 0.0, 1.0, 0.0, 0.0};
    const double ref = xi_integral_bruteforce(-0.5, 1.0, 0.0, -1.0, c);
    CHECK(got.value() == doctest::Approx(ref).epsilon(1e-6));
  }
  SUBCASE("large q: the integral dies exponentially, not polynomially") {
    const double c[5] = {0.0, 0.0, 1.0, 0.0, 0.0};
    XiIntegrand fi;
    fi.k_extra = 1.0;
    const LogVal got = xi_integral(3.0, 30.0, fi, 96);
    const double ref = xi_integral_bruteforce(3.0, 30.0, 1.0, -1.0, c);
    CHECK(got.value() == doctest::Approx(ref).epsilon(1e-6));
    // already far below the q^{-(m+k+1/2)} envelope at q = 30
    const double envelope = std::exp(3.0 * std::log(2.0) + std::lgamma(4.5) -
                                     4.5 * std::log(30.0));
    CHECK(got.value() < 0.2 * envelope);
  }
}

TEST_CASE("logval arithmetic") {
  const LogVal a = LogVal::from_value(3.0);
  const LogVal b = LogVal::from_value(-2.0);
  CHECK(logval_add(a, b).value() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(logval_add(b, b).value() == doctest::Approx(-4.0).epsilon(1e-14));
  CHECK(logval_add(a, LogVal{}).value() == doctest::Approx(3.0));
  CHECK(a.scaled(std::log(2.0)).value() == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("riesz kernel: refinement honesty and diagonal guard") {
  const TwistParams tw{1.0, 3};
  const KernelEval e = riesz_kernel(0.0, tw, 1.0, 2.0);
  CHECK(std::isfinite(e.value));
  CHECK(e.est_abs_error >= 0.0);
  // halving the panel width (doubling nodes) moves the value by less than
  // the reported estimate
  const KernelEval fine =
      riesz_kernel(0.0, tw, 1.0, 2.0, KernelQuad{96, true});
  CHECK(std::fabs(fine.value - e.value) <= std::fmax(e.est_abs_error, 1e-14));
  const KernelEval ang = angular_kernel(0.0, TwistParams{1.0, 2}, 1.0, 2.0);
  const KernelEval angf =
      angular_kernel(0.0, TwistParams{1.0, 2}, 1.0, 2.0, KernelQuad{96, true});
  CHECK(std::fabs(angf.value - ang.value) <=
        std::fmax(ang.est_abs_error, 1e-14));
  CHECK_THROWS_AS(riesz_kernel(0.0, tw, 1.0, 1.0), std::domain_error);
}

TEST_CASE("j = 0 kernel carries no twist") {
  // at j = 0 the kernel must not depend on the twist exponent a
  for (auto [x, y] : {std::pair{0.7, 1.9}, std::pair{3.0, 0.4}}) {
    const double k1 = riesz_kernel(0.5, TwistParams{1.0, 0}, x, y).value;
    const double k2 = riesz_kernel(0.5, TwistParams{1.5, 0}, x, y).value;
    CHECK(k1 == k2);
  }
}

TEST_CASE("calculus maximum behind the exponential-weight inequality") {
  // max over x > 0 of x^3 e^{-x} is 27 e^{-3}, attained at x = 3
  double mx = 0.0;
  for (int i = 1; i <= 3000; ++i) {
    const double x = 0.005 * i;
    mx = std::fmax(mx, x * x * x * std::exp(-x));
  }
  CHECK(mx == doctest::Approx(27.0 * std::exp(-3.0)).epsilon(1e-4));
  CHECK(mx <= 27.0 * std::exp(-3.0) + 1e-12);
}

TEST_CASE("riesz kernel gradients match central differences") {
  for (int j : {0, 2, 9}) {
    const TwistParams tw{1.0, j};
    for (auto [x, y] : {std::pair{0.7, 1.5}, std::pair{2.0, 0.9}}) {
      const KernelGrad g = riesz_kernel_grad(0.0, tw, x, y, {48, false});
      const double h = 1e-5 * std::fabs(x - y);
      const KernelQuad kq{48, false};
      const double fdx = (riesz_kernel(0.0, tw, x + h, y, kq).value -
                          riesz_kernel(0.0, tw, x - h, y, kq).value) /
                         (2.0 * h);
      const double fdy = (riesz_kernel(0.0, tw, x, y + h, kq).value -
                          riesz_kernel(0.0, tw, x, y - h, kq).value) /
                         (2.0 * h);
      CHECK(std::fabs(g.ddx.value - fdx) <= 1e-3 * std::fabs(g.ddx.value));
      CHECK(std::fabs(g.ddy.value - fdy) <= 1e-3 * std::fabs(g.ddy.value));
    }
  }
}

TEST_CASE("angular kernel positivity and gradient") {
  const TwistParams tw{1.5, 2};
  for (auto [x, y] : {std::pair{0.5, 1.1}, std::pair{2.2, 0.6}}) {
    const KernelEval e = angular_kernel(0.0, tw, x, y);
    CHECK(e.value > 0.0);
    const KernelGrad g = angular_kernel_grad(0.0, tw, x, y, {48, false});
    const double h = 1e-5 * std::fabs(x - y);
    const KernelQuad kq{48, false};
    const double fdx = (angular_kernel(0.0, tw, x + h, y, kq).value -
                        angular_kernel(0.0, tw, x - h, y, kq).value) /
                       (2.0 * h);
    const double fdy = (angular_kernel(0.0, tw, x, y + h, kq).value -
                        angular_kernel(0.0, tw, x, y - h, kq).value) /
                       (2.0 * h);
    CHECK(std::fabs(g.ddx.value - fdx) <= 1e-3 * std::fabs(g.ddx.value));
    CHECK(std::fabs(g.ddy.value - fdy) <= 1e-3 * std::fabs(g.ddy.value));
  }
}

TEST_CASE("atomic-order kernel path (alpha = -1/2, j = 0)") {
  const TwistParams tw{1.0, 0};
  const KernelEval e = riesz_kernel(-0.5, tw, 0.8, 1.9);
  CHECK(std::isfinite(e.value));
  CHECK(e.value != 0.0);
}

TEST_CASE("lemma A ratio: bounded with the sup on the documented grid") {
  // The ratio increases in m and decreases in q+, saturating as m grows;
  // the grid supremum sits at (m = 40, q+ = 0.1).
  for (double k : {0.5, 1.0, 2.0}) {
    const double anchor = lemma_a_check(k, 40.0, 0.1);
    CHECK(anchor > 0.0);
    for (int m = 0; m <= 40; m += 5)
      for (double q : {0.1, 1.0, 10.0})
        CHECK(lemma_a_check(k, m, q) <= anchor * (1.0 + 1e-9));
  }
  // uniformity in m away from the lossy small-m large-q corner, and
  // saturation of the ratio everywhere
  for (double q : {0.1, 1.0}) {
    const double r40 = lemma_a_check(1.0, 40.0, q);
    const double r1 = lemma_a_check(1.0, 1.0, q);
    CHECK(r40 / r1 <= 3.0);
    CHECK(r40 / r1 >= 1.0 / 3.0);
  }
  for (double q : {0.1, 1.0, 10.0})
    CHECK(lemma_a_check(1.0, 40.0, q) / lemma_a_check(1.0, 20.0, q) <= 1.25);
  CHECK_THROWS_AS(lemma_a_check(0.0, -0.5, 1.0), std::domain_error);
}

TEST_CASE("lemma 0: closed-form oracle point and homogeneity") {
  // c=-1/2, d=1, lambda=1/2, A=2, B=1 makes the (1-s) exponent vanish:
  // LHS = int_0^1 (2-s)^{-3/2} ds = 2 (1 - 1/sqrt(2))
  const double r = lemma0_check(-0.5, 2.0, 1.0, 0.5, 1.0);
  const double lhs_closed = 2.0 * (1.0 - 1.0 / std::sqrt(2.0));
  const double cd =
      std::exp(std::lgamma(1.0) + std::lgamma(0.5) - std::lgamma(1.5));
  const double rhs = cd / (std::pow(2.0, 0.0) * 1.0 * std::pow(1.0, 0.5));
  CHECK(r == doctest::Approx(lhs_closed / rhs).epsilon(1e-10));

  for (double t : {3.0, 50.0}) {
    const double r1 = lemma0_check(-0.5, 2.0, 1.0, 1.0, 2.0);
    const double rt = lemma0_check(-0.5, 2.0 * t, t, 1.0, 2.0);
    CHECK(rt == doctest::Approx(r1).epsilon(1e-10));
  }
  // ratio decreases in d: the anchor at the smallest documented d is the sup
  double prev = 1e300;
  for (double d : {0.5, 1.0, 2.0, 5.0, 20.0}) {
    const double rd = lemma0_check(-0.5, 2.0, 1.0, 1.0, d);
    CHECK(rd < prev);
    prev = rd;
  }
  CHECK_THROWS_AS(lemma0_check(0.0, 1.0, 2.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(lemma0_check(-0.5, 2.0, 1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("lemma breve: symmetric in x and y, decaying in j") {
  const double r12 = lemma_breve_check(0.0, 1.0, 7, 1.0, 1.0, 2.0);
  const double r21 = lemma_breve_check(0.0, 1.0, 7, 1.0, 2.0, 1.0);
  CHECK(r12 == r21);  // q_+ is symmetric, evaluation is bitwise identical

  // at fixed (x, y) the estimate's slack grows with j, so the measured
  // ratio decreases monotonically: j = 1 anchors the calibration
  for (double k : {0.5, 1.0, 2.0}) {
    double prev = 1e300;
    for (int j = 1; j <= 40; ++j) {
      const double r = lemma_breve_check(0.0, 1.0, j, k, 1.0, 2.0);
      CHECK(r > 0.0);
      CHECK(r <= prev * (1.0 + 1e-12));
      prev = r;
    }
  }
}
