#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oscriesz/measure.hpp"
#include "oscriesz/quadrature.hpp"

using namespace oscriesz;

TEST_CASE("mu_ball closed forms") {
  CHECK(mu_ball(0.0, 1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  // Lebesgue length of (0.5, 1.5)
  CHECK(mu_ball(-0.5, 1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  // lower endpoint clamps to zero
  CHECK(mu_ball(2.0, 0.1, 1.0) ==
        doctest::Approx(std::pow(1.1, 6) / 6.0).epsilon(1e-14));
  CHECK_THROWS_AS(mu_ball(0.0, -1.0, 0.5), std::domain_error);
}

TEST_CASE("ball_equivalence_ratio values and limits") {
  // alpha = -1/2: mu is Lebesgue length of (x-r, x+r) clamped at 0; at
  // (1, 3) the ball is (0, 3), so the ratio is 3/2.
  CHECK(ball_equivalence_ratio(-0.5, 1.0, 3.0) ==
        doctest::Approx(1.5).epsilon(1e-14));
  // infinitesimal ball, alpha = 0: limit is 2^{-2 alpha} = 1
  CHECK(ball_equivalence_ratio(0.0, 1.0, 1.0 + 1e-6) ==
        doctest::Approx(1.0).epsilon(1e-5));
  // and for general alpha the small-ball limit is 2^{-2 alpha}
  CHECK(ball_equivalence_ratio(1.5, 2.0, 2.0 + 1e-7) ==
        doctest::Approx(std::pow(2.0, -3.0)).epsilon(1e-5));
  // exact scale invariance: both parts homogeneous of degree 2 alpha + 2
  for (double lam : {0.01, 7.0, 300.0})
    CHECK(ball_equivalence_ratio(3.7, lam * 1.0, lam * 2.5) ==
          doctest::Approx(ball_equivalence_ratio(3.7, 1.0, 2.5))
              .epsilon(1e-12));
  CHECK_THROWS_AS(ball_equivalence_ratio(0.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("ap_constant trivial weights") {
  const std::vector<Interval> iv = dyadic_intervals(-8, 8);
  CHECK(ap_constant(0.0, WeightSpec::one(2.0), iv) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(ap_constant(0.0, WeightSpec::power(0.0, 2.0), iv) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("ap_constant matches a quadrature oracle on power weights") {
  const double alpha = 0.0, p = 2.0, delta = 1.2;
  const std::vector<Interval> iv{{0.3, 1.7}, {2.0, 9.0}};
  const double got = ap_constant(alpha, WeightSpec::power(delta, p), iv);

  double best = 0.0;
  for (const Interval& I : iv) {
    const QuadratureRule rule = make_radial_rule(alpha, I.lo, I.hi, 16, 16);
    const double mu = rule.integrate([](double) { return 1.0; });
    const double aw =
        rule.integrate([&](double x) { return std::pow(x, delta); }) / mu;
    const double ad =
        rule.integrate([&](double x) { return std::pow(x, -delta); }) / mu;
    best = std::fmax(best, aw * ad);
  }
  CHECK(got == doctest::Approx(best).epsilon(1e-10));
}

TEST_CASE("ap_constant is monotone in the interval family") {
  const WeightSpec w = WeightSpec::power(1.5, 2.0);
  const double small = ap_constant(0.0, w, dyadic_intervals(-4, 4));
  const double large = ap_constant(0.0, w, dyadic_intervals(-10, 10));
  CHECK(small <= large * (1.0 + 1e-12));
}

TEST_CASE("ap_constant admissibility window for power weights") {
  // delta inside (-(2a+2), (2a+2)(p-1)) stabilizes, outside it diverges
  const double sup12 =
      ap_constant(0.0, WeightSpec::power(1.5, 2.0), dyadic_intervals(-12, 12));
  const double sup16 =
      ap_constant(0.0, WeightSpec::power(1.5, 2.0), dyadic_intervals(-16, 16));
  CHECK(std::fabs(sup16 - sup12) / sup12 < 0.02);

  const double bad12 =
      ap_constant(0.0, WeightSpec::power(2.1, 2.0), dyadic_intervals(-12, 12));
  const double bad20 =
      ap_constant(0.0, WeightSpec::power(2.1, 2.0), dyadic_intervals(-20, 20));
  CHECK(bad20 / bad12 > 1.5);
}

TEST_CASE("maximal function: averages of one and domination") {
  TabulatedFn one = TabulatedFn::geometric(0.1, 10.0, 64,
                                           [](double) { return 1.0; });
  std::vector<double> radii{0.01, 0.1, 1.0, 3.0};
  CHECK(maximal_fn(0.0, one, 2.0, radii) == doctest::Approx(1.0).epsilon(1e-12));

  TabulatedFn bump = TabulatedFn::geometric(0.1, 10.0, 128, [](double x) {
    return std::exp(-(x - 2.0) * (x - 2.0));
  });
  const TabulatedFn m = maximal_fn_grid(0.5, bump);
  for (std::size_t i = 0; i < bump.x.size(); ++i)
    CHECK(m.v[i] >= std::fabs(bump.v[i]) - 1e-14);
}

TEST_CASE("maximal function indicator example") {
  // f = 1_{(1,2)}, x = 3: the best interval is (1, 3+), giving
  // mu_0((1,2))/mu_0((1,3)) = 1.5/4 = 3/8 in the small right-radius limit.
  TabulatedFn f = TabulatedFn::geometric(0.05, 6.0, 600, [](double x) {
    return (x > 1.0 && x < 2.0) ? 1.0 : 0.0;
  });
  std::vector<double> radii;
  for (int i = 0; i < 240; ++i) radii.push_back(0.004 + i * 0.021);
  const double got = maximal_fn(0.0, f, 3.0, radii);
  CHECK(std::fabs(got - 0.375) / 0.375 < 0.02);
}

TEST_CASE("rubio de francia weight contracts") {
  TabulatedFn h = TabulatedFn::geometric(0.05, 8.0, 120, [](double x) {
    const double z = (x - 1.5) / 0.8;
    return std::exp(-z * z);
  });
  const double nb = 1.5 * maximal_op_norm(0.0, 2.0, h, 3);
  CHECK(nb > 1.0);

  SUBCASE("h == 1 gives the geometric-series constant") {
    TabulatedFn one = TabulatedFn::geometric(0.05, 8.0, 60,
                                             [](double) { return 1.0; });
    const int terms = 8;
    const TabulatedFn r = rubio_de_francia_weight(0.0, 2.0, one, terms, nb);
    double expect = 0.0;
    for (int m = 0; m <= terms; ++m) expect += std::pow(2.0 * nb, -m);
    for (double v : r.v) CHECK(v == doctest::Approx(expect).epsilon(1e-12));
  }

  SUBCASE("Rh >= h and the A1-type bound holds") {
    const TabulatedFn r = rubio_de_francia_weight(0.0, 2.0, h, 10, nb);
    for (std::size_t i = 0; i < h.x.size(); ++i) CHECK(r.v[i] >= h.v[i]);
    const TabulatedFn mr = maximal_fn_grid(0.0, r);
    for (std::size_t i = 0; i < h.x.size(); ++i)
      CHECK(mr.v[i] <= 2.0 * nb * r.v[i] * 1.05);
  }

  CHECK_THROWS_AS(rubio_de_francia_weight(0.0, 2.0, h, 4, 0.0),
                  std::domain_error);
}
