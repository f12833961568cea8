#pragma once

#include <functional>
#include <vector>

namespace oscriesz {

// mu_alpha(B(x, r) \cap (0, inf)) in closed form,
//   ((x+r)^{2a+2} - max(0, x-r)^{2a+2}) / (2a+2).
double mu_ball(double alpha, double x, double r);

// mu_alpha(B(x,|x-y|)) / (|x-y| (x+y)^{2a+1}); bounded above and below by
// constants depending only on alpha. Throws on x == y.
double ball_equivalence_ratio(double alpha, double x, double y);

// A weight w on (0, inf) together with the exponent p of the A_p^alpha
// context it is evaluated in.
struct WeightSpec {
  enum class Kind { constant_one, power, tabulated };
  Kind kind = Kind::constant_one;
  double delta = 0.0;  // for power weights w(x) = x^delta
  double p = 2.0;      // exponent in (1, inf)
  // geometric grid (x_i, w(x_i)) for tabulated weights
  std::vector<std::pair<double, double>> table;

  double eval(double x) const;
  static WeightSpec one(double p);
  static WeightSpec power(double delta, double p);
};

struct Interval {
  double lo, hi;
};

// max over the supplied intervals of
//   (mu(I)^{-1} int_I w dmu) (mu(I)^{-1} int_I w^{-p'/p} dmu)^{p/p'},
// a lower bound for the A_p^alpha constant of w. Power weights use closed
// forms; tabulated weights are integrated on a per-interval Gauss rule.
// Throws if w^{-p'/p} fails to be integrable on some interval.
double ap_constant(double alpha, const WeightSpec& w,
                   const std::vector<Interval>& intervals);

// Dyadic intervals (2^k, 2^{k+1}) for k in [k_lo, k_hi), plus the shifted
// family (2^k, 3*2^k); the documented interval family of the sweeps.
std::vector<Interval> dyadic_intervals(int k_lo, int k_hi);

// A function tabulated on a grid over (0, x_max]; piecewise-linear between
// nodes. Grids are geometric since d mu_alpha weights mass polynomially.
struct TabulatedFn {
  std::vector<double> x;
  std::vector<double> v;

  double eval(double xx) const;
  static TabulatedFn geometric(double x_lo, double x_hi, int n,
                               const std::function<double(double)>& f);
};

// Hardy-Littlewood maximal function for d mu_alpha over the two-sided
// interval family {(max(0, x - r_i), x + r_j)}: the supremum over intervals
// containing x realized on the supplied radius list.
double maximal_fn(double alpha, const TabulatedFn& f, double x,
                  const std::vector<double>& radii);

// M_alpha applied at every grid point of f, using interval endpoints drawn
// from the grid itself (prefix sums make each point O(grid^2)).
TabulatedFn maximal_fn_grid(double alpha, const TabulatedFn& f);

// Empirical L^p(d mu_alpha) operator norm of M_alpha on the grid of h,
// estimated by iterating f -> M_alpha f and measuring the norm ratio.
double maximal_op_norm(double alpha, double p, const TabulatedFn& h,
                       int iterations = 4);

// Rubio de Francia weight
//   Rh = sum_{m=0}^{n_terms} M_alpha^m h / (2 norm_bound)^m.
// Satisfies Rh >= h pointwise and M_alpha(Rh) <= 2 norm_bound Rh up to the
// truncation tail. norm_bound must be >= the operator norm of M_alpha.
TabulatedFn rubio_de_francia_weight(double alpha, double p,
                                    const TabulatedFn& h, int n_terms,
                                    double norm_bound);

}  // namespace oscriesz
