#include "oscriesz/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscriesz/quadrature.hpp"

namespace oscriesz {

double mu_ball(double alpha, double x, double r) {
  if (!(alpha > -1.0)) throw std::domain_error("mu_ball: alpha must be > -1");
  if (!(x > 0.0) || !(r > 0.0))
    throw std::domain_error("mu_ball: x and r must be positive");
  const double e = 2.0 * alpha + 2.0;
  const double hi = std::pow(x + r, e);
  const double lo = (x > r) ? std::pow(x - r, e) : 0.0;
  return (hi - lo) / e;
}

double ball_equivalence_ratio(double alpha, double x, double y) {
  if (x == y) throw std::domain_error("ball_equivalence_ratio: x == y");
  const double r = std::fabs(x - y);
  return mu_ball(alpha, x, r) / (r * std::pow(x + y, 2.0 * alpha + 1.0));
}

double WeightSpec::eval(double x) const {
  switch (kind) {
    case Kind::constant_one:
      return 1.0;
    case Kind::power:
      return std::pow(x, delta);
    case Kind::tabulated: {
      if (table.empty()) throw std::logic_error("WeightSpec: empty table");
      if (x <= table.front().first) return table.front().second;
      if (x >= table.back().first) return table.back().second;
      auto it = std::lower_bound(
          table.begin(), table.end(), x,
          [](const std::pair<double, double>& a, double b) { return a.first < b; });
      const auto hi = *it;
      const auto lo = *(it - 1);
      const double t = (x - lo.first) / (hi.first - lo.first);
      return lo.second + t * (hi.second - lo.second);
    }
  }
  return 1.0;
}

WeightSpec WeightSpec::one(double p) {
  WeightSpec w;
  w.kind = Kind::constant_one;
  w.p = p;
  return w;
}

WeightSpec WeightSpec::power(double delta, double p) {
  WeightSpec w;
  w.kind = Kind::power;
  w.delta = delta;
  w.p = p;
  return w;
}

namespace {

// int_lo^hi x^e dx, e != -1 handled in closed form.
double power_integral(double e, double lo, double hi) {
  if (std::fabs(e + 1.0) < 1e-12) return std::log(hi / lo);
  return (std::pow(hi, e + 1.0) - std::pow(lo, e + 1.0)) / (e + 1.0);
}

}  // namespace

double ap_constant(double alpha, const WeightSpec& w,
                   const std::vector<Interval>& intervals) {
  if (intervals.empty())
    throw std::domain_error("ap_constant: need at least one interval");
  const double p = w.p;
  if (!(p > 1.0)) throw std::domain_error("ap_constant: p must be > 1");
  const double dual_pow = 1.0 / (p - 1.0);  // p'/p
  const double mu_exp = 2.0 * alpha + 1.0;

  double best = 0.0;
  for (const Interval& I : intervals) {
    if (!(I.lo > 0.0) || !(I.hi > I.lo))
      throw std::domain_error("ap_constant: intervals must lie in (0, inf)");
    const double mu = power_integral(mu_exp, I.lo, I.hi);
    double avg_w, avg_dual;
    if (w.kind == WeightSpec::Kind::power) {
      // Intervals sit strictly inside (0, inf), so every power is locally
      // integrable there; inadmissible exponents show up as a supremum that
      // diverges along growing interval families.
      avg_w = power_integral(w.delta + mu_exp, I.lo, I.hi) / mu;
      avg_dual = power_integral(-w.delta * dual_pow + mu_exp, I.lo, I.hi) / mu;
    } else {
      QuadratureRule rule = make_radial_rule(alpha, I.lo, I.hi, 8, 16);
      avg_w = rule.integrate([&](double x) { return w.eval(x); }) / mu;
      avg_dual = rule.integrate([&](double x) {
                   return std::pow(w.eval(x), -dual_pow);
                 }) /
                 mu;
      if (!std::isfinite(avg_dual))
        throw std::domain_error("ap_constant: weight not locally integrable");
    }
    best = std::fmax(best, avg_w * std::pow(avg_dual, p - 1.0));
  }
  return best;
}

std::vector<Interval> dyadic_intervals(int k_lo, int k_hi) {
  // All intervals with dyadic endpoints (2^i, 2^j), plus the shifted family
  // (2^i, 3*2^i). Wide intervals are essential: power weights are
  // self-similar, so unit-aspect intervals alone would never expose an
  // inadmissible exponent.
  std::vector<Interval> out;
  for (int i = k_lo; i < k_hi; ++i) {
    const double a = std::ldexp(1.0, i);
    out.push_back({a, 3.0 * a});
    for (int j = i + 1; j <= k_hi; ++j)
      out.push_back({a, std::ldexp(1.0, j)});
  }
  return out;
}

double TabulatedFn::eval(double xx) const {
  if (x.empty()) throw std::logic_error("TabulatedFn: empty");
  if (xx <= x.front()) return v.front();
  if (xx >= x.back()) return v.back();
  auto it = std::lower_bound(x.begin(), x.end(), xx);
  const std::size_t i = static_cast<std::size_t>(it - x.begin());
  const double t = (xx - x[i - 1]) / (x[i] - x[i - 1]);
  return v[i - 1] + t * (v[i] - v[i - 1]);
}

TabulatedFn TabulatedFn::geometric(double x_lo, double x_hi, int n,
                                   const std::function<double(double)>& f) {
  if (!(x_lo > 0.0) || !(x_hi > x_lo) || n < 2)
    throw std::domain_error("TabulatedFn::geometric: bad grid");
  TabulatedFn t;
  t.x.resize(static_cast<std::size_t>(n));
  t.v.resize(static_cast<std::size_t>(n));
  const double ratio = std::log(x_hi / x_lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    t.x[static_cast<std::size_t>(i)] = x_lo * std::exp(ratio * i);
    t.v[static_cast<std::size_t>(i)] = f(t.x[static_cast<std::size_t>(i)]);
  }
  return t;
}

namespace {

// Prefix data for fast trapezoid averages of |f| against d mu_alpha on the
// tabulation grid.
struct MuPrefix {
  std::vector<double> mass;  // mu_alpha(x_0, x_i)
  std::vector<double> intf;  // int_{x_0}^{x_i} |f| d mu_alpha

  MuPrefix(double alpha, const TabulatedFn& f) {
    const std::size_t n = f.x.size();
    mass.assign(n, 0.0);
    intf.assign(n, 0.0);
    const double e = 2.0 * alpha + 1.0;
    for (std::size_t i = 1; i < n; ++i) {
      const double h = f.x[i] - f.x[i - 1];
      const double da = std::pow(f.x[i - 1], e), db = std::pow(f.x[i], e);
      mass[i] = mass[i - 1] + 0.5 * h * (da + db);
      intf[i] = intf[i - 1] +
                0.5 * h * (std::fabs(f.v[i - 1]) * da + std::fabs(f.v[i]) * db);
    }
  }

  // average over grid index range [a, b]
  double average(std::size_t a, std::size_t b) const {
    const double m = mass[b] - mass[a];
    if (m <= 0.0) return 0.0;
    return (intf[b] - intf[a]) / m;
  }
};

}  // namespace

double maximal_fn(double alpha, const TabulatedFn& f, double x,
                  const std::vector<double>& radii) {
  if (radii.empty()) throw std::domain_error("maximal_fn: radii empty");
  const double e = 2.0 * alpha + 1.0;
  // Integrate on a fine union grid: tabulation nodes restricted to the
  // interval plus the endpoints themselves.
  auto mu_average = [&](double lo, double hi) {
    lo = std::fmax(lo, 1e-300);
    std::vector<double> pts{lo};
    for (double xx : f.x)
      if (xx > lo && xx < hi) pts.push_back(xx);
    pts.push_back(hi);
    double m = 0.0, num = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const double h = pts[i] - pts[i - 1];
      const double da = std::pow(pts[i - 1], e), db = std::pow(pts[i], e);
      m += 0.5 * h * (da + db);
      num += 0.5 * h *
             (std::fabs(f.eval(pts[i - 1])) * da + std::fabs(f.eval(pts[i])) * db);
    }
    return (m > 0.0) ? num / m : 0.0;
  };

  double best = 0.0;
  for (double rl : radii)
    for (double rr : radii)
      best = std::fmax(best, mu_average(x - rl, x + rr));
  return best;
}

TabulatedFn maximal_fn_grid(double alpha, const TabulatedFn& f) {
  MuPrefix pre(alpha, f);
  const std::size_t n = f.x.size();
  TabulatedFn out;
  out.x = f.x;
  out.v.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::fabs(f.v[i]);  // small-ball limit at a grid point
    for (std::size_t a = 0; a <= i; ++a)
      for (std::size_t b = i; b < n; ++b) {
        if (a == b) continue;
        best = std::fmax(best, pre.average(a, b));
      }
    out.v[i] = best;
  }
  return out;
}

namespace {

double lp_norm_mu(double alpha, double p, const TabulatedFn& f) {
  const double e = 2.0 * alpha + 1.0;
  double s = 0.0;
  for (std::size_t i = 1; i < f.x.size(); ++i) {
    const double h = f.x[i] - f.x[i - 1];
    s += 0.5 * h *
         (std::pow(std::fabs(f.v[i - 1]), p) * std::pow(f.x[i - 1], e) +
          std::pow(std::fabs(f.v[i]), p) * std::pow(f.x[i], e));
  }
  return std::pow(s, 1.0 / p);
}

}  // namespace

double maximal_op_norm(double alpha, double p, const TabulatedFn& h,
                       int iterations) {
  TabulatedFn f = h;
  double ratio = 1.0;
  for (int it = 0; it < iterations; ++it) {
    const double before = lp_norm_mu(alpha, p, f);
    TabulatedFn mf = maximal_fn_grid(alpha, f);
    const double after = lp_norm_mu(alpha, p, mf);
    ratio = std::fmax(ratio, after / before);
    f = std::move(mf);
  }
  return ratio;
}

TabulatedFn rubio_de_francia_weight(double alpha, double p,
                                    const TabulatedFn& h, int n_terms,
                                    double norm_bound) {
  (void)p;
  if (!(norm_bound > 0.0))
    throw std::domain_error("rubio_de_francia_weight: norm_bound must be > 0");
  TabulatedFn acc = h;
  TabulatedFn iter = h;
  double coef = 1.0;
  for (int m = 1; m <= n_terms; ++m) {
    iter = maximal_fn_grid(alpha, iter);
    coef /= 2.0 * norm_bound;
    for (std::size_t i = 0; i < acc.v.size(); ++i)
      acc.v[i] += coef * iter.v[i];
  }
  return acc;
}

}  // namespace oscriesz
