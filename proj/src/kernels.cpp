#include "oscriesz/kernels.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "oscriesz/specfun.hpp"

namespace oscriesz {

namespace {
constexpr double kLogHalf2OverPi = -0.22579135264472743;  // log(sqrt(2/pi))
}  // namespace

double LogVal::value() const {
  if (sign == 0.0) return 0.0;
  if (log_abs < -745.0) return 0.0;
  return sign * std::exp(log_abs);
}

LogVal LogVal::scaled(double log_factor, double sign_factor) const {
  if (sign == 0.0 || sign_factor == 0.0) return {};
  return {log_abs + log_factor, sign * (sign_factor > 0 ? 1.0 : -1.0)};
}

LogVal LogVal::from_value(double v) {
  if (v == 0.0) return {};
  return {std::log(std::fabs(v)), v > 0 ? 1.0 : -1.0};
}

LogVal logval_add(const LogVal& a, const LogVal& b) {
  if (a.sign == 0.0) return b;
  if (b.sign == 0.0) return a;
  const LogVal& hi = (a.log_abs >= b.log_abs) ? a : b;
  const LogVal& lo = (a.log_abs >= b.log_abs) ? b : a;
  const double r = hi.sign + lo.sign * std::exp(lo.log_abs - hi.log_abs);
  if (r == 0.0) return {};
  return {hi.log_abs + std::log(std::fabs(r)), r > 0 ? 1.0 : -1.0};
}

double log_beta_fn(double alpha, double xi) {
  if (!(xi > 0.0) || !(xi < 1.0))
    throw std::domain_error("beta_fn: xi must lie in (0, 1)");
  const double log_one_minus_xi2 = std::log1p(-xi * xi);
  const double log_meda = std::log(std::log1p(xi) - std::log1p(-xi));
  return kLogHalf2OverPi +
         (1.0 + alpha) * (log_one_minus_xi2 - std::log(2.0 * xi)) -
         log_one_minus_xi2 - 0.5 * log_meda;
}

double beta_fn(double alpha, double xi) {
  return std::exp(log_beta_fn(alpha, xi));
}

namespace {

// Running signed sum of exp(log_term), renormalized against the largest
// exponent seen.
struct TermAccum {
  double max_log = -1e300;
  double sum = 0.0;

  void add(double log_term, double sign) {
    if (sign == 0.0 || !std::isfinite(log_term)) return;
    if (log_term > max_log) {
      sum *= std::exp(max_log - log_term);
      max_log = log_term;
    }
    sum += sign * std::exp(log_term - max_log);
  }

  LogVal total() const {
    if (sum == 0.0) return {};
    return {max_log + std::log(std::fabs(sum)), sum > 0 ? 1.0 : -1.0};
  }
};

const std::pair<std::vector<double>, std::vector<double>>& laguerre_base(
    int n) {
  thread_local std::map<int, std::pair<std::vector<double>, std::vector<double>>>
      cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_laguerre(n, 0.0)).first;
  return it->second;
}

// s-independent tables for the xi-integral panels at fixed (m, n).
struct XiTables {
  // left panel: exp-fitted Gauss-Laguerre base with log-weights
  std::vector<double> gu, log_gw;
  // right panel: xi nodes plus the full s-independent log-weight
  std::vector<double> xi_r, inv_xi_r, log_xi_r, base_r, w_r;
};

const XiTables& xi_tables(double m, int n) {
  thread_local std::map<std::pair<double, int>, XiTables> cache;
  const auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  XiTables t;
  const auto& [gu, gw] = laguerre_base(n);
  t.gu = gu;
  t.log_gw.resize(gw.size());
  for (std::size_t i = 0; i < gw.size(); ++i) t.log_gw[i] = std::log(gw[i]);

  // right panel: w = w0 + z/(m+1), xi = sqrt(1 - e^{-w}); the weight
  // collects beta, the jacobian dxi = e^{-w}/(2 xi) dw, the scaling by m+1
  // and the Gauss-Laguerre factor e^{+z} * gw.
  const double w0 = std::log(4.0 / 3.0);
  const double mp1 = m + 1.0;
  t.xi_r.resize(gu.size());
  t.inv_xi_r.resize(gu.size());
  t.log_xi_r.resize(gu.size());
  t.base_r.resize(gu.size());
  t.w_r.resize(gu.size());
  for (std::size_t i = 0; i < gu.size(); ++i) {
    const double w = w0 + gu[i] / mp1;
    const double xi = std::sqrt(-std::expm1(-w));
    const double log2xi = std::log(2.0 * xi);
    const double log_beta = kLogHalf2OverPi + (1.0 + m) * (-w - log2xi) + w -
                            0.5 * std::log(w + 2.0 * std::log1p(xi));
    const double log_jac = -w - log2xi - std::log(mp1);
    t.xi_r[i] = xi;
    t.inv_xi_r[i] = 1.0 / xi;
    t.log_xi_r[i] = std::log(xi);
    t.w_r[i] = w;
    t.base_r[i] = log_beta + log_jac + gu[i] + t.log_gw[i];
  }
  return cache.emplace(key, std::move(t)).first->second;
}

inline double laurent_at(const double* c, double xi, double inv) {
  return ((c[4] * xi + c[3]) * xi + c[2]) + inv * (c[1] + inv * c[0]);
}

}  // namespace

LogVal xi_integral(double m, double q_plus, const XiIntegrand& fi, int n_xi) {
  if (!(m >= -0.5))
    throw std::domain_error("xi_integral: order must be >= -1/2");
  if (!(q_plus > 0.0))
    throw std::domain_error("xi_integral: q_plus must be > 0");
  const XiTables& t = xi_tables(m, n_xi);
  const bool with_qm = fi.q_minus > 0.0;

  TermAccum acc;

  // Left panel (0, 1/2]: xi = qq/v with qq = q_plus/4, v = 2 qq + u. All
  // beta factors are expressed through v to avoid cancellations:
  //   1 - xi^2 = (v-qq)(v+qq)/v^2,   log((1+xi)/(1-xi)) = L2 - L1.
  const double qq = 0.25 * q_plus;
  const double log_qq = std::log(qq);
  const double base_left = kLogHalf2OverPi - 2.0 * qq;
  for (std::size_t i = 0; i < t.gu.size(); ++i) {
    const double u = t.gu[i];
    const double v = 2.0 * qq + u;
    const double xi = qq / v;
    const double f = laurent_at(fi.c, xi, v / qq);
    if (f == 0.0) continue;
    const double l1 = std::log(qq + u);        // log(v - qq)
    const double l2 = std::log(3.0 * qq + u);  // log(v + qq)
    const double lv = std::log(v);
    const double log_one_minus_xi2 = l1 + l2 - 2.0 * lv;
    const double log_2xi = std::log(2.0) + log_qq - lv;
    const double log_xi = log_qq - lv;
    const double log_beta = (1.0 + m) * (log_one_minus_xi2 - log_2xi) -
                            log_one_minus_xi2 - 0.5 * std::log(l2 - l1);
    double log_term = base_left + log_beta - fi.k_extra * log_xi + log_qq -
                      2.0 * lv + t.log_gw[i] + std::log(std::fabs(f));
    if (with_qm) log_term -= 0.25 * xi * fi.q_minus;
    acc.add(log_term, f > 0 ? 1.0 : -1.0);
  }

  // Right panel (1/2, 1): everything s-independent is in base_r.
  for (std::size_t i = 0; i < t.xi_r.size(); ++i) {
    const double xi = t.xi_r[i];
    const double f = laurent_at(fi.c, xi, t.inv_xi_r[i]);
    if (f == 0.0) continue;
    double log_term = t.base_r[i] - 0.25 * q_plus * t.inv_xi_r[i] -
                      fi.k_extra * t.log_xi_r[i] + std::log(std::fabs(f));
    if (with_qm) log_term -= 0.25 * xi * fi.q_minus;
    acc.add(log_term, f > 0 ? 1.0 : -1.0);
  }

  return acc.total();
}

namespace {

// s-moments of e^{-Bs} against Pi_m(ds) via the Schlaefli identity:
//   M_0(B) = B^{-m} I_m(B),  M_1 = -B^{-m} I_{m+1}(B),
//   M_2 = B^{-m} [I_m(B) - ((2m+1)/B) I_{m+1}(B)],
// carried as log(M_0) - B (the +B cancels against the heat exponent, whose
// stable combined form is -(x-y)^2/(4 xi) - xi (x+y)^2 / 4) plus the ratios
// r1 = -M_1/M_0 and r2 = M_2/M_0.
struct Moments {
  double log_m0_core;  // log(M_0) - B
  double r1, r2;
};

Moments bessel_moments(double m, double B, double logB) {
  Moments mm;
  if (B < 1e-6) {
    mm.log_m0_core = -m * std::log(2.0) - log_gamma(m + 1.0) - B;
    mm.r1 = 0.5 * B / (m + 1.0);
    mm.r2 = 1.0 / (2.0 * m + 2.0);
    return mm;
  }
  const double li_m = log_bessel_i_scaled(m, B);
  const double li_m1 = log_bessel_i_scaled(m + 1.0, B);
  mm.log_m0_core = li_m - m * logB;
  mm.r1 = std::exp(li_m1 - li_m);
  mm.r2 = 1.0 - (2.0 * m + 1.0) / B * mm.r1;
  return mm;
}

enum class KIntegrand {
  value,       // Riesz kernel integrand
  dx,          // its x-derivative under the integral sign
  dy,
  angular,     // plain heat-type integrand (angular kernel)
  angular_dx,
  angular_dy,
  moment0      // xi^{-k} beta e^{-q_+/4 xi} integrated in s only
};

// P(xi) such that the s-integrated integrand equals M_0 e^{-A} P(xi).
double moment_poly(KIntegrand which, double x, double y, double xi,
                   double inv_xi, const Moments& mm) {
  const double half_inv = 0.5 * inv_xi;
  const double half_xi = 0.5 * xi;
  switch (which) {
    case KIntegrand::value:
      return x - half_inv * (x - y * mm.r1) - half_xi * (x + y * mm.r1);
    case KIntegrand::dx: {
      const double p = x - half_inv * (x - y * mm.r1) - half_xi * (x + y * mm.r1);
      const double qb = x * mm.r1 - half_inv * (x * mm.r1 - y * mm.r2) -
                        half_xi * (x * mm.r1 + y * mm.r2);
      const double ax = x * (half_inv + half_xi);
      const double bx = y * (half_inv - half_xi);
      return (1.0 - half_inv - half_xi) + qb * bx - ax * p;
    }
    case KIntegrand::dy: {
      const double p = x - half_inv * (x - y * mm.r1) - half_xi * (x + y * mm.r1);
      const double qb = x * mm.r1 - half_inv * (x * mm.r1 - y * mm.r2) -
                        half_xi * (x * mm.r1 + y * mm.r2);
      const double ay = y * (half_inv + half_xi);
      const double by = x * (half_inv - half_xi);
      return mm.r1 * (half_inv - half_xi) + qb * by - ay * p;
    }
    case KIntegrand::angular:
      return 1.0;
    case KIntegrand::angular_dx:
      return mm.r1 * y * (half_inv - half_xi) - x * (half_inv + half_xi);
    case KIntegrand::angular_dy:
      return mm.r1 * x * (half_inv - half_xi) - y * (half_inv + half_xi);
    case KIntegrand::moment0:
      return 1.0;
  }
  return 0.0;
}

// int_0^1 xi^{-k} beta_m(xi) [s-integrated factor](xi) dxi on the two
// exponentially fitted panels. For the heat-type integrands the Bessel
// argument is B = xy (1/(2 xi) - xi/2) and the decay combination is
// -A + B = -(x-y)^2/(4 xi) - xi (x+y)^2/4; the moment0 variant (used by the
// double-integral lemma) has B = xy/(2 xi) and decay -(x-y)^2/(4 xi).
LogVal kernel_xi_integral(double m, double x, double y, KIntegrand which,
                          double k_extra, int n_xi) {
  const XiTables& t = xi_tables(m, n_xi);
  const bool heat_tail = (which != KIntegrand::moment0);
  const double dsq = (x - y) * (x - y);
  const double ssq = (x + y) * (x + y);
  const double log_half_xy = std::log(0.5 * x * y);

  TermAccum acc;

  // Left panel: xi = qq/v with qq = (x-y)^2/4, v = 2 qq + u; the map turns
  // e^{-(x-y)^2/(4 xi)} into the Gauss-Laguerre weight.
  const double qq = 0.25 * dsq;
  const double log_qq = std::log(qq);
  const double base_left = kLogHalf2OverPi - 2.0 * qq;
  for (std::size_t i = 0; i < t.gu.size(); ++i) {
    const double u = t.gu[i];
    const double v = 2.0 * qq + u;
    const double xi = qq / v;
    const double inv_xi = v / qq;
    const double l1 = std::log(qq + u);        // log(v - qq)
    const double l2 = std::log(3.0 * qq + u);  // log(v + qq)
    const double lv = std::log(v);
    const double log_one_minus_xi2 = l1 + l2 - 2.0 * lv;
    const double log_2xi = std::log(2.0) + log_qq - lv;
    const double log_xi = log_qq - lv;
    const double log_beta = (1.0 + m) * (log_one_minus_xi2 - log_2xi) -
                            log_one_minus_xi2 - 0.5 * std::log(l2 - l1);
    const double B = heat_tail ? 0.5 * x * y * (inv_xi - xi)
                               : 0.5 * x * y * inv_xi;
    const double logB = heat_tail ? std::log(B) : log_half_xy - log_xi;
    const Moments mm = bessel_moments(m, B, logB);
    const double p = moment_poly(which, x, y, xi, inv_xi, mm);
    if (p == 0.0) continue;
    double log_term = base_left + log_beta - k_extra * log_xi + log_qq -
                      2.0 * lv + t.log_gw[i] + mm.log_m0_core +
                      std::log(std::fabs(p));
    if (heat_tail) log_term -= 0.25 * xi * ssq;
    acc.add(log_term, p > 0 ? 1.0 : -1.0);
  }

  // Right panel: tables carry beta, the w-jacobian and the Gauss-Laguerre
  // factors; B may underflow a double near xi = 1, so its log comes from w.
  for (std::size_t i = 0; i < t.xi_r.size(); ++i) {
    const double xi = t.xi_r[i];
    const double inv_xi = t.inv_xi_r[i];
    double B, logB;
    if (heat_tail) {
      // B = xy (1 - xi^2) / (2 xi), log(1 - xi^2) = -w
      logB = log_half_xy - t.w_r[i] - t.log_xi_r[i];
      B = (logB > -700.0) ? std::exp(logB) : 0.0;
    } else {
      logB = log_half_xy - t.log_xi_r[i];
      B = 0.5 * x * y * inv_xi;
    }
    const Moments mm = bessel_moments(m, B, logB);
    const double p = moment_poly(which, x, y, xi, inv_xi, mm);
    if (p == 0.0) continue;
    double log_term = t.base_r[i] - 0.25 * dsq * inv_xi -
                      k_extra * t.log_xi_r[i] + mm.log_m0_core +
                      std::log(std::fabs(p));
    if (heat_tail) log_term -= 0.25 * xi * ssq;
    acc.add(log_term, p > 0 ? 1.0 : -1.0);
  }

  return acc.total();
}

struct TwistContext {
  double m, aj, log_twist;
};

TwistContext make_context(double alpha, const TwistParams& tw, double x,
                          double y) {
  if (!(alpha >= -0.5))
    throw std::domain_error("kernel: alpha must be >= -1/2");
  if (!(tw.a >= 1.0) || tw.j < 0)
    throw std::domain_error("kernel: need a >= 1 and j >= 0");
  if (!(x > 0.0) || !(y > 0.0) || x == y)
    throw std::domain_error("kernel: need x, y > 0 and x != y");
  TwistContext ctx;
  ctx.m = alpha + tw.power();
  ctx.aj = tw.power();
  ctx.log_twist = ctx.aj * std::log(x * y);
  return ctx;
}

}  // namespace

KernelEval riesz_kernel(double alpha, const TwistParams& tw, double x,
                        double y, const KernelQuad& kq) {
  const TwistContext ctx = make_context(alpha, tw, x, y);
  auto eval = [&](int nxi) {
    return kernel_xi_integral(ctx.m, x, y, KIntegrand::value, 0.0, nxi)
        .scaled(ctx.log_twist)
        .value();
  };
  const double v1 = eval(kq.n_xi);
  if (!kq.refine) return {v1, 0.0};
  const double v2 = eval(2 * kq.n_xi);
  return {v2, std::fabs(v2 - v1)};
}

KernelGrad riesz_kernel_grad(double alpha, const TwistParams& tw, double x,
                             double y, const KernelQuad& kq) {
  const TwistContext ctx = make_context(alpha, tw, x, y);
  auto eval = [&](int nxi, double* ddx, double* ddy) {
    const LogVal base =
        kernel_xi_integral(ctx.m, x, y, KIntegrand::value, 0.0, nxi);
    const LogVal dx = kernel_xi_integral(ctx.m, x, y, KIntegrand::dx, 0.0, nxi);
    const LogVal dy = kernel_xi_integral(ctx.m, x, y, KIntegrand::dy, 0.0, nxi);
    // d/dx[(xy)^{aj} R] = (aj/x)(xy)^{aj} R + (xy)^{aj} dR/dx, same in y
    const LogVal tx = (ctx.aj > 0.0)
                          ? base.scaled(std::log(ctx.aj) - std::log(x))
                          : LogVal{};
    const LogVal ty = (ctx.aj > 0.0)
                          ? base.scaled(std::log(ctx.aj) - std::log(y))
                          : LogVal{};
    *ddx = logval_add(tx, dx).scaled(ctx.log_twist).value();
    *ddy = logval_add(ty, dy).scaled(ctx.log_twist).value();
  };
  KernelGrad g;
  double dx1, dy1;
  eval(kq.n_xi, &dx1, &dy1);
  if (!kq.refine) {
    g.ddx = {dx1, 0.0};
    g.ddy = {dy1, 0.0};
    return g;
  }
  double dx2, dy2;
  eval(2 * kq.n_xi, &dx2, &dy2);
  g.ddx = {dx2, std::fabs(dx2 - dx1)};
  g.ddy = {dy2, std::fabs(dy2 - dy1)};
  return g;
}

KernelEval angular_kernel(double alpha, const TwistParams& tw, double x,
                          double y, const KernelQuad& kq) {
  if (tw.j < 1) throw std::domain_error("angular_kernel: j must be >= 1");
  const TwistContext ctx = make_context(alpha, tw, x, y);
  auto eval = [&](int nxi) {
    return kernel_xi_integral(ctx.m, x, y, KIntegrand::angular, 0.0, nxi)
        .scaled(ctx.log_twist + std::log(static_cast<double>(tw.j)) -
                std::log(x))
        .value();
  };
  const double v1 = eval(kq.n_xi);
  if (!kq.refine) return {v1, 0.0};
  const double v2 = eval(2 * kq.n_xi);
  return {v2, std::fabs(v2 - v1)};
}

KernelGrad angular_kernel_grad(double alpha, const TwistParams& tw, double x,
                               double y, const KernelQuad& kq) {
  if (tw.j < 1) throw std::domain_error("angular_kernel_grad: j must be >= 1");
  const TwistContext ctx = make_context(alpha, tw, x, y);
  auto eval = [&](int nxi, double* ddx, double* ddy) {
    const LogVal base =
        kernel_xi_integral(ctx.m, x, y, KIntegrand::angular, 0.0, nxi);
    const LogVal dx =
        kernel_xi_integral(ctx.m, x, y, KIntegrand::angular_dx, 0.0, nxi);
    const LogVal dy =
        kernel_xi_integral(ctx.m, x, y, KIntegrand::angular_dy, 0.0, nxi);
    // d/dx[j (xy)^{aj} I / x] = j (xy)^{aj} [(aj - 1) I / x^2 + I_x / x]
    // d/dy[...]              = j (xy)^{aj} [aj I / (xy) + I_y / x]
    const double fx = ctx.aj - 1.0;
    const LogVal tx =
        (fx != 0.0)
            ? base.scaled(std::log(std::fabs(fx)) - 2.0 * std::log(x), fx)
            : LogVal{};
    const LogVal ty = (ctx.aj > 0.0)
                          ? base.scaled(std::log(ctx.aj) - std::log(x * y))
                          : LogVal{};
    const double logj = std::log(static_cast<double>(tw.j));
    *ddx = logval_add(tx, dx.scaled(-std::log(x)))
               .scaled(ctx.log_twist + logj)
               .value();
    *ddy = logval_add(ty, dy.scaled(-std::log(x)))
               .scaled(ctx.log_twist + logj)
               .value();
  };
  KernelGrad g;
  double dx1, dy1;
  eval(kq.n_xi, &dx1, &dy1);
  if (!kq.refine) {
    g.ddx = {dx1, 0.0};
    g.ddy = {dy1, 0.0};
    return g;
  }
  double dx2, dy2;
  eval(2 * kq.n_xi, &dx2, &dy2);
  g.ddx = {dx2, std::fabs(dx2 - dx1)};
  g.ddy = {dy2, std::fabs(dy2 - dy1)};
  return g;
}

double lemma_a_check(double k, double m, double q_plus) {
  if (!(m >= -0.5) || !(k + m > -0.5) || !(q_plus > 0.0))
    throw std::domain_error(
        "lemma_a_check: need m >= -1/2, k+m > -1/2, q+ > 0");
  XiIntegrand fi;
  fi.k_extra = k;
  const LogVal lhs = xi_integral(m, q_plus, fi, 96);
  const double log_rhs = m * std::log(2.0) + log_gamma(m + k + 0.5) -
                         (m + k + 0.5) * std::log(q_plus);
  return lhs.sign * std::exp(lhs.log_abs - log_rhs);
}

double lemma0_check(double c, double A, double B, double lambda, double d) {
  if (!(B > 0.0) || !(B < A))
    throw std::domain_error("lemma0_check: need 0 < B < A");
  if (!(lambda > 0.0) || d < 0.0)
    throw std::domain_error("lemma0_check: need lambda > 0 and d >= 0");
  const double g = c + d - 0.5;  // exponent of (1-s)
  if (!(g > -1.0))
    throw std::domain_error(
        "lemma0_check: integrand not integrable (c+d <= -1/2)");

  // s = (1+u)/2 maps the (1-s)^g endpoint onto a Gauss-Jacobi weight.
  auto [u, w] = gauss_jacobi(128, g, 0.0);
  const double pw = -(c + d + lambda + 0.5);
  double lhs = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    lhs += w[i] * std::pow(A - B * 0.5 * (1.0 + u[i]), pw);
  lhs *= std::pow(0.5, g + 1.0);

  double cd = 1.0;
  if (d > 0.0)
    cd = std::exp(log_gamma(d) + log_gamma(lambda) - log_gamma(d + lambda));
  const double rhs =
      cd / (std::pow(A, c + 0.5) * std::pow(B, d) * std::pow(A - B, lambda));
  return lhs / rhs;
}

double lemma_breve_check(double alpha, double a, int j, double k, double x,
                         double y) {
  if (j < 1) throw std::domain_error("lemma_breve_check: j must be >= 1");
  if (!(k > 0.0)) throw std::domain_error("lemma_breve_check: k must be > 0");
  if (x == y) throw std::domain_error("lemma_breve_check: x == y");
  const double m = alpha + a * j;
  const LogVal lhs =
      kernel_xi_integral(m, x, y, KIntegrand::moment0, k, 96);
  const double log_rhs = -(2.0 * alpha + 1.0) * std::log(x + y) -
                         a * j * std::log(x * y) -
                         2.0 * k * std::log(std::fabs(x - y));
  return lhs.sign * std::exp(lhs.log_abs - log_rhs);
}

}  // namespace oscriesz
