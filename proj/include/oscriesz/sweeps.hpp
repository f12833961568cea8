#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscriesz/kernels.hpp"
#include "oscriesz/parallel.hpp"

namespace oscriesz {

// Off-diagonal evaluation grid: log-spaced x against two separation
// families. The fixed y/x ratios document the kernel far from the diagonal.
// The scaled separations place y = x (1 +- d / max(1, aj)): the
// kernel-times-ball product at a fixed geometric separation decays like
// (min(x,y)/max(x,y))^{aj}, so the uniform constant is only approached at
// separations shrinking like 1/(aj), and only the scaled cells make the
// per-j constants comparable across j.
struct SweepGrid {
  std::vector<double> xs;
  std::vector<double> y_ratios;
  std::vector<double> scaled_seps;
  double exclusion = 1e-4;  // guard |x-y| >= exclusion * max(x,y)

  static SweepGrid standard(double scale = 1.0);
  std::string describe() const;
};

struct JConstant {
  int j;
  double constant;
};

// Result of a uniformity sweep: one observed constant per twist index j,
// plus the ratio statistics that operationalize "independent of j".
struct SweepReport {
  std::string suite;
  std::string grid_desc;
  double alpha = 0.0, a = 1.0;
  std::vector<JConstant> per_j;
  double tol_ratio = 3.0;
  double trend_bound = 1.5;
  double max_over_min = 0.0;
  double last_over_first = 0.0;
  double ls_slope = 0.0;
  double slope_bound = 0.0;
  bool pass = false;

  void finalize();
};

enum class KernelOp { riesz, angular };

// Per j, the observed constant max_{grid} |K_j(x,y)| mu_alpha(B(x,|x-y|)).
SweepReport cz_growth_sweep(double alpha, double a, int j_max,
                            const SweepGrid& grid, KernelOp op,
                            ExecMode mode = ExecMode::parallel);

// Same with the product |grad K_j| |x-y| mu_alpha(B(x,|x-y|)), both partial
// derivatives checked separately.
SweepReport cz_smooth_sweep(double alpha, double a, int j_max,
                            const SweepGrid& grid, KernelOp op,
                            ExecMode mode = ExecMode::parallel);

// Compactly supported bump (1 - z^2)^8 on [center - width/2, center + width/2].
struct Bump {
  double center, width;

  double operator()(double x) const;
};

// Seeded disjoint-support bump pairs for the Calderon-Zygmund-sense pairing.
std::vector<std::pair<Bump, Bump>> make_bump_pairs(int n_pairs,
                                                   std::uint64_t seed);

struct PairingCase {
  int j = 0;
  double a = 1.0;
  int pair_index = 0;
  double kernel_value = 0.0;
  double spectral_value = 0.0;
  double rel_err = 0.0;
};

// <u_j Op^{alpha+aj}(u_j^{-1} f), g>_{d mu_alpha} computed two ways: double
// quadrature of the explicit kernel against f, g versus the spectral
// multiplier route; both sides converge independently.
std::vector<PairingCase> pairing_cases(double alpha,
                                       const std::vector<double>& a_values,
                                       const std::vector<int>& j_values,
                                       int n_pairs, std::uint64_t seed,
                                       KernelOp op,
                                       ExecMode mode = ExecMode::parallel);

struct HeatCase {
  double alpha, t, x, y;
  double closed, spectral, rel_err;
};

// Closed-form heat kernel against the truncated spectral series over the
// (t, x, y) grid; t below 0.05 is excluded (the series would need K > 1e4).
// The relative error carries a resolution floor of 1e-7 times
// sqrt(G(x,x) G(y,y)): by Cauchy-Schwarz that product bounds the series'
// term mass, whose double-precision summation carries ~1e-16 of it as
// roundoff. Far off the diagonal the kernel drops exponentially below that
// level, so differences there are tested against 1e-13 of the term mass
// (1000x above the roundoff limit) instead of an unreachable relative goal.
std::vector<HeatCase> heat_compare_cases(const std::vector<double>& alphas,
                                         const std::vector<double>& ts,
                                         const std::vector<double>& xs,
                                         ExecMode mode = ExecMode::parallel);

struct AngularNormCase {
  int j;
  double norm;
};

// Exact L^2(d mu_{alpha+aj}) operator norm of (alpha+aj) T^{alpha+aj} on the
// span of the first K+1 basis functions (largest eigenvalue of the Gram
// form, power iteration).
std::vector<AngularNormCase> angular_l2_norms(double alpha, double a, int j_lo,
                                              int j_hi, int K,
                                              ExecMode mode = ExecMode::parallel);

struct ElementaryChecks {
  double gammas_max_ratio;    // x^g e^{-x} vs g^g e^{-g}
  double des1_max_violation;  // |x-ys| - sqrt(q_minus)
  double des2_max_ratio;      // |x-ys|^th e^{-xi q_-/4} vs (2 th/e)^{th/2} xi^{-th/2}
  double hfun_max_ratio;      // (1-u)^b u^{v-1/2} vs (b/(b+v-1/2))^b
  bool pass;
};

ElementaryChecks elementary_checks();

struct BallEquivStats {
  double min_ratio, max_ratio;
};

// min/max of mu_alpha(B(x,|x-y|)) / (|x-y|(x+y)^{2a+1}); the ratio is scale
// invariant, so this is a dense log scan over the aspect y/x in [1e-6, 1e6]
// with grid_n^2 points.
BallEquivStats ball_equivalence_sweep(double alpha, int grid_n);

}  // namespace oscriesz
