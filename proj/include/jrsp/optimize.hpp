// Numerical maximization of the simulated <F> over (theta, xi), grid sweeps
// over (p_a, p_c), quantum-domain classification, and the fig5 damping-comparison
// curves.
//
// The simulated <F>(theta, xi) lies exactly in
// span{1, cos 2theta, sin 2theta} (x) span{1, cos 2xi, sin 2xi}: the channel
// density matrix is quadratic in (cos theta, sin theta) and Bob's projectors
// are quadratic in (cos xi, sin xi). Nine quadrature evaluations at
// theta, xi in {0, pi/4, -pi/4} therefore determine the surface exactly; the
// grid + golden-section refinement runs on that nine-coefficient surrogate.
#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "jrsp/analytic.hpp"
#include "jrsp/averaging.hpp"
#include "jrsp/noise.hpp"

namespace jrsp {

// ---------------------------------------------------------------------------
// Exact trigonometric surrogate of <F>(theta, xi).
// ---------------------------------------------------------------------------
struct FidelitySurface {
  std::array<std::array<double, 3>, 3> a{};  // coefficients over {1,cos2,sin2}
  double operator()(double theta, double xi) const {
    const double ft[3] = {1.0, std::cos(2 * theta), std::sin(2 * theta)};
    const double gx[3] = {1.0, std::cos(2 * xi), std::sin(2 * xi)};
    double s = 0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) s += ft[r] * a[r][c] * gx[c];
    return s;
  }
};

inline FidelitySurface fit_fidelity_surface(const NoiseScenario& sc,
                                            const QuadratureSpec& spec = {}) {
  const double Q = kPi / 4;
  const double angs[3] = {0.0, Q, -Q};
  double F[3][3];
  for (int it = 0; it < 3; ++it) {
    const DensityMatrix rho = noisy_channel_state(angs[it], sc);
    for (int ix = 0; ix < 3; ++ix)
      F[it][ix] = averaged_fidelity_quadrature_channel(rho, angs[ix], spec);
  }
  // Basis values at the sample angles: V = [[1,1,0],[1,0,1],[1,0,-1]];
  // V^{-1} = [[0,1/2,1/2],[1,-1/2,-1/2],[0,1/2,-1/2]].
  const double Vi[3][3] = {{0, 0.5, 0.5}, {1, -0.5, -0.5}, {0, 0.5, -0.5}};
  FidelitySurface surf;
  double tmp[3][3];
  for (int r = 0; r < 3; ++r)  // tmp = Vi * F
    for (int c = 0; c < 3; ++c)
      tmp[r][c] = Vi[r][0] * F[0][c] + Vi[r][1] * F[1][c] + Vi[r][2] * F[2][c];
  for (int r = 0; r < 3; ++r)  // a = tmp * Vi^T
    for (int c = 0; c < 3; ++c)
      surf.a[r][c] =
          tmp[r][0] * Vi[c][0] + tmp[r][1] * Vi[c][1] + tmp[r][2] * Vi[c][2];
  return surf;
}

// ---------------------------------------------------------------------------
// numeric_optimize: 25x25 grid + golden-section coordinate descent.
// Ties resolve to the candidate with largest theta, then largest xi.
// ---------------------------------------------------------------------------
struct OptResult {
  double theta = 0;
  double xi = 0;
  double f = 0;
};

inline OptResult maximize_surface(const FidelitySurface& surf, int grid_n = 25) {
  const double lo = -kPi / 2, hi = kPi / 2;
  double best_f = -1, best_t = lo, best_x = lo;
  for (int i = 0; i < grid_n; ++i)
    for (int j = 0; j < grid_n; ++j) {
      const double th = lo + (hi - lo) * i / (grid_n - 1);
      const double xi = lo + (hi - lo) * j / (grid_n - 1);
      const double v = surf(th, xi);
      // Ascending scan order makes later (larger theta/xi) candidates win ties.
      if (v > best_f - 1e-12) {
        if (v > best_f) best_f = v;
        best_t = th;
        best_x = xi;
      }
    }
  // Golden-section coordinate descent over the full range.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double th = best_t, xi = best_x;
  for (int sweep = 0; sweep < 40; ++sweep) {
    for (int which = 0; which < 2; ++which) {
      double a = lo, b = hi;
      for (int it = 0; it < 60; ++it) {
        const double c = b - gr * (b - a), d = a + gr * (b - a);
        const double fc = which == 0 ? surf(c, xi) : surf(th, c);
        const double fd = which == 0 ? surf(d, xi) : surf(th, d);
        if (fc > fd)
          b = d;
        else
          a = c;
      }
      if (which == 0)
        th = (a + b) / 2;
      else
        xi = (a + b) / 2;
    }
  }
  return {th, xi, surf(th, xi)};
}

inline OptResult numeric_optimize(const NoiseScenario& sc,
                                  const QuadratureSpec& spec = {}, int grid_n = 25) {
  return maximize_surface(fit_fidelity_surface(sc, spec), grid_n);
}

// ---------------------------------------------------------------------------
// Analytic engine helpers: the pre-X scheme maps a bit-flip strength p to
// 1 - p, so analytic formulas are evaluated at the mapped strengths.
// ---------------------------------------------------------------------------
inline double effective_p(NoiseKind kind, double p, bool pre_x) {
  return (pre_x && kind == NoiseKind::BitFlip) ? 1.0 - p : p;
}

inline double analytic_optimal_fidelity(const NoisePair& pr, double pa, double pc,
                                        bool pre_x) {
  return optimal_fidelity(pr, effective_p(pr.alpha, pa, pre_x),
                          effective_p(pr.gamma, pc, pre_x));
}

inline OptimalParams analytic_optimal_params(const NoisePair& pr, double pa,
                                             double pc, bool pre_x) {
  return optimal_params(pr, effective_p(pr.alpha, pa, pre_x),
                        effective_p(pr.gamma, pc, pre_x));
}

// ---------------------------------------------------------------------------
// Sweep over the (p_a, p_c) lattice.
// ---------------------------------------------------------------------------
enum class SweepEngine { Analytic, Numeric, Both };

struct SweepCell {
  double p_a = 0, p_c = 0;
  double f_opt_analytic = 0;
  double f_opt_numeric = 0;  // filled for Numeric/Both engines
  double theta_opt = 0, xi_opt = 0;
  bool quantum = false;
};

struct SweepGrid {
  NoisePair pair{};
  bool pre_x = false;
  int n = 0;
  SweepEngine engine = SweepEngine::Analytic;
  std::vector<SweepCell> cells;  // pa-major, then pc
};

inline SweepGrid sweep(const NoisePair& pr, bool pre_x, int n, SweepEngine engine,
                       const QuadratureSpec& spec = {}) {
  if (n < 2) throw std::invalid_argument("sweep: n >= 2 required");
  SweepGrid grid{pr, pre_x, n, engine, {}};
  grid.cells.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SweepCell cell;
      cell.p_a = double(i) / (n - 1);
      cell.p_c = double(j) / (n - 1);
      double f_best = 0;
      if (engine != SweepEngine::Numeric) {
        cell.f_opt_analytic = analytic_optimal_fidelity(pr, cell.p_a, cell.p_c, pre_x);
        const OptimalParams op = analytic_optimal_params(pr, cell.p_a, cell.p_c, pre_x);
        cell.theta_opt = op.theta_opt;
        cell.xi_opt = op.xi_opt;
        f_best = cell.f_opt_analytic;
      }
      if (engine != SweepEngine::Analytic) {
        const NoiseScenario sc{pr.alpha, cell.p_a, pr.gamma, cell.p_c, pre_x};
        const OptResult r = numeric_optimize(sc, spec);
        cell.f_opt_numeric = r.f;
        if (engine == SweepEngine::Numeric) {
          cell.theta_opt = r.theta;
          cell.xi_opt = r.xi;
        }
        f_best = std::max(f_best, r.f);
      }
      cell.quantum = quantum_domain(f_best);
      grid.cells.push_back(cell);
    }
  return grid;
}

// ---------------------------------------------------------------------------
// fig5: amplitude-damping comparison curves over p_A in [0, 1].
// ---------------------------------------------------------------------------
struct Fig5Row {
  double p_A = 0;
  double f_A0_opt = 0;    // (A, .) with p_c = 0, optimal controls
  double f_AA_opt = 0;    // (A, A) with p_a = p_c = p_A, optimal controls
  double f_AA_fixed = 0;  // (A, A) with p_a = p_c = p_A at theta = xi = pi/4
};

struct Fig5Result {
  std::vector<Fig5Row> rows;
  bool crossing_found = false;
  double crossing_pA = 0;  // smallest p_A with f_AA_opt > f_A0_opt
};

inline Fig5Result fig5_curves(int n_points, const QuadratureSpec& spec = {}) {
  if (n_points < 2) throw std::invalid_argument("fig5_curves: n_points >= 2");
  const NoisePair AA{NoiseKind::AmplitudeDamping, NoiseKind::AmplitudeDamping};
  Fig5Result out;
  out.rows.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    Fig5Row row;
    row.p_A = double(i) / (n_points - 1);
    row.f_A0_opt = optimal_fidelity(AA, row.p_A, 0.0);
    row.f_AA_opt = optimal_fidelity(AA, row.p_A, row.p_A);
    const NoiseScenario sc{NoiseKind::AmplitudeDamping, row.p_A,
                           NoiseKind::AmplitudeDamping, row.p_A, false};
    row.f_AA_fixed =
        averaged_fidelity_quadrature(sc, ControlParams{kPi / 4, kPi / 4}, spec);
    out.rows.push_back(row);
  }
  // Locate the crossing of the analytic curves by scan + bisection.
  auto diff = [&](double p) {
    return optimal_fidelity(AA, p, p) - optimal_fidelity(AA, p, 0.0);
  };
  const int scan_n = 2000;
  for (int i = 0; i < scan_n; ++i) {
    double lo = double(i) / scan_n, hi = double(i + 1) / scan_n;
    if (diff(lo) <= 0 && diff(hi) > 0) {
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (diff(mid) > 0 ? hi : lo) = mid;
      }
      out.crossing_found = true;
      out.crossing_pA = 0.5 * (lo + hi);
      break;
    }
  }
  return out;
}

}  // namespace jrsp
