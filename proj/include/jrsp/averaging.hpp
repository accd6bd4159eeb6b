// State-averaged fidelity <F> over the uniform two-qubit state ensemble, by
// deterministic quadrature and by Monte Carlo.
//
// Quadrature layout: the eta_i marginals carry the normalized densities
// 2i cos(eta) sin(eta)^{2i-1} on [0, pi/2]; each eta dimension uses an n-node
// Gauss rule generated for exactly that weight (Stieltjes procedure +
// Golub-Welsch), which integrates the trig-polynomial integrand to machine
// precision. The phi dimensions use the n_phi-node uniform periodic rule,
// evaluated in closed form: the integrand's phi_d-frequencies lie in
// {-2,...,2}, and the uniform rule keeps exactly the frequencies that are
// multiples of n_phi, so the triple phi sum collapses to a frequency-selection
// mask over basis-index tuples.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "jrsp/linalg.hpp"
#include "jrsp/noise.hpp"
#include "jrsp/protocol.hpp"

namespace jrsp {

struct QuadratureSpec {
  int n_eta = 10;  // points per eta dimension
  int n_phi = 10;  // points per phi dimension (uniform periodic rule)
};

struct McSpec {
  long n_samples = 10000;
  std::uint64_t seed = 0;
};

struct McResult {
  double estimate = 0;
  double std_error = 0;
};

// Eq.-(13) ensemble weight (3!/pi^3) prod_i cos(eta_i) sin(eta_i)^{2i-1}.
inline double state_measure_weight(const TargetState& t) {
  double w = 6.0 / (kPi * kPi * kPi);
  for (int i = 1; i <= 3; ++i)
    w *= std::cos(t.eta[i - 1]) * std::pow(std::sin(t.eta[i - 1]), 2 * i - 1);
  return w;
}

// ---------------------------------------------------------------------------
// Deterministic cross-platform RNG: SplitMix64 (name recorded in metadata).
// ---------------------------------------------------------------------------
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  static constexpr const char* name() { return "splitmix64-v1"; }

 private:
  std::uint64_t state_;
};

namespace detail {

// ------------------------- Gauss-Legendre base rule ------------------------
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

// Symmetric tridiagonal QL with implicit shifts, tracking only the first row
// of the eigenvector matrix (Golub-Welsch weights).
inline void tridiag_eigen_first_row(std::vector<double>& d, std::vector<double>& e,
                                    std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  e.resize(n, 0.0);  // e[0..n-2] used; e[n-1] scratch
  z.assign(n, 0.0);
  z[0] = 1.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0, m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tridiagonal QL: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i], b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  // Sort nodes ascending, carrying first-row components.
  for (int i = 0; i < n - 1; ++i) {
    int k = i;
    for (int j = i + 1; j < n; ++j)
      if (d[j] < d[k]) k = j;
    if (k != i) {
      std::swap(d[i], d[k]);
      std::swap(z[i], z[k]);
    }
  }
}

struct EtaRule {
  std::vector<double> nodes, weights;  // weights sum to 1 (normalized measure)
};

// n-node Gauss rule w.r.t. the normalized density 2i cos(x) sin(x)^{2i-1} on
// [0, pi/2]; recurrence coefficients by the Stieltjes procedure on a fine
// Gauss-Legendre grid.
inline EtaRule gauss_weighted_eta(int n, int i) {
  const int N = 400;
  std::vector<double> gx, gw;
  gauss_legendre(N, gx, gw);
  std::vector<double> x(N), wf(N);
  for (int j = 0; j < N; ++j) {
    x[j] = (gx[j] + 1.0) * (kPi / 4);
    wf[j] = gw[j] * (kPi / 4) * 2.0 * i * std::cos(x[j]) *
            std::pow(std::sin(x[j]), 2 * i - 1);
  }
  std::vector<double> a(n, 0.0), b(n, 0.0);
  std::vector<double> p_prev(N, 0.0), p(N, 1.0), p_next(N);
  double nrm_prev = 1.0;
  for (int k = 0; k < n; ++k) {
    double nrm = 0, ax = 0;
    for (int j = 0; j < N; ++j) {
      nrm += wf[j] * p[j] * p[j];
      ax += wf[j] * x[j] * p[j] * p[j];
    }
    a[k] = ax / nrm;
    if (k > 0) b[k] = nrm / nrm_prev;
    for (int j = 0; j < N; ++j)
      p_next[j] = (x[j] - a[k]) * p[j] - (k > 0 ? b[k] : 0.0) * p_prev[j];
    p_prev = p;
    p = p_next;
    nrm_prev = nrm;
  }
  std::vector<double> d = a, e(n, 0.0), z;
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(b[k]);
  tridiag_eigen_first_row(d, e, z);
  EtaRule rule;
  rule.nodes = d;
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) rule.weights[k] = z[k] * z[k];
  return rule;
}

// ----------------------- phi-factorized kernel tables ----------------------
struct SignedPermRows {
  std::array<int, 4> perm;     // M[n][perm[n]] nonzero
  std::array<double, 4> sign;  // the nonzero value
};
struct SignedPermCols {
  std::array<int, 4> perm;     // M[perm[j]][j] nonzero
  std::array<double, 4> sign;
};

struct KernelTables {
  std::array<SignedPermRows, 4> t_rows;                    // from T^(k)
  std::array<std::array<SignedPermCols, 4>, 4> r_cols;     // from R^(km)
  // Per (k,m): index tuples (n,N,j,J) surviving the phi frequency selection.
  std::array<std::array<std::vector<std::array<int, 4>>, 4>, 4> tuples;
};

inline SignedPermRows signed_perm_rows(const ComplexMatrix& m) {
  SignedPermRows sp{};
  for (int n = 0; n < 4; ++n) {
    int cnt = 0;
    for (int c = 0; c < 4; ++c)
      if (std::abs(m(n, c)) > 1e-12) {
        sp.perm[n] = c;
        sp.sign[n] = std::real(m(n, c));
        ++cnt;
      }
    if (cnt != 1) throw std::logic_error("not a signed permutation");
  }
  return sp;
}

inline SignedPermCols signed_perm_cols(const ComplexMatrix& m) {
  SignedPermCols sp{};
  for (int j = 0; j < 4; ++j) {
    int cnt = 0;
    for (int r = 0; r < 4; ++r)
      if (std::abs(m(r, j)) > 1e-12) {
        sp.perm[j] = r;
        sp.sign[j] = std::real(m(r, j));
        ++cnt;
      }
    if (cnt != 1) throw std::logic_error("not a signed permutation");
  }
  return sp;
}

inline KernelTables build_kernel_tables(int n_phi) {
  KernelTables kt;
  for (int k = 0; k < 4; ++k) kt.t_rows[k] = signed_perm_rows(conditioning_t(k));
  for (int k = 0; k < 4; ++k)
    for (int m = 0; m < 4; ++m) kt.r_cols[k][m] = signed_perm_cols(correction(k, m));
  for (int k = 0; k < 4; ++k) {
    const auto& tau = kt.t_rows[k].perm;
    for (int m = 0; m < 4; ++m) {
      const auto& rp = kt.r_cols[k][m].perm;
      auto& list = kt.tuples[k][m];
      for (int n = 0; n < 4; ++n)
        for (int N = 0; N < 4; ++N)
          for (int j = 0; j < 4; ++j)
            for (int J = 0; J < 4; ++J) {
              bool ok = true;
              for (int d = 1; d <= 3; ++d) {
                const int f = (tau[n] == d) - (tau[N] == d) + (rp[J] == d) -
                              (rp[j] == d);
                if (((f % n_phi) + n_phi) % n_phi != 0) {
                  ok = false;
                  break;
                }
              }
              if (ok) list.push_back({n, N, j, J});
            }
    }
  }
  return kt;
}

// Coefficient matrix of B(0, xi): row d, column m; sigma^(k)_m entry n equals
// t_sign[n] * exp(-i phi_{tau[n]}) * c[tau[n]][m].
inline std::array<std::array<double, 4>, 4> c_xi(double xi) {
  const double c = std::cos(xi), s = std::sin(xi), r = 1.0 / std::sqrt(2.0);
  return {{{r * c, r * c, r * s, r * s},
           {r * c, -r * c, r * s, -r * s},
           {r * s, r * s, -r * c, -r * c},
           {r * s, -r * s, -r * c, r * c}}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// <F> by tensor-product quadrature for a prebuilt 6-qubit channel.
//
// Every measurement coefficient in the phi-summed integrand is real, so the
// full quadrature collapses to <F> = sum_{r,c} W[r][c] * Re(rho[r][c]) with a
// channel-independent real weight matrix W that depends only on (xi, spec).
// W is assembled once per (xi, spec) and cached.
// ---------------------------------------------------------------------------
namespace detail {

struct QuadWeights {
  std::array<double, 64 * 64> w{};
};

inline QuadWeights build_quad_weights(double xi, const QuadratureSpec& spec) {
  static std::map<int, KernelTables> table_cache;
  auto it = table_cache.find(spec.n_phi);
  if (it == table_cache.end())
    it = table_cache.emplace(spec.n_phi, build_kernel_tables(spec.n_phi)).first;
  const KernelTables& kt = it->second;

  static std::map<std::pair<int, int>, EtaRule> rule_cache;
  std::array<const EtaRule*, 3> rules{};
  for (int i = 1; i <= 3; ++i) {
    auto key = std::make_pair(spec.n_eta, i);
    auto rit = rule_cache.find(key);
    if (rit == rule_cache.end())
      rit = rule_cache.emplace(key, gauss_weighted_eta(spec.n_eta, i)).first;
    rules[i - 1] = &rit->second;
  }

  const auto cx = c_xi(xi);
  const int ne = spec.n_eta;
  QuadWeights W;
  std::array<double, 256> c{};  // node-level coefficient over (a, b) in 16x16

  for (int i1 = 0; i1 < ne; ++i1)
    for (int i2 = 0; i2 < ne; ++i2)
      for (int i3 = 0; i3 < ne; ++i3) {
        TargetState t;
        t.eta = {rules[0]->nodes[i1], rules[1]->nodes[i2], rules[2]->nodes[i3]};
        const double wt = rules[0]->weights[i1] * rules[1]->weights[i2] *
                          rules[2]->weights[i3];
        const auto lam = amplitudes(t);
        const ComplexMatrix A = alice_matrix(lam);
        for (int k = 0; k < 4; ++k) {
          double om[4];
          for (int i = 0; i < 4; ++i) om[i] = std::real(A(i, k));
          c.fill(0.0);
          const auto& tau = kt.t_rows[k].perm;
          const auto& tsgn = kt.t_rows[k].sign;
          for (int m = 0; m < 4; ++m) {
            double ac[4], bc[4];
            const auto& rc = kt.r_cols[k][m];
            for (int n = 0; n < 4; ++n) ac[n] = tsgn[n] * cx[tau[n]][m];
            for (int j = 0; j < 4; ++j) bc[j] = rc.sign[j] * lam[rc.perm[j]];
            for (const auto& tp : kt.tuples[k][m]) {
              const int n = tp[0], N = tp[1], j = tp[2], J = tp[3];
              c[static_cast<size_t>(((n << 2) | j)) * 16 + ((N << 2) | J)] +=
                  wt * ac[n] * ac[N] * bc[j] * bc[J];
            }
          }
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
              const double oij = om[i] * om[j];
              const size_t base =
                  (static_cast<size_t>(i) << 4) * 64 + (static_cast<size_t>(j) << 4);
              for (int a = 0; a < 16; ++a) {
                double* dst = &W.w[base + static_cast<size_t>(a) * 64];
                const double* src = &c[static_cast<size_t>(a) * 16];
                for (int b = 0; b < 16; ++b) dst[b] += oij * src[b];
              }
            }
        }
      }
  return W;
}

inline const QuadWeights& cached_quad_weights(double xi, const QuadratureSpec& spec) {
  static std::map<std::tuple<double, int, int>, QuadWeights> cache;
  const auto key = std::make_tuple(xi, spec.n_eta, spec.n_phi);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() > 64) cache.clear();
    it = cache.emplace(key, build_quad_weights(xi, spec)).first;
  }
  return it->second;
}

}  // namespace detail

inline double averaged_fidelity_quadrature_channel(const DensityMatrix& rho6,
                                                   double xi,
                                                   const QuadratureSpec& spec) {
  if (spec.n_eta < 2 || spec.n_phi < 2)
    throw std::invalid_argument("QuadratureSpec: orders must be >= 2");
  if (rho6.n_qubits != 6)
    throw std::invalid_argument("averaged fidelity: channel must have 6 qubits");
  const detail::QuadWeights& W = detail::cached_quad_weights(xi, spec);
  // Fixed-order pairwise reduction over rows for reproducibility.
  std::vector<double> row_terms(64);
  const cplx* rho = rho6.m.data().data();
  for (int r = 0; r < 64; ++r) {
    double s = 0;
    const double* wr = &W.w[static_cast<size_t>(r) * 64];
    const cplx* rr = rho + static_cast<size_t>(r) * 64;
    for (int cidx = 0; cidx < 64; ++cidx) s += wr[cidx] * rr[cidx].real();
    row_terms[r] = s;
  }
  return pairwise_sum(std::move(row_terms));
}

inline double averaged_fidelity_quadrature(const NoiseScenario& sc,
                                           const ControlParams& ctrl,
                                           const QuadratureSpec& spec = {}) {
  const DensityMatrix rho = noisy_channel_state(ctrl.theta, sc);
  return averaged_fidelity_quadrature_channel(rho, ctrl.xi, spec);
}

// ---------------------------------------------------------------------------
// Monte Carlo: exact inverse-CDF sampling of the Eq.-(13) measure.
// eta_i marginal density 2i cos(eta) sin(eta)^{2i-1}, CDF sin(eta)^{2i}.
// ---------------------------------------------------------------------------
inline TargetState sample_target(SplitMix64& rng) {
  TargetState t;
  for (int i = 1; i <= 3; ++i)
    t.eta[i - 1] = std::asin(std::pow(rng.next_double(), 1.0 / (2.0 * i)));
  for (int j = 0; j < 3; ++j) t.phi[j] = 2.0 * kPi * rng.next_double();
  return t;
}

inline McResult averaged_fidelity_mc(const NoiseScenario& sc,
                                     const ControlParams& ctrl, const McSpec& spec) {
  if (spec.n_samples < 1) throw std::invalid_argument("McSpec: n_samples >= 1");
  const DensityMatrix rho = noisy_channel_state(ctrl.theta, sc);
  SplitMix64 rng(spec.seed);
  std::vector<double> vals;
  vals.reserve(spec.n_samples);
  for (long s = 0; s < spec.n_samples; ++s) {
    const TargetState t = sample_target(rng);
    vals.push_back(outcome_averaged_fidelity(run_protocol(rho, t, ctrl.xi)));
  }
  const double n = static_cast<double>(spec.n_samples);
  const double mean = pairwise_sum(vals) / n;
  std::vector<double> sq;
  sq.reserve(vals.size());
  for (double v : vals) sq.push_back((v - mean) * (v - mean));
  const double var = spec.n_samples > 1 ? pairwise_sum(std::move(sq)) / (n - 1) : 0.0;
  return {mean, std::sqrt(var / n)};
}

}  // namespace jrsp
