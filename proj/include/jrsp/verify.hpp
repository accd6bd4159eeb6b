// Cross-check suite: oracle equivalence, symmetries, unitarity, trace
// preservation and optimality checks, run at CI scale by the `verify`
// subcommand.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "jrsp/analytic.hpp"
#include "jrsp/averaging.hpp"
#include "jrsp/io.hpp"
#include "jrsp/noise.hpp"
#include "jrsp/optimize.hpp"
#include "jrsp/protocol.hpp"

namespace jrsp {

struct VerifyCheck {
  std::string name;
  double deviation = 0;
  double tolerance = 0;
  bool pass() const { return deviation <= tolerance; }
};

namespace detail {

inline const std::array<NoiseKind, 4>& all_kinds() {
  static const std::array<NoiseKind, 4> k{
      NoiseKind::BitFlip, NoiseKind::PhaseFlip, NoiseKind::AmplitudeDamping,
      NoiseKind::Depolarizing};
  return k;
}

inline TargetState random_target(SplitMix64& rng) {
  TargetState t;
  for (int i = 0; i < 3; ++i) t.eta[i] = rng.next_double() * kPi / 2;
  for (int i = 0; i < 3; ++i) t.phi[i] = rng.next_double() * 2 * kPi;
  return t;
}

inline double gram_defect(const ComplexMatrix& basis_matrix) {
  // Columns are the basis vectors; orthonormal columns <=> M^dagger M = I.
  return max_abs_diff(dagger(basis_matrix) * basis_matrix,
                      ComplexMatrix::identity(4));
}

}  // namespace detail

inline std::vector<VerifyCheck> run_verification_suite() {
  using detail::all_kinds;
  using detail::random_target;
  std::vector<VerifyCheck> checks;
  SplitMix64 rng(0x6a727370u);  // fixed seed: deterministic report
  const double Q = kPi / 4;

  // --- Kraus trace preservation, one check per kind -------------------------
  for (NoiseKind kind : all_kinds()) {
    double dev = 0;
    for (int i = 0; i < 20; ++i) {
      const double p = rng.next_double();
      const KrausSet ks = kraus_set(kind, p);
      ComplexMatrix s(2, 2);
      for (const auto& K : ks.operators) s += dagger(K) * K;
      dev = std::max(dev, max_abs_diff(s, ComplexMatrix::identity(2)));
    }
    checks.push_back({std::string("kraus-trace-preserving-") + noise_char(kind),
                      dev, 1e-12});
  }

  // --- Basis orthonormality and correction unitarity ------------------------
  {
    double dev = 0;
    for (int i = 0; i < 10; ++i) {
      const TargetState t = random_target(rng);
      dev = std::max(dev, detail::gram_defect(alice_matrix(amplitudes(t))));
    }
    checks.push_back({"alice-basis-orthonormal", dev, 1e-12});
  }
  {
    double dev = 0;
    for (int i = 0; i < 10; ++i) {
      const TargetState t = random_target(rng);
      const int k = int(rng.next_u64() % 4);
      const double xi = (rng.next_double() - 0.5) * kPi;
      dev = std::max(dev, detail::gram_defect(bob_matrix(t.phi, k, xi)));
    }
    checks.push_back({"bob-basis-orthonormal", dev, 1e-12});
  }
  {
    double dev = 0;
    for (int k = 0; k < 4; ++k)
      for (int m = 0; m < 4; ++m) {
        const ComplexMatrix R = correction(k, m);
        dev = std::max(dev, max_abs_diff(R * dagger(R), ComplexMatrix::identity(4)));
      }
    checks.push_back({"corrections-unitary", dev, 1e-12});
  }

  // --- bob basis regression: xi = pi/4, zero phases reproduces Eq.-18 matrix
  {
    const ComplexMatrix Bm = bob_matrix({0, 0, 0}, 0, Q);
    ComplexMatrix expect(4, 4, {0.5, 0.5, 0.5, 0.5,    //
                                0.5, -0.5, 0.5, -0.5,  //
                                0.5, 0.5, -0.5, -0.5,  //
                                0.5, -0.5, -0.5, 0.5});
    checks.push_back({"bob-basis-noiseless-regression", max_abs_diff(Bm, expect),
                      1e-12});
  }

  // --- tensor / embed algebra ------------------------------------------------
  {
    const ComplexMatrix a = pauli_x(), b = pauli_y();
    checks.push_back({"tensor-dagger-property",
                      max_abs_diff(dagger(tensor(a, b)), tensor(dagger(a), dagger(b))),
                      1e-12});
  }
  {
    const ComplexMatrix e1 = embed(pauli_x(), {1}, 3), e2 = embed(pauli_z(), {3}, 3);
    checks.push_back({"embed-disjoint-commute", max_abs_diff(e1 * e2, e2 * e1),
                      1e-12});
  }

  // --- channel construction sanity -------------------------------------------
  {
    double dev_tr = 0, dev_h = 0;
    bool psd = true;
    for (int i = 0; i < 10; ++i) {
      const NoiseScenario sc{all_kinds()[rng.next_u64() % 4], rng.next_double(),
                             all_kinds()[rng.next_u64() % 4], rng.next_double(),
                             false};
      const DensityMatrix rho =
          noisy_channel_state((rng.next_double() - 0.5) * kPi, sc);
      dev_tr = std::max(dev_tr, std::abs(std::real(trace(rho.m)) - 1.0));
      dev_h = std::max(dev_h, hermiticity_defect(rho.m));
      psd = psd && is_psd(rho.m);
    }
    checks.push_back({"channel-unit-trace", dev_tr, 1e-12});
    checks.push_back({"channel-hermitian", dev_h, 1e-12});
    checks.push_back({"channel-psd", psd ? 0.0 : 1.0, 0.5});
  }

  // --- protocol: noiseless perfection and probability normalization ---------
  {
    const DensityMatrix rho0 =
        noisy_channel_state(Q, {NoiseKind::BitFlip, 0, NoiseKind::BitFlip, 0, false});
    double dev = 0;
    for (int i = 0; i < 10; ++i) {
      for (const auto& b : run_protocol(rho0, random_target(rng), Q))
        dev = std::max(dev, std::abs(b.fidelity - 1.0));
    }
    checks.push_back({"noiseless-branch-fidelity-one", dev, 1e-10});
  }
  {
    double dev = 0;
    for (int i = 0; i < 10; ++i) {
      const NoiseScenario sc{all_kinds()[rng.next_u64() % 4], rng.next_double(),
                             all_kinds()[rng.next_u64() % 4], rng.next_double(),
                             false};
      const DensityMatrix rho =
          noisy_channel_state((rng.next_double() - 0.5) * kPi, sc);
      const auto branches =
          run_protocol(rho, random_target(rng), (rng.next_double() - 0.5) * kPi);
      double pk_sum = 0;
      for (int k = 0; k < 4; ++k) {
        pk_sum += branches[k * 4].p_k;
        double pkm_sum = 0;
        for (int m = 0; m < 4; ++m) pkm_sum += branches[k * 4 + m].p_km;
        dev = std::max(dev, std::abs(pkm_sum - 1.0));
      }
      dev = std::max(dev, std::abs(pk_sum - 1.0));
    }
    checks.push_back({"branch-probability-normalization", dev, 1e-10});
  }
  {
    DensityMatrix mixed(6);
    for (int i = 0; i < 64; ++i) mixed.m(i, i) = 1.0 / 64;
    const double f =
        outcome_averaged_fidelity(run_protocol(mixed, random_target(rng), Q));
    checks.push_back({"depolarized-channel-quarter", std::abs(f - 0.25), 1e-10});
  }

  // --- phase-flip GHZ-basis decomposition (alpha = P at p, gamma noiseless) --
  {
    const double p = 0.3;
    const DensityMatrix rho = noisy_channel_state(
        Q, {NoiseKind::PhaseFlip, p, NoiseKind::PhaseFlip, 0.0, false});
    DensityMatrix expect(6);
    const double w[2] = {1 - p, p};
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) {
        StateVector v(6);
        for (int idx = 0; idx < 64; ++idx) {
          int b[6];
          for (int i = 0; i < 6; ++i) b[i] = (idx >> (5 - i)) & 1;
          const int f1 = (b[0] << 2) | (b[2] << 1) | b[4];
          const int f2 = (b[1] << 2) | (b[3] << 1) | b[5];
          const double g1 = f1 == 0 ? 1 : (f1 == 7 ? (s ? -1 : 1) : 0);
          const double g2 = f2 == 0 ? 1 : (f2 == 7 ? (t ? -1 : 1) : 0);
          v.amp[idx] = 0.5 * g1 * g2;
        }
        DensityMatrix term = DensityMatrix::from_pure(v);
        term.m *= cplx(w[s] * w[t]);
        expect.m += term.m;
      }
    checks.push_back({"phaseflip-ghz-decomposition", max_abs_diff(rho.m, expect.m),
                      1e-12});
  }

  // --- noise algebra ----------------------------------------------------------
  {
    const DensityMatrix rho =
        DensityMatrix::from_pure(build_channel(0.6));
    const KrausSet k1 = kraus_set(NoiseKind::AmplitudeDamping, 0.4);
    const KrausSet k5 = kraus_set(NoiseKind::Depolarizing, 0.7);
    const DensityMatrix a = apply_channel(apply_channel(rho, 1, k1), 5, k5);
    const DensityMatrix b = apply_channel(apply_channel(rho, 5, k5), 1, k1);
    checks.push_back({"disjoint-channels-commute", max_abs_diff(a.m, b.m), 1e-12});
  }
  {
    const DensityMatrix a = noisy_channel_state(
        0.5, {NoiseKind::BitFlip, 1.0, NoiseKind::PhaseFlip, 0.2, true});
    const DensityMatrix b = noisy_channel_state(
        0.5, {NoiseKind::BitFlip, 0.0, NoiseKind::PhaseFlip, 0.2, false});
    checks.push_back({"prex-involution", max_abs_diff(a.m, b.m), 1e-12});
  }
  {
    std::array<std::pair<NoiseKind, double>, 6> per_qubit{
        std::pair{NoiseKind::PhaseFlip, 0.35}, {NoiseKind::PhaseFlip, 0.35},
        {NoiseKind::BitFlip, 0.0},             {NoiseKind::BitFlip, 0.0},
        {NoiseKind::AmplitudeDamping, 0.6},    {NoiseKind::AmplitudeDamping, 0.6}};
    const DensityMatrix a = general_noisy_state(0.8, per_qubit);
    const DensityMatrix b = noisy_channel_state(
        0.8, {NoiseKind::PhaseFlip, 0.35, NoiseKind::AmplitudeDamping, 0.6, false});
    checks.push_back({"general-noise-consistency", max_abs_diff(a.m, b.m), 1e-12});
  }

  // --- averaging --------------------------------------------------------------
  {
    // Integral of the Eq.-(13) weight over the full domain equals 1.
    std::vector<double> gx, gw;
    detail::gauss_legendre(24, gx, gw);
    double total = 0;
    for (size_t i1 = 0; i1 < gx.size(); ++i1)
      for (size_t i2 = 0; i2 < gx.size(); ++i2)
        for (size_t i3 = 0; i3 < gx.size(); ++i3) {
          TargetState t;
          t.eta = {(gx[i1] + 1) * kPi / 4, (gx[i2] + 1) * kPi / 4,
                   (gx[i3] + 1) * kPi / 4};
          const double w = gw[i1] * gw[i2] * gw[i3] * std::pow(kPi / 4, 3);
          total += w * state_measure_weight(t) * std::pow(2 * kPi, 3);
        }
    checks.push_back({"state-measure-normalized", std::abs(total - 1.0), 1e-8});
  }
  {
    const double f = averaged_fidelity_quadrature(
        {NoiseKind::BitFlip, 0, NoiseKind::BitFlip, 0, false}, {Q, Q});
    checks.push_back({"quadrature-noiseless-one", std::abs(f - 1.0), 1e-9});
  }

  // --- B-row formula oracle vs quadrature -------------------------------------
  for (NoiseKind g : all_kinds()) {
    double dev = 0;
    for (int i = 0; i < 2; ++i) {
      const double pa = rng.next_double(), pc = rng.next_double();
      const double th = (rng.next_double() - 0.5) * kPi;
      const double xi = (rng.next_double() - 0.5) * kPi;
      const double fq = averaged_fidelity_quadrature(
          {NoiseKind::BitFlip, pa, g, pc, false}, {th, xi});
      dev = std::max(dev,
                     std::abs(fq - general_fidelity_B_row(g, pa, pc, th, xi)));
    }
    checks.push_back({std::string("brow-formula-vs-quadrature-B") + noise_char(g),
                      dev, 1e-6});
  }

  // --- analytic symmetries and values -----------------------------------------
  {
    double dev = 0;
    const NoisePair bp{NoiseKind::BitFlip, NoiseKind::PhaseFlip};
    for (int i = 0; i < 20; ++i) {
      const double pa = rng.next_double(), d = rng.next_double() * 0.5;
      dev = std::max(dev, std::abs(optimal_fidelity(bp, pa, 0.5 - d) -
                                   optimal_fidelity(bp, pa, 0.5 + d)));
    }
    checks.push_back({"bp-halfline-symmetry", dev, 1e-12});
  }
  {
    double dev = 0;
    const NoisePair pp{NoiseKind::PhaseFlip, NoiseKind::PhaseFlip};
    for (int i = 0; i < 20; ++i) {
      const double pa = rng.next_double(), pc = rng.next_double();
      const double f = optimal_fidelity(pp, pa, pc);
      dev = std::max(dev, std::abs(f - optimal_fidelity(pp, 1 - pa, pc)));
      dev = std::max(dev, std::abs(f - optimal_fidelity(pp, pa, 1 - pc)));
    }
    checks.push_back({"pp-flip-symmetry", dev, 1e-12});
  }
  {
    const NoisePair pp{NoiseKind::PhaseFlip, NoiseKind::PhaseFlip};
    double dev = 0;
    for (double pa : {0.0, 1.0})
      for (double pc : {0.0, 1.0})
        dev = std::max(dev, std::abs(optimal_fidelity(pp, pa, pc) - 1.0));
    checks.push_back({"pp-corners-one", dev, 1e-12});
  }
  {
    checks.push_back({"classical-limit-value",
                      std::abs(classical_limit() - 0.4), 0.0});
  }

  // --- optimality: numeric maximization vs analytic formulas ------------------
  {
    double dev = 0;
    for (int i = 0; i < 4; ++i) {
      const NoisePair pr{all_kinds()[rng.next_u64() % 4],
                         all_kinds()[rng.next_u64() % 4]};
      const double pa = rng.next_double(), pc = rng.next_double();
      const OptResult r = numeric_optimize({pr.alpha, pa, pr.gamma, pc, false});
      dev = std::max(dev, std::abs(r.f - optimal_fidelity(pr, pa, pc)));
    }
    checks.push_back({"numeric-vs-analytic-optimum", dev, 1e-4});
  }
  {
    double dev = 0;
    for (NoiseKind g : all_kinds()) {
      const double pa = rng.next_double(), pc = rng.next_double();
      const NoisePair pr{NoiseKind::BitFlip, g};
      const OptimalParams op = optimal_params(pr, pa, pc);
      dev = std::max(dev, std::abs(general_fidelity_B_row(g, pa, pc, op.theta_opt,
                                                          op.xi_opt) -
                                   optimal_fidelity(pr, pa, pc)));
    }
    checks.push_back({"brow-optimum-at-analytic-params", dev, 1e-9});
  }

  // --- pre-X scheme ------------------------------------------------------------
  {
    double dev = std::abs(analytic_optimal_fidelity(
                              {NoiseKind::BitFlip, NoiseKind::BitFlip}, 1, 1, true) -
                          1.0);
    for (NoiseKind g : {NoiseKind::PhaseFlip, NoiseKind::AmplitudeDamping,
                        NoiseKind::Depolarizing})
      dev = std::max(dev, std::abs(analytic_optimal_fidelity(
                                       {NoiseKind::BitFlip, g}, 1, 0, true) -
                                   1.0));
    checks.push_back({"prex-endpoints-one", dev, 1e-9});
  }
  {
    const NoisePair bb{NoiseKind::BitFlip, NoiseKind::BitFlip};
    double dev = 0;
    for (int i = 0; i < 5; ++i) {
      const double pa = rng.next_double(), pc = rng.next_double();
      dev = std::max(dev, std::abs(analytic_optimal_fidelity(bb, pa, pc, true) -
                                   analytic_optimal_fidelity(bb, 1 - pa, 1 - pc,
                                                             false)));
    }
    checks.push_back({"prex-sweep-equivalence", dev, 1e-9});
  }

  // --- quadrature plateau and Monte Carlo --------------------------------------
  {
    const NoiseScenario sc{NoiseKind::AmplitudeDamping, 0.37,
                           NoiseKind::Depolarizing, 0.58, false};
    const ControlParams ctrl{0.6, -0.3};
    const double f10 = averaged_fidelity_quadrature(sc, ctrl, {10, 10});
    const double f14 = averaged_fidelity_quadrature(sc, ctrl, {14, 14});
    checks.push_back({"quadrature-plateau", std::abs(f10 - f14), 1e-9});
  }
  {
    const NoiseScenario sc{NoiseKind::PhaseFlip, 0.3,
                           NoiseKind::AmplitudeDamping, 0.2, false};
    const ControlParams ctrl{0.5, 0.6};
    const double fq = averaged_fidelity_quadrature(sc, ctrl);
    const McResult mc = averaged_fidelity_mc(sc, ctrl, {2000, 42});
    checks.push_back({"mc-agrees-quadrature-zscore",
                      std::abs(mc.estimate - fq) / mc.std_error, 4.0});
  }

  // --- damping-comparison curve statements -------------------------------------------
  {
    const Fig5Result r = fig5_curves(11);
    double dev = 0;
    for (const auto& row : r.rows) {
      dev = std::max(dev, row.f_AA_fixed - row.f_AA_opt);       // fixed <= opt
      dev = std::max(dev, classical_limit() - row.f_AA_opt);    // opt >= 2/5
    }
    checks.push_back({"fig5-curve-ordering", dev, 1e-9});
    checks.push_back({"fig5-crossing-exists", r.crossing_found ? 0.0 : 1.0, 0.5});
  }

  // --- fidelity bounds -----------------------------------------------------------
  {
    double dev = 0;
    for (int i = 0; i < 5; ++i) {
      const NoiseScenario sc{all_kinds()[rng.next_u64() % 4], rng.next_double(),
                             all_kinds()[rng.next_u64() % 4], rng.next_double(),
                             false};
      const DensityMatrix rho =
          noisy_channel_state((rng.next_double() - 0.5) * kPi, sc);
      const double f = outcome_averaged_fidelity(
          run_protocol(rho, random_target(rng), (rng.next_double() - 0.5) * kPi));
      dev = std::max(dev, std::max(-f, f - 1.0));
    }
    checks.push_back({"outcome-fidelity-in-unit-interval", dev, 1e-12});
  }

  return checks;
}

}  // namespace jrsp
