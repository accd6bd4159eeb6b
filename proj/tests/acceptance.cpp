// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "jrsp/analytic.hpp"
#include "jrsp/averaging.hpp"
#include "jrsp/io.hpp"
#include "jrsp/noise.hpp"
#include "jrsp/optimize.hpp"
#include "jrsp/protocol.hpp"

using namespace jrsp;

namespace {
constexpr double Q = kPi / 4;
const NoiseKind kKinds[4] = {NoiseKind::BitFlip, NoiseKind::PhaseFlip,
                             NoiseKind::AmplitudeDamping, NoiseKind::Depolarizing};

int g_failed = 0;

void report(int idx, const char* name, bool ok, double worst) {
  std::printf("criterion %d  %-34s %s  (worst deviation %.3e)\n", idx, name,
              ok ? "PASS" : "FAIL", worst);
  if (!ok) ++g_failed;
}

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// 1. Perfect protocol: zero noise, theta = xi = pi/4, 100 random targets.
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  SplitMix64 rng(101);
  const DensityMatrix rho = DensityMatrix::from_pure(build_channel(Q));
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const TargetState t = sample_target(rng);
    for (const auto& b : run_protocol(rho, t, Q))
      worst = std::max(worst, std::abs(b.fidelity - 1.0));
  }
  const double favg = averaged_fidelity_quadrature(
      {NoiseKind::BitFlip, 0, NoiseKind::BitFlip, 0, false}, {Q, Q});
  worst = std::max(worst, std::abs(favg - 1.0));
  const bool ok = worst <= 1e-9 && elapsed_s(t0) < 10.0;
  report(1, "perfect-protocol", ok, worst);
}

// 2. Quadrature vs the closed-form general formula for alpha = B.
void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  SplitMix64 rng(202);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const NoiseKind g = kKinds[rng.next_u64() % 4];
    const double pa = rng.next_double(), pc = rng.next_double();
    const double th = kPi * (rng.next_double() - 0.5);
    const double xi = kPi * (rng.next_double() - 0.5);
    const double fq = averaged_fidelity_quadrature(
        {NoiseKind::BitFlip, pa, g, pc, false}, {th, xi});
    worst = std::max(worst,
                     std::abs(fq - general_fidelity_B_row(g, pa, pc, th, xi)));
  }
  report(2, "formula-oracle-equivalence", worst <= 1e-6 && elapsed_s(t0) < 300.0,
         worst);
}

// 3. Numeric optimum vs the closed-form optimal fidelity, all 16 pairs.
void criterion3() {
  SplitMix64 rng(303);
  double worst = 0, worst_b = 0;
  for (NoiseKind a : kKinds)
    for (NoiseKind g : kKinds)
      for (int i = 0; i < 20; ++i) {
        const double pa = rng.next_double(), pc = rng.next_double();
        const NoisePair pr{a, g};
        const double fa = optimal_fidelity(pr, pa, pc);
        const OptResult r = numeric_optimize({a, pa, g, pc, false});
        worst = std::max(worst, std::abs(r.f - fa));
        if (a == NoiseKind::BitFlip) {
          const OptimalParams op = optimal_params(pr, pa, pc);
          worst_b = std::max(
              worst_b, std::abs(general_fidelity_B_row(g, pa, pc, op.theta_opt,
                                                       op.xi_opt) -
                                fa));
        }
      }
  report(3, "optimal-formula-verification", worst <= 1e-4 && worst_b <= 1e-6,
         std::max(worst, worst_b));
}

// 4. (B,P) optimal fidelity symmetric about p_c = 1/2.
void criterion4() {
  SplitMix64 rng(404);
  const NoisePair pr{NoiseKind::BitFlip, NoiseKind::PhaseFlip};
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const double pa = rng.next_double(), d = 0.5 * rng.next_double();
    worst = std::max(worst, std::abs(optimal_fidelity(pr, pa, 0.5 - d) -
                                     optimal_fidelity(pr, pa, 0.5 + d)));
  }
  report(4, "phase-flip-symmetry", worst <= 1e-12, worst);
}

// 5. (P,P) quantum domain covers the full lattice.
void criterion5() {
  const NoisePair pr{NoiseKind::PhaseFlip, NoiseKind::PhaseFlip};
  double worst = 0;
  bool ok = true;
  for (int i = 0; i <= 100; ++i)
    for (int j = 0; j <= 100; ++j) {
      const double pa = i / 100.0, pc = j / 100.0;
      const double f = optimal_fidelity(pr, pa, pc);
      if (f < classical_limit() - 1e-12) ok = false;
      const bool on_segment =
          std::abs((2 * pa - 1) * (2 * pc - 1)) <= 1e-12;
      if (on_segment)
        worst = std::max(worst, std::abs(f - classical_limit()));
      else if (f <= classical_limit() + 1e-12)
        ok = false;
    }
  for (double pa : {0.0, 1.0})
    for (double pc : {0.0, 1.0})
      worst = std::max(worst, std::abs(optimal_fidelity(pr, pa, pc) - 1.0));
  report(5, "pp-full-quantum-domain", ok && worst <= 1e-12, worst);
}

// 6. Pre-X endpoints reach perfect fidelity.
void criterion6() {
  double worst = std::abs(analytic_optimal_fidelity(
                     {NoiseKind::BitFlip, NoiseKind::BitFlip}, 1, 1, true) -
                 1.0);
  for (NoiseKind g :
       {NoiseKind::PhaseFlip, NoiseKind::AmplitudeDamping, NoiseKind::Depolarizing})
    worst = std::max(
        worst, std::abs(analytic_optimal_fidelity({NoiseKind::BitFlip, g}, 1, 0,
                                                  true) -
                        1.0));
  report(6, "pre-x-endpoints", worst <= 1e-9, worst);
}

// 7. Damping-comparison curves: dominance, classical bound, and a crossing in (0,1).
void criterion7() {
  const Fig5Result r = fig5_curves(101);
  bool ok = r.crossing_found && r.crossing_pA > 0 && r.crossing_pA < 1;
  double worst = 0;
  for (const auto& row : r.rows) {
    worst = std::max(worst, row.f_AA_fixed - row.f_AA_opt);
    if (row.f_AA_opt < classical_limit() - 1e-12) ok = false;
    if (row.p_A > r.crossing_pA + 1e-9 && row.f_AA_opt <= row.f_A0_opt) ok = false;
    if (row.p_A < r.crossing_pA - 1e-9 && row.f_AA_opt > row.f_A0_opt + 1e-9)
      ok = false;
  }
  report(7, "fig5-crossing", ok && worst <= 1e-9, worst);
}

// 8. Channel sanity: Kraus completeness, density-matrix invariants, branches.
void criterion8() {
  SplitMix64 rng(808);
  double worst = 0;
  bool psd_ok = true;
  for (NoiseKind kind : kKinds)
    for (int i = 0; i < 20; ++i) {
      ComplexMatrix s(2, 2);
      for (const auto& K : kraus_set(kind, rng.next_double()).operators)
        s += dagger(K) * K;
      worst = std::max(worst, max_abs_diff(s, ComplexMatrix::identity(2)));
    }
  for (int i = 0; i < 100; ++i) {
    const NoiseScenario sc{kKinds[rng.next_u64() % 4], rng.next_double(),
                           kKinds[rng.next_u64() % 4], rng.next_double(),
                           (rng.next_u64() & 1) != 0};
    const DensityMatrix rho =
        noisy_channel_state(kPi * (rng.next_double() - 0.5), sc);
    worst = std::max(worst, hermiticity_defect(rho.m));
    worst = std::max(worst, std::abs(std::real(trace(rho.m)) - 1.0));
    if (!is_psd(rho.m)) psd_ok = false;
    const auto branches = run_protocol(rho, sample_target(rng),
                                       kPi * (rng.next_double() - 0.5));
    double pk = 0;
    for (int k = 0; k < 4; ++k) {
      pk += branches[4 * k].p_k;
      double pkm = 0;
      for (int m = 0; m < 4; ++m) pkm += branches[4 * k + m].p_km;
      worst = std::max(worst, std::abs(pkm - 1.0));
    }
    worst = std::max(worst, std::abs(pk - 1.0));
  }
  report(8, "channel-sanity-suite", psd_ok && worst <= 1e-10, worst);
}

// 9. Quadrature plateau between orders (10,10) and (14,14).
void criterion9() {
  SplitMix64 rng(909);
  double worst = 0;
  for (int i = 0; i < 5; ++i) {
    const NoiseScenario sc{kKinds[rng.next_u64() % 4], rng.next_double(),
                           kKinds[rng.next_u64() % 4], rng.next_double(), false};
    const ControlParams ctrl{kPi * (rng.next_double() - 0.5),
                             kPi * (rng.next_double() - 0.5)};
    const double f10 = averaged_fidelity_quadrature(sc, ctrl, {10, 10});
    const double f14 = averaged_fidelity_quadrature(sc, ctrl, {14, 14});
    worst = std::max(worst, std::abs(f10 - f14));
  }
  report(9, "quadrature-plateau", worst < 1e-9, worst);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%s\n", g_failed == 0 ? "all criteria passed"
                                    : "some criteria FAILED");
  return g_failed == 0 ? 0 : 1;
}
